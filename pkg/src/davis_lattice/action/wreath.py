"""
Iterated wreath products H_n = C_{q_1} wr C_{q_2} wr ... wr C_{q_{n-1}}.

An element of H_n (n >= 2) is a tuple of q_{n-1} children in H_{n-1} together with a shift in
C_{q_{n-1}}; H_1 is trivial. Elements are numbered shift-major, children in lexicographic order,
so that the identity is 0 and the numbering matches elements().
"""
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import List, Tuple

import numpy as np

from davis_lattice.config import Bounds
from davis_lattice.coxeter.group import FiniteGroupTable
from davis_lattice.error import OrderBoundError
from davis_lattice.nerve.witness import Witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WreathElement:
    children: Tuple["WreathElement", ...] = ()
    shift: int = 0

    @property
    def is_identity(self) -> bool:
        return self.shift == 0 and all(child.is_identity for child in self.children)

    def __str__(self) -> str:
        if not self.children:
            return "1"
        return "(" + ", ".join(str(c) for c in self.children) + f"; {self.shift})"


@dataclass(frozen=True)
class WreathGroup:
    """H_n for the cycle lengths qs = (q_1, ..., q_{n-1})."""

    qs: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.qs) + 1

    @cached_property
    def order(self) -> int:
        """q_1^{q_2 ... q_{n-1}} q_2^{q_3 ... q_{n-1}} ... q_{n-1}"""
        return math.prod(q ** math.prod(self.qs[i + 1:]) for i, q in enumerate(self.qs))

    @cached_property
    def order_recursive(self) -> int:
        order = 1
        for q in self.qs:
            order = order ** q * q
        return order

    def sub(self) -> "WreathGroup":
        """H_{n-1}"""
        return WreathGroup(self.qs[:-1])

    def identity(self) -> WreathElement:
        if not self.qs:
            return WreathElement()
        child = self.sub().identity()
        return WreathElement((child,) * self.qs[-1], 0)

    def multiply(self, x: WreathElement, y: WreathElement) -> WreathElement:
        """(c, r)(c', r') = (c_j c'_{j-r}, r + r')"""
        if not self.qs:
            return x
        q, sub = self.qs[-1], self.sub()
        children = tuple(sub.multiply(x.children[j], y.children[(j - x.shift) % q]) for j in range(q))
        return WreathElement(children, (x.shift + y.shift) % q)

    def inverse(self, x: WreathElement) -> WreathElement:
        if not self.qs:
            return x
        q, sub = self.qs[-1], self.sub()
        children = tuple(sub.inverse(x.children[(j + x.shift) % q]) for j in range(q))
        return WreathElement(children, (-x.shift) % q)

    def index(self, x: WreathElement) -> int:
        if not self.qs:
            return 0
        q, sub = self.qs[-1], self.sub()
        m = sub.order
        value = 0
        for child in x.children:
            value = value * m + sub.index(child)
        return x.shift * m ** q + value

    def element(self, index: int) -> WreathElement:
        if not self.qs:
            return WreathElement()
        q, sub = self.qs[-1], self.sub()
        m = sub.order
        shift, rest = divmod(index, m ** q)
        digits = []
        for _ in range(q):
            rest, digit = divmod(rest, m)
            digits.append(sub.element(digit))
        return WreathElement(tuple(reversed(digits)), shift)

    def elements(self, bounds: Bounds = Bounds()) -> List[WreathElement]:
        """
        Enumerate H_n in index order
        :param bounds: Resource bounds (max_wreath_order applies)
        :return: List of elements, identity first
        """
        if self.order > bounds.max_wreath_order:
            raise OrderBoundError(
                f"|H_{self.n}| = {self.order} exceeds max_wreath_order {bounds.max_wreath_order}",
                "max_wreath_order",
            )
        return self._elements()

    def _elements(self) -> List[WreathElement]:
        if not self.qs:
            return [WreathElement()]
        q, inner = self.qs[-1], self.sub()._elements()
        return [WreathElement(children, r) for r in range(q) for children in product(inner, repeat=q)]

    def generators(self) -> List[WreathElement]:
        """The shift of every level l = 2..n, embedded through the first child of each level above"""
        result = []
        for level in range(2, self.n + 1):
            element = WreathGroup(self.qs[:level - 1]).identity()
            element = WreathElement(element.children, 1)
            for upper in range(level, self.n):
                q = self.qs[upper - 1]
                rest = WreathGroup(self.qs[:upper - 1]).identity()
                element = WreathElement((element,) + (rest,) * (q - 1), 0)
            result.append(element)
        return result

    def table(self, bounds: Bounds = Bounds()) -> FiniteGroupTable:
        """
        Multiplication table in index order
        :param bounds: Resource bounds (max_action_order applies)
        :return: FiniteGroupTable with generators a1, ..., a_{n-1}
        """
        if self.order > bounds.max_action_order:
            raise OrderBoundError(
                f"|H_{self.n}| = {self.order} exceeds max_action_order {bounds.max_action_order}",
                "max_action_order",
            )
        mult = _wreath_table(self.qs)
        gen_images = {f"a{level}": self.index(g) for level, g in enumerate(self.generators(), start=1)}
        logger.debug("Materialized H_%d of order %d", self.n, self.order)
        return FiniteGroupTable(self.order, gen_images, mult=mult, name=f"H_{self.n}")


def _wreath_table(qs: Tuple[int, ...]) -> np.ndarray:
    if not qs:
        return np.zeros((1, 1), dtype=np.int64)
    inner = _wreath_table(qs[:-1])
    m, q = inner.shape[0], qs[-1]
    block = m ** q
    idx = np.arange(block * q)
    shift = idx // block
    digits = np.stack([(idx // m ** (q - 1 - j)) % m for j in range(q)], axis=1)
    result = ((shift[:, None] + shift[None, :]) % q) * block
    columns = np.arange(len(idx))[None, :]
    for j in range(q):
        partner = digits[columns, ((j - shift) % q)[:, None]]
        result += inner[digits[:, j][:, None], partner] * m ** (q - 1 - j)
    return result


def wreath_group(wit: Witness, n: int) -> WreathGroup:
    """
    H_n for a witness
    :param wit: Witness providing q_1, q_2
    :param n: Truncation level
    :return: WreathGroup with cycle lengths q_1, ..., q_{n-1}
    """
    if n < 1:
        raise ValueError(f"Truncation level must be at least 1, got {n}")
    return WreathGroup(tuple(wit.q(k) for k in range(1, n)))
