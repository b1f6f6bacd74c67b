"""
Finite groups as explicit tables.

Coxeter groups W_T are enumerated by Todd-Coxeter (HLT strategy) over the trivial subgroup;
elements are numbered breadth-first along ShortLex words so the identity is always 0.
"""
import logging
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from davis_lattice.config import Bounds
from davis_lattice.coxeter.spherical import SphericalSubset, is_spherical, spherical_order
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.coxeter.words import Word
from davis_lattice.error import ConstructionError, EnumerationError, OrderBoundError

logger = logging.getLogger(__name__)


class FiniteGroupTable:
    """
    A fully enumerated finite group.

    Either the right regular action of the generators (``right``) or the whole multiplication
    table must be given; the table is derived from the action on first use.
    """

    def __init__(self, size: int, gen_images: Dict[str, int], element_words: Optional[List[Word]] = None,
                 right: Optional[Dict[str, np.ndarray]] = None, mult: Optional[np.ndarray] = None,
                 parents: Optional[Tuple[np.ndarray, List[str]]] = None, name: str = ""):
        if right is None and mult is None:
            raise ValueError("Either a generator action or a multiplication table is required")
        self.size = size
        self.gen_images = dict(gen_images)
        self.element_words = element_words
        self.name = name
        self._right = right
        self._parents = parents
        if mult is not None:
            self.__dict__["mult"] = np.asarray(mult, dtype=np.int64)

    @cached_property
    def mult(self) -> np.ndarray:
        parent, letters = self._parents
        table = np.empty((self.size, self.size), dtype=np.int64)
        table[:, 0] = np.arange(self.size)
        for h in range(1, self.size):
            table[:, h] = self._right[letters[h]][table[:, parent[h]]]
        return table

    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmax(self.mult == 0, axis=1)

    def multiply(self, g: int, h: int) -> int:
        return int(self.mult[g, h])

    def inverse(self, g: int) -> int:
        return int(self.inv[g])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1"""
        return int(self.mult[self.mult[g, x], self.inv[g]])

    def evaluate(self, word: Iterable[str]) -> int:
        g = 0
        for letter in word:
            if self._right is not None and letter in self._right:
                g = int(self._right[letter][g])
            else:
                g = int(self.mult[g, self.gen_images[letter]])
        return g

    def order_of(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = int(self.mult[x, g])
            k += 1
        return k

    def closure(self, generators: Iterable[int]) -> List[int]:
        """
        Subgroup generated by the given elements
        :param generators: Element indices
        :return: Sorted member indices
        """
        generators = list(generators)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for e in frontier:
                for g in generators:
                    x = int(self.mult[e, g])
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        return sorted(seen)

    def word(self, g: int) -> Word:
        if self.element_words is None:
            raise ConstructionError(f"Group {self.name} carries no element words")
        return self.element_words[g]

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteGroupTable({self.name or '?'}, order={self.size})"


def is_homomorphism(src: FiniteGroupTable, dst: FiniteGroupTable, images: np.ndarray) -> bool:
    images = np.asarray(images)
    return bool(np.array_equal(images[src.mult], dst.mult[np.ix_(images, images)]))


class _TableFull(Exception):
    pass


class _CosetTable:
    """Coset table over the trivial subgroup for a presentation by involutions."""

    def __init__(self, rank: int, relators: List[Tuple[int, ...]], limit: int):
        self.rank = rank
        self.relators = relators
        self.limit = limit
        self.table: List[List[int]] = [[-1] * rank]
        self.parent: List[int] = [0]
        self.coincidences = 0

    def _rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            nxt = self.parent[c]
            self.parent[c] = root
            c = nxt
        return root

    def _live(self, c: int) -> bool:
        return self.parent[c] == c

    def _define(self, c: int, x: int):
        if len(self.table) >= self.limit:
            raise _TableFull()
        d = len(self.table)
        self.table.append([-1] * self.rank)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x] = c

    def _merge(self, a: int, b: int, queue: List[int]):
        a, b = self._rep(a), self._rep(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            self.parent[b] = a
            queue.append(b)

    def _coincidence(self, a: int, b: int):
        self.coincidences += 1
        queue: List[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.rank):
                f = self.table[e][x]
                if f < 0:
                    continue
                # generators are involutions, so f.x = e is the back pointer
                self.table[f][x] = -1
                e1, f1 = self._rep(e), self._rep(f)
                if self.table[e1][x] >= 0:
                    self._merge(f1, self.table[e1][x], queue)
                elif self.table[f1][x] >= 0:
                    self._merge(e1, self.table[f1][x], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][x] = e1

    def _scan(self, c: int, w: Tuple[int, ...], fill: bool):
        f, b, i, j = c, c, 0, len(w) - 1
        while True:
            while i <= j and self.table[f][w[i]] >= 0:
                f = self.table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i and self.table[b][w[j]] >= 0:
                b = self.table[b][w[j]]
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if i == j:
                self.table[f][w[i]] = b
                self.table[b][w[i]] = f
                return
            if not fill:
                return
            self._define(f, w[i])

    def _lookahead(self) -> bool:
        while True:
            before = self.coincidences
            for c in range(len(self.table)):
                for w in self.relators:
                    if not self._live(c):
                        break
                    self._scan(c, w, fill=False)
            if self.coincidences == before:
                break
        return all(
            min(self.table[c]) >= 0 for c in range(len(self.table)) if self._live(c)
        )

    def _compact(self, c: int) -> int:
        """Drop dead cosets keeping the order of live ones; returns the new position of c"""
        live = [d for d in range(len(self.table)) if self._live(d)]
        number = {d: k for k, d in enumerate(live)}
        self.table = [[number[self._rep(e)] if e >= 0 else -1 for e in self.table[d]] for d in live]
        self.parent = list(range(len(live)))
        return sum(1 for d in live if d < c)

    def run(self):
        c = 0
        while True:
            try:
                while c < len(self.table):
                    for w in self.relators:
                        if not self._live(c):
                            break
                        self._scan(c, w, fill=True)
                    if self._live(c):
                        for x in range(self.rank):
                            if self.table[c][x] < 0:
                                self._define(c, x)
                    c += 1
                return
            except _TableFull:
                logger.debug("Coset table full at %d cosets, trying lookahead", len(self.table))
                if self._lookahead():
                    return
                size = len(self.table)
                c = self._compact(c)
                if len(self.table) == size:
                    raise EnumerationError(
                        f"Coset enumeration exceeded {self.limit} cosets", "max_coset_table"
                    ) from None
                logger.debug("Compacted coset table from %d to %d cosets", size, len(self.table))

    def regular_action(self, letters: Sequence[str]) -> FiniteGroupTable:
        """Renumber live cosets breadth-first and return the group they carry"""
        number = {0: 0}
        order = [0]
        words: List[Word] = [()]
        parent = [0]
        last = [""]
        head = 0
        while head < len(order):
            c = order[head]
            for x, letter in enumerate(letters):
                d = self._rep(self.table[c][x])
                if d not in number:
                    number[d] = len(order)
                    order.append(d)
                    words.append(words[head] + (letter,))
                    parent.append(head)
                    last.append(letter)
            head += 1
        right = {
            letter: np.array([number[self._rep(self.table[c][x])] for c in order], dtype=np.int64)
            for x, letter in enumerate(letters)
        }
        gen_images = {letter: int(right[letter][0]) for letter in letters}
        return FiniteGroupTable(
            len(order), gen_images, words, right=right, parents=(np.array(parent), last),
            name="W_{" + ",".join(letters) + "}",
        )


def coxeter_relators(sys: CoxeterSystem, members: Sequence[str]) -> List[Tuple[int, ...]]:
    relators: List[Tuple[int, ...]] = [(i, i) for i in range(len(members))]
    for i, j in combinations(range(len(members)), 2):
        m = sys.m(members[i], members[j])
        relators.append((i, j) * int(m))
    return relators


@lru_cache(maxsize=None)
def _enumerate(sys: CoxeterSystem, members: Tuple[str, ...], limit: int) -> FiniteGroupTable:
    table = _CosetTable(len(members), coxeter_relators(sys, members), limit)
    table.run()
    group = table.regular_action(members)
    logger.debug("Enumerated %s: %d elements from %d cosets", group.name, group.size, len(table.table))
    return group


def enumerate_group(sys: CoxeterSystem, members: Union[SphericalSubset, Iterable[str]],
                    bounds: Bounds = Bounds()) -> FiniteGroupTable:
    """
    Enumerate the finite special subgroup W_T
    :param sys: Coxeter system
    :param members: Spherical subset T (or its generators)
    :param bounds: Resource bounds (max_group_order, max_coset_table apply)
    :return: FiniteGroupTable of W_T
    """
    subset = members if isinstance(members, SphericalSubset) else is_spherical(sys, members)
    if subset is None:
        raise ConstructionError(f"Subset {sorted(members)} is not spherical")
    order = spherical_order(subset)
    if order > bounds.max_group_order:
        raise OrderBoundError(
            f"W_T of type {subset.type_name} has order {order} above bound {bounds.max_group_order}",
            "max_group_order",
        )
    if not subset.members:
        return FiniteGroupTable(1, {}, [()], mult=np.zeros((1, 1), dtype=np.int64), name="W_{}")
    return _enumerate(sys, subset.members, bounds.max_coset_table)


class Subgroup:
    def __init__(self, parent: FiniteGroupTable, member_indices: Iterable[int]):
        self.parent = parent
        self.member_indices = tuple(sorted(set(member_indices)))

    @property
    def order(self) -> int:
        return len(self.member_indices)

    @property
    def index_in_parent(self) -> int:
        return self.parent.size // self.order

    def __contains__(self, g: int) -> bool:
        return g in self._positions

    @cached_property
    def _positions(self) -> Dict[int, int]:
        return {g: i for i, g in enumerate(self.member_indices)}

    def is_closed(self) -> bool:
        members = np.array(self.member_indices)
        products = self.parent.mult[np.ix_(members, members)]
        return (
            0 in self._positions
            and all(int(p) in self._positions for p in products.ravel())
            and all(int(self.parent.inv[g]) in self._positions for g in members)
        )

    def as_table(self, name: str = "") -> Tuple[FiniteGroupTable, np.ndarray]:
        """
        Re-index the subgroup as a group of its own
        :param name: Table name
        :return: Tuple (table, embedding into the parent)
        """
        members = np.array(self.member_indices, dtype=np.int64)
        lookup = np.full(self.parent.size, -1, dtype=np.int64)
        lookup[members] = np.arange(len(members))
        mult = lookup[self.parent.mult[np.ix_(members, members)]]
        words = [self.parent.element_words[g] for g in members] if self.parent.element_words else None
        gen_images = {
            letter: int(lookup[g]) for letter, g in self.parent.gen_images.items() if lookup[g] >= 0
        }
        return FiniteGroupTable(len(members), gen_images, words, mult=mult, name=name), members


def halving(sys: CoxeterSystem, members: Union[SphericalSubset, Iterable[str]], s: str,
            bounds: Bounds = Bounds()) -> Optional[Subgroup]:
    """
    Compute Half_s(W_T) if it exists
    :param sys: Coxeter system
    :param members: Spherical subset T containing s
    :param s: Generator along which to halve
    :param bounds: Resource bounds
    :return: Index-2 Subgroup generated by T - {s} and sTs, or None
    """
    group = enumerate_group(sys, members, bounds)
    if s not in group.gen_images:
        raise ConstructionError(f"Generator {s} does not belong to the subset")
    others = [t for t in group.gen_images if t != s]
    generators = [group.gen_images[t] for t in others] + [group.evaluate((s, t, s)) for t in others]
    members_of_half = group.closure(generators)
    if 2 * len(members_of_half) != group.size:
        return None
    return Subgroup(group, members_of_half)


def halvable_generators(sys: CoxeterSystem, members: Iterable[str], bounds: Bounds = Bounds()) -> List[str]:
    members = sys.ordered(members)
    return [s for s in members if halving(sys, members, s, bounds) is not None]


def subgroup_cosets(group: FiniteGroupTable, subgroup: Subgroup) -> List[List[int]]:
    """
    Partition a group into left cosets gH
    :param group: Ambient group
    :param subgroup: Subgroup H
    :return: Cosets as sorted index lists, H first
    """
    members = np.array(subgroup.member_indices, dtype=np.int64)
    label = np.full(group.size, -1, dtype=np.int64)
    cosets: List[List[int]] = []
    for g in range(group.size):
        if label[g] >= 0:
            continue
        coset = np.unique(group.mult[g, members])
        label[coset] = len(cosets)
        cosets.append([int(x) for x in coset])
    return cosets


def coset_labels(group: FiniteGroupTable, members: Iterable[int]) -> Tuple[np.ndarray, int]:
    """
    Label every element by its left coset of the subgroup spanned by members
    :param group: Ambient group
    :param members: Subgroup elements
    :return: Tuple (labels array, number of cosets)
    """
    members = np.unique(np.asarray(list(members), dtype=np.int64))
    label = np.full(group.size, -1, dtype=np.int64)
    count = 0
    for g in range(group.size):
        if label[g] < 0:
            label[group.mult[g, members]] = count
            count += 1
    return label, count


def cyclic_group(n: int) -> FiniteGroupTable:
    idx = np.arange(n)
    mult = (idx[:, None] + idx[None, :]) % n
    words: List[Word] = [("a",) * k for k in range(n)]
    return FiniteGroupTable(n, {"a": 1 % n}, words, mult=mult, name=f"C{n}")


def semidirect_product(normal: FiniteGroupTable, acting: FiniteGroupTable, action: np.ndarray,
                       name: str = "") -> FiniteGroupTable:
    """
    Build G x| S with (g, h)(g', h') = (g * action[h](g'), h h')
    :param normal: Normal factor G
    :param acting: Acting factor S
    :param action: Array of shape (|S|, |G|); row h is the automorphism of G attached to h
    :param name: Table name
    :return: Table indexed by g * |S| + h
    """
    n, k = normal.size, acting.size
    idx = np.arange(n * k)
    g, h = idx // k, idx % k
    first = normal.mult[g[:, None], np.asarray(action)[h[:, None], g[None, :]]]
    second = acting.mult[h[:, None], h[None, :]]
    return FiniteGroupTable(n * k, {}, None, mult=first * k + second, name=name)
