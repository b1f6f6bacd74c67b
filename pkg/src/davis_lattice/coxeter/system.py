import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple, Union

from davis_lattice.error import ConstructionError

INFINITY = math.inf

Label = Union[int, float]


def format_label(label: Label) -> str:
    return "inf" if label == INFINITY else str(label)


@dataclass(frozen=True)
class CoxeterSystem:
    """
    A Coxeter system given by its ordered generators and its symmetric label matrix.

    Labels are 1 on the diagonal, integers >= 2 or INFINITY elsewhere.
    """

    generators: Tuple[str, ...]
    matrix: Tuple[Tuple[Label, ...], ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ConstructionError(f"Duplicate generators in {list(self.generators)}")
        if len(self.matrix) != len(self.generators) or any(len(r) != len(self.generators) for r in self.matrix):
            raise ConstructionError("Label matrix shape does not match the generator count")
        for i, s in enumerate(self.generators):
            if self.matrix[i][i] != 1:
                raise ConstructionError(f"Diagonal label for {s} must be 1")
            for j in range(i + 1, len(self.generators)):
                label = self.matrix[i][j]
                if label != self.matrix[j][i]:
                    raise ConstructionError(f"Label matrix is asymmetric at ({s}, {self.generators[j]})")
                if label != INFINITY and (not float(label).is_integer() or label < 2):
                    raise ConstructionError(
                        f"Label for ({s}, {self.generators[j]}) must be an integer >= 2 or inf, got {label}"
                    )

    @classmethod
    def from_labels(cls, generators: Iterable[str], labels: Mapping[Tuple[str, str], Label],
                    default: Label = INFINITY) -> "CoxeterSystem":
        """
        Build a system from finite (or explicit) off-diagonal labels
        :param generators: Generator names in order
        :param labels: Map (s, t) -> m_st, one direction suffices
        :param default: Label used for unlisted pairs
        :return: CoxeterSystem object
        """
        gens = tuple(generators)
        position = {s: i for i, s in enumerate(gens)}
        rows: List[List[Label]] = [
            [1 if i == j else default for j in range(len(gens))] for i in range(len(gens))
        ]
        for (s, t), label in labels.items():
            if s not in position or t not in position:
                raise ConstructionError(f"Unknown generator in label ({s}, {t})")
            if s == t:
                raise ConstructionError(f"Diagonal label for {s} cannot be set")
            label = label if label == INFINITY else int(label)
            rows[position[s]][position[t]] = label
            rows[position[t]][position[s]] = label
        return cls(gens, tuple(tuple(r) for r in rows))

    @cached_property
    def _position(self) -> Dict[str, int]:
        return {s: i for i, s in enumerate(self.generators)}

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, s: str) -> int:
        try:
            return self._position[s]
        except KeyError as e:
            raise ConstructionError(f"Unknown generator: {s}") from e

    def m(self, s: str, t: str) -> Label:
        return self.matrix[self.index(s)][self.index(t)]

    def ordered(self, members: Iterable[str]) -> Tuple[str, ...]:
        """Members sorted by declaration order"""
        return tuple(sorted(set(members), key=self.index))

    def format_type(self, members: Iterable[str]) -> str:
        return "{" + ",".join(self.ordered(members)) + "}"

    def restrict(self, members: Iterable[str]) -> "CoxeterSystem":
        gens = self.ordered(members)
        return CoxeterSystem(gens, tuple(tuple(self.m(s, t) for t in gens) for s in gens))

    def finite_pairs(self) -> List[Tuple[str, str, int]]:
        return [
            (s, t, int(self.m(s, t)))
            for i, s in enumerate(self.generators)
            for t in self.generators[i + 1:]
            if self.m(s, t) != INFINITY
        ]

    def subsets_key(self, members: Iterable[str]) -> Tuple[int, Tuple[int, ...]]:
        """Sort key ordering subsets by size, then by generator positions"""
        positions = tuple(sorted(self.index(s) for s in members))
        return len(positions), positions

    def to_document(self) -> str:
        """
        Serialize system into the line-oriented document format
        :return: Document text
        """
        lines = [f"generators: {' '.join(self.generators)}"]
        lines.extend(f"m {s} {t} = {k}" for s, t, k in self.finite_pairs())
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        finite = ", ".join(f"m({s},{t})={k}" for s, t, k in self.finite_pairs())
        return f"CoxeterSystem[{' '.join(self.generators)}; {finite or 'free'}]"


TypeSet = FrozenSet[str]
