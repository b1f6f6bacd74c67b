"""Small categories without loops (scwols) and their barycentric subdivisions."""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from davis_lattice.report import CheckReport


def payload_type(payload: Any) -> Optional[FrozenSet[str]]:
    """Type set carried by a vertex payload, None when the vertex has no single type"""
    if isinstance(payload, frozenset):
        return payload
    if isinstance(payload, Chain):
        return payload_type(payload.payloads[0]) if len(payload.payloads) == 1 else None
    return getattr(payload, "type", None)


@dataclass(frozen=True)
class Chain:
    """Vertex of a barycentric subdivision: a sequence of composable edges starting at vertices[0]."""

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    payloads: Tuple[Any, ...]

    @property
    def head(self) -> int:
        return self.vertices[0]

    @property
    def type(self) -> Optional[FrozenSet[str]]:
        return payload_type(self)

    def __str__(self) -> str:
        return "<" + " < ".join(str(p) for p in self.payloads) + ">"


@dataclass(frozen=True, eq=False)
class Scwol:
    """
    Vertices with payloads, edges (i(a), t(a)) and the composition (a, b) -> ab,
    defined when i(a) = t(b).
    """

    vertices: Tuple[Any, ...]
    edges: Tuple[Tuple[int, int], ...]
    composition: Mapping[Tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_poset(cls, payloads: Sequence[Any], precedes: Callable[[Any, Any], bool]) -> "Scwol":
        """
        Scwol of a strict partial order
        :param payloads: Elements of the poset
        :param precedes: Transitive relation; an edge runs from x to y whenever precedes(x, y)
        :return: Scwol with exactly one edge per related pair
        """
        payloads = tuple(payloads)
        edges = [(x, y) for x in range(len(payloads)) for y in range(len(payloads))
                 if x != y and precedes(payloads[x], payloads[y])]
        return cls.from_relation(payloads, edges)

    @classmethod
    def from_relation(cls, payloads: Sequence[Any], pairs: Sequence[Tuple[int, int]]) -> "Scwol":
        """Scwol of a transitive relation given as its list of related index pairs"""
        edges = tuple(sorted(set(pairs)))
        index = {e: a for a, e in enumerate(edges)}
        composition: Dict[Tuple[int, int], int] = {}
        by_initial: Dict[int, List[int]] = {}
        for a, (i, _) in enumerate(edges):
            by_initial.setdefault(i, []).append(a)
        for b, (ib, tb) in enumerate(edges):
            for a in by_initial.get(tb, []):
                composition[(a, b)] = index[(ib, edges[a][1])]
        return cls(tuple(payloads), edges, composition)

    def i(self, a: int) -> int:
        return self.edges[a][0]

    def t(self, a: int) -> int:
        return self.edges[a][1]

    @cached_property
    def _out(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {v: [] for v in range(len(self.vertices))}
        for a, (i, _) in enumerate(self.edges):
            out[i].append(a)
        return out

    @cached_property
    def _in(self) -> Dict[int, List[int]]:
        into: Dict[int, List[int]] = {v: [] for v in range(len(self.vertices))}
        for a, (_, t) in enumerate(self.edges):
            into[t].append(a)
        return into

    @cached_property
    def edge_index(self) -> Dict[Tuple[int, int], int]:
        """Edge by endpoints; only meaningful for scwols with at most one edge per pair"""
        return {e: a for a, e in enumerate(self.edges)}

    def out_edges(self, v: int) -> List[int]:
        return self._out.get(v, [])

    def in_edges(self, v: int) -> List[int]:
        return self._in.get(v, [])

    def composable_pairs(self) -> List[Tuple[int, int]]:
        return [(a, b) for b in range(len(self.edges)) for a in self.out_edges(self.t(b))]

    def composable_triples(self) -> List[Tuple[int, int, int]]:
        return [
            (a, b, c)
            for c in range(len(self.edges))
            for b in self.out_edges(self.t(c))
            for a in self.out_edges(self.t(b))
        ]

    def compose(self, a: int, b: int) -> int:
        return self.composition[(a, b)]

    def compose_path(self, path: Sequence[int]) -> int:
        """Composite of edges listed in travel order (first edge leaves the start vertex)"""
        result = path[0]
        for a in path[1:]:
            result = self.compose(a, result)
        return result

    def __len__(self) -> int:
        return len(self.vertices)


def validate_scwol(scwol: Scwol) -> CheckReport:
    """
    Check the scwol axioms exhaustively
    :param scwol: Scwol to check
    :return: CheckReport listing violations
    """
    report = CheckReport("scwol")
    for a, (i, t) in enumerate(scwol.edges):
        if i == t:
            report.add("i(a) != t(a)", f"edge {a}", f"loop at vertex {i}")
    for (a, b), ab in scwol.composition.items():
        if scwol.i(a) != scwol.t(b):
            report.add("composable", f"edges {a},{b}", "composition defined although i(a) != t(b)")
            continue
        if scwol.i(ab) != scwol.i(b) or scwol.t(ab) != scwol.t(a):
            report.add("i(ab)=i(b), t(ab)=t(a)", f"edges {a},{b}", f"composite {ab}")
    for a, b in scwol.composable_pairs():
        if (a, b) not in scwol.composition:
            report.add("composable", f"edges {a},{b}", "composition missing")
    for a, b, c in scwol.composable_triples():
        try:
            left = scwol.compose(scwol.compose(a, b), c)
            right = scwol.compose(a, scwol.compose(b, c))
        except KeyError:
            continue
        if left != right:
            report.add("associativity", f"edges {a},{b},{c}", f"(ab)c={left} a(bc)={right}")
    report.stats = {"vertices": len(scwol.vertices), "edges": len(scwol.edges)}
    return report


@dataclass(frozen=True, eq=False)
class Subdivision:
    """Barycentric subdivision of a scwol together with the chain bookkeeping."""

    base: Scwol
    scwol: Scwol
    chains: Tuple[Chain, ...]
    index: Mapping[Tuple[int, Tuple[int, ...]], int]

    def chain_index(self, head: int, edges: Tuple[int, ...]) -> int:
        return self.index[(head, edges)]

    def head(self, v: int) -> int:
        return self.chains[v].head

    def base_edge(self, a: int) -> Optional[int]:
        """Base edge from the head of i(a) to the head of t(a), None when the heads coincide"""
        return self._base_edges[a]

    @cached_property
    def _base_edges(self) -> Tuple[Optional[int], ...]:
        result = []
        for i, t in self.scwol.edges:
            top, face = self.chains[i], self.chains[t]
            start = top.vertices.index(face.head)
            result.append(self.base.compose_path(top.edges[:start]) if start else None)
        return tuple(result)


def _chains(scwol: Scwol) -> List[Tuple[int, Tuple[int, ...]]]:
    chains = [(v, ()) for v in range(len(scwol.vertices))]
    frontier = list(chains)
    while frontier:
        extended = []
        for head, edges in frontier:
            last = scwol.t(edges[-1]) if edges else head
            extended.extend((head, edges + (a,)) for a in scwol.out_edges(last))
        chains.extend(extended)
        frontier = extended
    return chains


def subdivide(scwol: Scwol) -> Subdivision:
    """
    Barycentric subdivision: a vertex per chain of composable edges and an edge from every
    chain to each of its proper faces
    :param scwol: Base scwol
    :return: Subdivision object
    """
    keys = _chains(scwol)
    chains = []
    for head, edges in keys:
        vertices = (head,) + tuple(scwol.t(a) for a in edges)
        chains.append(Chain(vertices, edges, tuple(scwol.vertices[v] for v in vertices)))
    index = {key: n for n, key in enumerate(keys)}

    pairs = []
    for n, chain in enumerate(chains):
        length = len(chain.vertices)
        for size in range(1, length):
            for positions in combinations(range(length), size):
                edges = tuple(
                    scwol.compose_path(chain.edges[p:q]) for p, q in zip(positions, positions[1:])
                )
                pairs.append((n, index[(chain.vertices[positions[0]], edges)]))
    return Subdivision(scwol, Scwol.from_relation(chains, pairs), tuple(chains), index)
