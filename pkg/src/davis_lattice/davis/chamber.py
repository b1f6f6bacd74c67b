"""
Chamber complexes Y_n.

A chamber of Y_n is indexed by ChamberId(level k, js = (j_{n-1}, ..., j_k)). Every chamber is a
copy of the chamber K, whose vertices are typed by the spherical subsets (the empty one
included). A chamber of level k < n is glued to its unique neighbour of level k + 1 along the
mirror of type alpha^{js}(s_k); all other adjacencies follow from these gluings.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from davis_lattice.cog.scwol import Scwol
from davis_lattice.config import Bounds
from davis_lattice.coxeter.spherical import spherical_subsets
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.coxeter.words import Word, word_reduce
from davis_lattice.error import ConstructionError
from davis_lattice.nerve.automorphisms import LabelAut
from davis_lattice.nerve.witness import Witness
from davis_lattice.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class ChamberId:
    level: int
    js: Tuple[int, ...] = ()

    def up(self) -> "ChamberId":
        return ChamberId(self.level + 1, self.js[:-1])

    def down(self, j: int) -> "ChamberId":
        return ChamberId(self.level - 1, self.js + (j,))

    def __str__(self) -> str:
        return f"{self.level}/" + ",".join(str(j) for j in self.js)


@dataclass(frozen=True)
class ChamberVertex:
    """A vertex of Y_n: its chambers (one, or two when it lies in an interior mirror) and its type."""

    chambers: Tuple[ChamberId, ...]
    type: FrozenSet[str]
    mirror: Optional[str] = None

    @property
    def chamber(self) -> ChamberId:
        return self.chambers[0]

    @property
    def is_shared(self) -> bool:
        return len(self.chambers) > 1

    def __str__(self) -> str:
        return "{" + ",".join(sorted(self.type)) + "}@" + "|".join(str(c) for c in self.chambers)


def chamber_ids(wit: Optional[Witness], n: int) -> List[ChamberId]:
    """
    All chamber indices of Y_n, level by level
    :param wit: Witness providing q_1, q_2 (may be None for n = 1)
    :param n: Truncation level
    :return: List of ChamberId objects
    """
    if n < 1:
        raise ValueError(f"Truncation level must be at least 1, got {n}")
    result = []
    for k in range(1, n + 1):
        ranges = [range(wit.q(i)) for i in range(n - 1, k - 1, -1)]
        result.extend(ChamberId(k, js) for js in product(*ranges))
    return result


def alpha_of(wit: Witness, n: int, js: Tuple[int, ...]) -> LabelAut:
    """alpha_{n-1}^{j_{n-1}} ... alpha_k^{j_k} for js = (j_{n-1}, ..., j_k)"""
    result = LabelAut.identity(wit.alpha1.generators)
    for i, j in enumerate(js):
        result = result.compose(wit.alpha(n - 1 - i).power(j))
    return result


def mirror_type(wit: Witness, n: int, cid: ChamberId) -> str:
    """Type of the mirror along which a chamber of level k < n meets level k + 1"""
    return alpha_of(wit, n, cid.js)(wit.s(cid.level))


def _check_index(wit: Witness, n: int, k: int, js: Tuple[int, ...]):
    if not 1 <= k <= n:
        raise ValueError(f"Level {k} out of range 1..{n}")
    if len(js) != n - k:
        raise ValueError(f"Index {js} must have length {n - k} at level {k} of Y_{n}")
    for i, j in enumerate(js):
        if not 0 <= j < wit.q(n - 1 - i):
            raise ValueError(f"Index j_{n - 1 - i}={j} out of range 0..{wit.q(n - 1 - i) - 1}")


def w_word(wit: Witness, n: int, k: int, js: Tuple[int, ...]) -> Word:
    """
    Word w_{j_{n-1},...,j_k} = s_1 ... s_{n-1} alpha^{j_{n-1}}(s_{n-1}) ... alpha^{j_{n-1},...,j_k}(s_k)
    :param wit: Witness
    :param n: Truncation level
    :param k: Chamber level
    :param js: Indices (j_{n-1}, ..., j_k)
    :return: Word over the generators, unreduced
    """
    js = tuple(js)
    _check_index(wit, n, k, js)
    prefix = tuple(wit.s(i) for i in range(1, n))
    return prefix + tuple(alpha_of(wit, n, js[:n - i])(wit.s(i)) for i in range(n - 1, k - 1, -1))


def chamber_word(wit: Witness, n: int, cid: ChamberId) -> Word:
    return w_word(wit, n, cid.level, cid.js)


def w_sets(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds()) -> Dict[int, List[Word]]:
    """
    Reduced normal forms of the sets W_{k,n}
    :return: Mapping level -> sorted reduced words
    """
    sets: Dict[int, set] = {}
    for cid in chamber_ids(wit, n):
        sets.setdefault(cid.level, set()).add(word_reduce(sys, chamber_word(wit, n, cid), bounds))
    return {k: sorted(words, key=lambda w: (len(w), [sys.index(x) for x in w])) for k, words in sets.items()}


def verify_disjointness(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds()) -> CheckReport:
    """
    Check that distinct chamber indices give distinct elements of W
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level
    :param bounds: Resource bounds (max_word_length applies)
    :return: CheckReport; stats record the number of words and the longest reduced length
    """
    report = CheckReport("disjointness")
    seen: Dict[Word, ChamberId] = {}
    longest = 0
    chambers = chamber_ids(wit, n)
    for cid in chambers:
        reduced = word_reduce(sys, chamber_word(wit, n, cid), bounds)
        longest = max(longest, len(reduced))
        other = seen.setdefault(reduced, cid)
        if other == cid:
            continue
        axiom = "pairwise disjoint" if other.level != cid.level else "injective indices"
        report.add(axiom, f"chambers {other}, {cid}", f"both equal {' '.join(reduced) or '1'}")
    report.stats = {"words": len(chambers), "distinct": len(seen), "longest": longest}
    return report


@dataclass(frozen=True, eq=False)
class ChamberComplex:
    """
    Chambers glued along mirrors, with the poset scwol of the glued vertices.

    gluings maps (lower chamber, upper chamber) to the generator s of the shared mirror K_s.
    """

    system: CoxeterSystem
    n: int
    types: Tuple[FrozenSet[str], ...]
    chambers: Tuple[ChamberId, ...]
    vertices: Tuple[ChamberVertex, ...]
    vertex_index: Mapping[Tuple[ChamberId, FrozenSet[str]], int]
    gluings: Mapping[Tuple[ChamberId, ChamberId], str]
    scwol: Scwol
    witness: Optional[Witness] = None

    def vertex(self, cid: ChamberId, members: Iterable[str]) -> int:
        return self.vertex_index[(cid, frozenset(members))]

    def vertex_chambers(self, v: int) -> Tuple[ChamberId, ...]:
        return self.vertices[v].chambers

    def chamber_vertices(self, cid: ChamberId) -> List[int]:
        return [self.vertex_index[(cid, members)] for members in self.types]

    def mirror(self, cid: ChamberId, s: str) -> FrozenSet[int]:
        """Vertices of the mirror K_s of a chamber"""
        return frozenset(self.vertex_index[(cid, members)] for members in self.types if s in members)

    @cached_property
    def dual_graph(self) -> nx.Graph:
        graph = nx.Graph()
        for cid in self.chambers:
            graph.add_node(cid, level=cid.level)
        for (lower, upper), s in self.gluings.items():
            graph.add_edge(lower, upper, mirror=s)
        return graph

    def interior_mirrors(self) -> List[Tuple[ChamberId, ChamberId, str, FrozenSet[int]]]:
        return [(lower, upper, s, self.mirror(lower, s)) for (lower, upper), s in sorted(self.gluings.items())]

    def level_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for cid in self.chambers:
            counts[cid.level] = counts.get(cid.level, 0) + 1
        return dict(sorted(counts.items()))

    def check_invariants(self) -> CheckReport:
        """
        Check the local structure: vertices in at most two chambers, disjoint interior mirrors,
        one vertex per spherical type in every chamber and a tree-shaped dual graph
        :return: CheckReport
        """
        report = CheckReport("chamber complex")
        for v, vertex in enumerate(self.vertices):
            if len(vertex.chambers) > 2:
                report.add("at most two chambers", f"vertex {v}: {vertex}")
            elif vertex.is_shared:
                lower, upper = sorted(vertex.chambers)
                s = self.gluings.get((lower, upper))
                if s is None or s not in vertex.type:
                    report.add("gluing", f"vertex {v}: {vertex}", "shared outside a glued mirror")

        owner: Dict[int, Tuple[ChamberId, ChamberId]] = {}
        for lower, upper, s, members in self.interior_mirrors():
            for v in members:
                previous = owner.setdefault(v, (lower, upper))
                if previous != (lower, upper):
                    report.add("interior mirrors disjoint", f"vertex {v}: {self.vertices[v]}",
                               f"in the mirrors between {previous[0]}, {previous[1]} and {lower}, {upper}")

        for cid in self.chambers:
            if len(set(self.chamber_vertices(cid))) != len(self.types):
                report.add("chamber types", f"chamber {cid}", "types are not in bijection with vertices")

        graph = self.dual_graph
        if not nx.is_tree(graph):
            report.add("dual graph tree", "dual graph", f"{graph.number_of_edges()} edges on {len(graph)} chambers")
        if self.witness is not None:
            for cid in self.chambers:
                expected = (cid.level < self.n) + (self.witness.q(cid.level - 1) if cid.level > 1 else 0)
                if graph.degree(cid) != expected:
                    report.add("adjacency", f"chamber {cid}", f"degree {graph.degree(cid)}, expected {expected}")

        report.stats = {
            "chambers": len(self.chambers),
            "vertices": len(self.vertices),
            "edges": len(self.scwol.edges),
            "interior_mirrors": len(self.gluings),
            "levels": self.level_counts(),
        }
        return report


def _assemble(sys: CoxeterSystem, n: int, chambers: List[ChamberId],
              gluings: Dict[Tuple[ChamberId, ChamberId], str], wit: Optional[Witness] = None) -> ChamberComplex:
    types = tuple(frozenset(subset.members) for subset in spherical_subsets(sys))
    classes = UnionFind((cid, members) for cid in chambers for members in types)
    for (lower, upper), s in gluings.items():
        for members in types:
            if s in members:
                classes.union((lower, members), (upper, members))

    vertices = []
    for group in classes.to_sets():
        owners = tuple(sorted({cid for cid, _ in group}))
        members = next(iter(group))[1]
        mirror = gluings.get(owners) if len(owners) == 2 else None
        vertices.append((ChamberVertex(owners, members, mirror), group))
    vertices.sort(key=lambda item: (item[0].chamber, sys.subsets_key(item[0].type)))

    vertex_index = {}
    for v, (_, group) in enumerate(vertices):
        for key in group:
            vertex_index[key] = v

    inclusions = [(small, large) for small in types for large in types if small < large]
    pairs = {
        (vertex_index[(cid, small)], vertex_index[(cid, large)])
        for cid in chambers for small, large in inclusions
    }
    payloads = tuple(vertex for vertex, _ in vertices)
    scwol = Scwol.from_relation(payloads, sorted(pairs))
    logger.debug("Chamber complex of level %d: %d chambers, %d vertices, %d edges",
                 n, len(chambers), len(payloads), len(scwol.edges))
    return ChamberComplex(sys, n, types, tuple(chambers), payloads, vertex_index, dict(gluings), scwol, wit)


def build_chamber(sys: CoxeterSystem) -> ChamberComplex:
    """
    The chamber K: one vertex per spherical subset, edges by strict inclusion of types
    :param sys: Coxeter system
    :return: ChamberComplex with a single chamber
    """
    return _assemble(sys, 1, [ChamberId(1)], {})


def build_Yn(wit: Witness, sys: CoxeterSystem, n: int) -> ChamberComplex:
    """
    Glue the chambers of Y_n
    :param wit: Witness
    :param sys: Coxeter system the witness belongs to
    :param n: Truncation level
    :return: ChamberComplex
    """
    if tuple(wit.alpha1.generators) != tuple(sys.generators):
        raise ConstructionError("Witness automorphisms act on a different generating set")
    chambers = chamber_ids(wit, n)
    gluings = {(cid, cid.up()): mirror_type(wit, n, cid) for cid in chambers if cid.level < n}
    return _assemble(sys, n, chambers, gluings, wit)


@dataclass(frozen=True, eq=False)
class ChamberIso:
    """F^j: Y_{n-1} onto the subcomplex of Y_n whose chambers carry leading index j."""

    source: ChamberComplex
    target: ChamberComplex
    j: int
    alpha: LabelAut
    vertex_map: Tuple[int, ...]

    def chamber(self, cid: ChamberId) -> ChamberId:
        return ChamberId(cid.level, (self.j,) + cid.js)

    def image_chambers(self) -> List[ChamberId]:
        return [self.chamber(cid) for cid in self.source.chambers]

    def check(self) -> CheckReport:
        """
        Check well-definedness, injectivity, edge preservation and the attaching mirror
        :return: CheckReport
        """
        report = CheckReport(f"subcomplex isomorphism F^{self.j}")
        source, target = self.source, self.target
        for (cid, members), v in source.vertex_index.items():
            image = target.vertex_index[(self.chamber(cid), self.alpha.apply(members))]
            if image != self.vertex_map[v]:
                report.add("vertex map well defined", f"vertex {v}: {source.vertices[v]}")
        if len(set(self.vertex_map)) != len(self.vertex_map):
            report.add("injective", "vertex map")
        edges = target.scwol.edge_index
        for a, (i, t) in enumerate(source.scwol.edges):
            if (self.vertex_map[i], self.vertex_map[t]) not in edges:
                report.add("edges", f"edge {a}", "image endpoints are not joined")
        wit, n = target.witness, target.n
        top = ChamberId(n - 1, (self.j,))
        if target.gluings.get((top, ChamberId(n))) != self.alpha(wit.s(n - 1)):
            report.add("attaching mirror", f"chamber {top}", f"not attached along {self.alpha(wit.s(n - 1))}")
        return report


def subcomplex_isos(wit: Witness, sys: CoxeterSystem, n: int) -> List[ChamberIso]:
    """
    Isomorphisms F^j from Y_{n-1} onto the q_{n-1} copies of it inside Y_n
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level, at least 2
    :return: List indexed by j
    """
    if n < 2:
        raise ValueError("Subcomplex isomorphisms need n >= 2")
    source, target = build_Yn(wit, sys, n - 1), build_Yn(wit, sys, n)
    result = []
    for j in range(wit.q(n - 1)):
        alpha = wit.alpha(n - 1).power(j)
        vertex_map = tuple(
            target.vertex_index[(ChamberId(vertex.chamber.level, (j,) + vertex.chamber.js), alpha.apply(vertex.type))]
            for vertex in source.vertices
        )
        result.append(ChamberIso(source, target, j, alpha, vertex_map))
    return result
