"""Named example systems: nerves given as labelled graphs, every non-edge labelled infinity."""
import re
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.error import CatalogError
from davis_lattice.nerve.automorphisms import LabelAut
from davis_lattice.nerve.nerve import Nerve

FANO_POINTS: Tuple[Tuple[int, int, int], ...] = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1),
)

_SPEC = re.compile(r"^\s*([a-z0-9_]+)\s*(?:\((.*)\))?\s*$")


def _bits(v: Iterable[int]) -> str:
    return "".join(str(int(x) % 2) for x in v)


def point_name(v: Iterable[int]) -> str:
    return "p" + _bits(v)


def line_name(u: Iterable[int]) -> str:
    """Line of the Fano plane given by its normal vector u, i.e. the points v with u.v = 0"""
    return "l" + _bits(u)


def system_from_graph(graph: nx.Graph, label: int) -> CoxeterSystem:
    """
    Right-angled-style system: label on every edge of graph, infinity elsewhere
    :param graph: Nerve 1-skeleton with string nodes in generator order
    :param label: Finite edge label
    :return: CoxeterSystem object
    """
    return CoxeterSystem.from_labels(list(graph.nodes), {(s, t): label for s, t in graph.edges})


def _check_label(m: int):
    if m < 2:
        raise CatalogError(f"Edge label must be at least 2, got {m}")


def complete_bipartite(q: int, q2: int, m: int) -> CoxeterSystem:
    """
    Nerve K_{q2,q}: generators s1..s_{q2} on one side, s_{q2+1}..s_{q2+q} on the other
    """
    _check_label(m)
    if q < 1 or q2 < 1:
        raise CatalogError("Both sides of a complete bipartite nerve must be nonempty")
    left = [f"s{i + 1}" for i in range(q2)]
    right = [f"s{q2 + i + 1}" for i in range(q)]
    graph = nx.Graph()
    graph.add_nodes_from(left + right)
    graph.add_edges_from(product(left, right))
    return system_from_graph(graph, m)


def two_apex(m: int, m2: int) -> CoxeterSystem:
    """
    Three base generators s1, s2, s3, each joined to s4 by label m and to s5 by label m2
    """
    _check_label(m)
    _check_label(m2)
    labels = {}
    for s in ("s1", "s2", "s3"):
        labels[(s, "s4")] = m
        labels[(s, "s5")] = m2
    return CoxeterSystem.from_labels(["s1", "s2", "s3", "s4", "s5"], labels)


def heawood_graph() -> nx.Graph:
    """Incidence graph of the Fano plane: points p<bits>, lines l<bits>"""
    graph = nx.Graph()
    graph.add_nodes_from(point_name(v) for v in FANO_POINTS)
    graph.add_nodes_from(line_name(u) for u in FANO_POINTS)
    for u, v in product(FANO_POINTS, FANO_POINTS):
        if sum(a * b for a, b in zip(u, v)) % 2 == 0:
            graph.add_edge(line_name(u), point_name(v))
    return graph


def gl32_building(m: int) -> CoxeterSystem:
    _check_label(m)
    return system_from_graph(heawood_graph(), m)


def petersen(m: int) -> CoxeterSystem:
    _check_label(m)
    graph = nx.relabel_nodes(nx.petersen_graph(), {i: f"v{i}" for i in range(10)})
    return system_from_graph(graph, m)


def join_of_points(*sizes: int) -> CoxeterSystem:
    """
    Join of point sets: label 2 between different sets, infinity inside a set.
    Set i contributes generators named by the i-th letter, e.g. a1 a2 b1 b2 b3.
    """
    if not sizes or any(k < 1 for k in sizes) or len(sizes) > 26:
        raise CatalogError("join_of_points needs between 1 and 26 positive set sizes")
    sets = [[f"{chr(ord('a') + i)}{j + 1}" for j in range(k)] for i, k in enumerate(sizes)]
    graph = nx.Graph()
    for members in sets:
        graph.add_nodes_from(members)
    for i, j in ((i, j) for i in range(len(sets)) for j in range(i + 1, len(sets))):
        graph.add_edges_from(product(sets[i], sets[j]))
    return system_from_graph(graph, 2)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    signature: str
    description: str
    build: Callable[..., CoxeterSystem]
    arity: Tuple[int, int]


CATALOG: Dict[str, CatalogEntry] = {
    e.name: e for e in (
        CatalogEntry("complete_bipartite", "(q, q2, m)", "nerve K_{q2,q} with all edge labels m",
                     complete_bipartite, (3, 3)),
        CatalogEntry("two_apex", "(m, m2)", "s1, s2, s3 joined to s4 by m and to s5 by m2",
                     two_apex, (2, 2)),
        CatalogEntry("gl32_building", "(m)", "incidence graph of the Fano plane (building of GL(3,2))",
                     gl32_building, (1, 1)),
        CatalogEntry("petersen", "(m)", "Petersen graph with all edge labels m", petersen, (1, 1)),
        CatalogEntry("join_of_points", "(n1, ..., nk)", "join of k point sets, join edges labelled 2",
                     join_of_points, (1, 26)),
    )
}


def catalog_names() -> List[CatalogEntry]:
    return list(CATALOG.values())


def parse_catalog_spec(spec: str) -> Tuple[str, Tuple[int, ...]]:
    """
    Split a catalog spec such as petersen(4)
    :param spec: Catalog spec string
    :return: Tuple (name, integer parameters)
    """
    match = _SPEC.match(spec)
    if not match:
        raise CatalogError(f"Malformed catalog spec: '{spec}'")
    name, args = match.group(1), match.group(2)
    try:
        params = tuple(int(a) for a in args.split(",")) if args and args.strip() else ()
    except ValueError as e:
        raise CatalogError(f"Catalog parameters must be integers: '{spec}'") from e
    return name, params


def catalog(name: str, params: Sequence[int] = ()) -> CoxeterSystem:
    """
    Build a named example system
    :param name: Catalog name
    :param params: Integer parameters
    :return: CoxeterSystem object
    """
    if name not in CATALOG:
        raise CatalogError(f"Unknown catalog entry '{name}'. Available: {', '.join(CATALOG)}.")
    entry = CATALOG[name]
    low, high = entry.arity
    if not low <= len(params) <= high:
        raise CatalogError(f"{name}{entry.signature} takes {low}..{high} parameters, got {len(params)}")
    return entry.build(*params)


def catalog_system(spec: str) -> CoxeterSystem:
    return catalog(*parse_catalog_spec(spec))


def matrix_automorphism(nerve: Nerve, matrix: Sequence[Sequence[int]]) -> LabelAut:
    """
    Automorphism of the Fano incidence nerve induced by an invertible 3x3 matrix over GF(2)
    :param nerve: Nerve of gl32_building
    :param matrix: Matrix acting on column vectors
    :return: LabelAut moving points by v -> Av and lines along
    """
    a = np.asarray(matrix, dtype=np.int64) % 2
    points = {v: tuple(int(x) for x in a.dot(v) % 2) for v in FANO_POINTS}
    if sorted(points.values()) != sorted(FANO_POINTS):
        raise CatalogError("Matrix is not invertible over GF(2)")
    on_line = {u: {v for v in FANO_POINTS if sum(x * y for x, y in zip(u, v)) % 2 == 0} for u in FANO_POINTS}
    by_points = {frozenset(vs): u for u, vs in on_line.items()}
    mapping = {point_name(v): point_name(w) for v, w in points.items()}
    for u, vs in on_line.items():
        mapping[line_name(u)] = line_name(by_points[frozenset(points[v] for v in vs)])
    return LabelAut.from_mapping(nerve.vertices, mapping)
