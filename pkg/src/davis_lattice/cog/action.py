"""Group actions on scwols and on complexes of groups."""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, List, Tuple, Union

import numpy as np

from davis_lattice.cog.complex import ComplexOfGroups
from davis_lattice.cog.scwol import Scwol, Subdivision
from davis_lattice.config import Bounds
from davis_lattice.coxeter.group import FiniteGroupTable, is_homomorphism
from davis_lattice.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ScwolAction:
    """Action of a finite group by permutations: vperm[g, v] = g.v and eperm[g, a] = g.a."""

    group: FiniteGroupTable
    scwol: Scwol
    vperm: np.ndarray
    eperm: np.ndarray

    def stabilizer(self, v: int) -> List[int]:
        return [int(h) for h in np.flatnonzero(self.vperm[:, v] == v)]

    def vertex_orbit(self, v: int) -> List[int]:
        return sorted(set(int(x) for x in self.vperm[:, v]))

    def transporter(self, v: int, w: int) -> int:
        """Least group element taking v to w"""
        hits = np.flatnonzero(self.vperm[:, v] == w)
        if not len(hits):
            raise ValueError(f"Vertices {v} and {w} lie in different orbits")
        return int(hits[0])


def trivial_action(group: FiniteGroupTable, scwol: Scwol) -> ScwolAction:
    vperm = np.tile(np.arange(len(scwol.vertices), dtype=np.int64), (group.size, 1))
    eperm = np.tile(np.arange(len(scwol.edges), dtype=np.int64), (group.size, 1))
    return ScwolAction(group, scwol, vperm, eperm)


def validate_action(act: ScwolAction, bounds: Bounds = Bounds()) -> CheckReport:
    """
    Check that act is an action by scwol automorphisms satisfying both quotient conditions
    :param act: Action to check
    :param bounds: Resource bounds (max_action_order applies)
    :return: CheckReport
    """
    report = CheckReport("action")
    group, scwol = act.group, act.scwol
    if group.size > bounds.max_action_order:
        return CheckReport.skipped("action", f"group order {group.size} above max_action_order")
    nv, ne = len(scwol.vertices), len(scwol.edges)
    if act.vperm.shape != (group.size, nv) or act.eperm.shape != (group.size, ne):
        report.add("action shape", "permutations", "permutation arrays do not fit group and scwol")
        return report
    for g in range(group.size):
        if len(np.unique(act.vperm[g])) != nv or (ne and len(np.unique(act.eperm[g])) != ne):
            report.add("bijective", f"element {g}")
    if report.violations:
        return report

    for g in range(group.size):
        if not np.array_equal(act.vperm[group.mult[g]], act.vperm[g][act.vperm]):
            report.add("homomorphism", f"element {g}", "(gh).v != g.(h.v)")
        if ne and not np.array_equal(act.eperm[group.mult[g]], act.eperm[g][act.eperm]):
            report.add("homomorphism", f"element {g}", "(gh).a != g.(h.a)")
    if ne == 0:
        return report

    initial = np.array([i for i, _ in scwol.edges])
    terminal = np.array([t for _, t in scwol.edges])
    if not np.array_equal(act.vperm[:, initial], initial[act.eperm]):
        report.add("incidence", "edges", "g.i(a) != i(g.a)")
    if not np.array_equal(act.vperm[:, terminal], terminal[act.eperm]):
        report.add("incidence", "edges", "g.t(a) != t(g.a)")
    pairs = scwol.composable_pairs()
    if pairs:
        a, b = np.array(pairs).T
        ab = np.array([scwol.compose(x, y) for x, y in pairs])
        for g in range(group.size):
            images = [scwol.composition.get((int(x), int(y))) for x, y in zip(act.eperm[g, a], act.eperm[g, b])]
            if images != [int(e) for e in act.eperm[g, ab]]:
                report.add("composition", f"element {g}", "g.(ab) != (g.a)(g.b)")

    moved_onto_terminal = act.vperm[:, initial] == terminal[None, :]
    for g, a in zip(*np.nonzero(moved_onto_terminal)):
        report.add("condition (1)", f"element {g}, edge {a}", "g.i(a) = t(a)")
    fixes_initial = act.vperm[:, initial] == initial[None, :]
    moves_edge = act.eperm != np.arange(ne)[None, :]
    for g, a in zip(*np.nonzero(fixes_initial & moves_edge)):
        report.add("condition (2)", f"element {g}, edge {a}", "g fixes i(a) but moves a")
    return report


@dataclass(frozen=True, eq=False)
class Quotient:
    """Quotient scwol with projections and orbit representatives."""

    scwol: Scwol
    vertex_proj: np.ndarray
    edge_proj: np.ndarray
    vertex_reps: Tuple[int, ...]
    edge_orbits: Tuple[Tuple[int, ...], ...]


def quotient_scwol(act: ScwolAction, lift_policy: str = "least") -> Quotient:
    """
    Orbit scwol of an action
    :param act: Action satisfying both quotient conditions
    :param lift_policy: least or greatest vertex of each orbit as representative
    :return: Quotient object; vertex payloads are those of the representatives
    """
    if lift_policy not in ("least", "greatest"):
        raise ValueError(f"Unknown lift policy: {lift_policy}")
    pick = np.min if lift_policy == "least" else np.max
    scwol = act.scwol
    vrep = pick(act.vperm, axis=0)
    reps = sorted(set(int(r) for r in vrep), key=lambda r: int(np.min(act.vperm[:, r])))
    vnum = {r: n for n, r in enumerate(reps)}
    vertex_proj = np.array([vnum[int(r)] for r in vrep], dtype=np.int64)

    ne = len(scwol.edges)
    erep = np.min(act.eperm, axis=0) if ne else np.zeros(0, dtype=np.int64)
    edge_reps = sorted(set(int(r) for r in erep))
    enum = {r: n for n, r in enumerate(edge_reps)}
    edge_proj = np.array([enum[int(r)] for r in erep], dtype=np.int64)
    orbits: Dict[int, List[int]] = {}
    for a in range(ne):
        orbits.setdefault(int(edge_proj[a]), []).append(a)

    edges = tuple((int(vertex_proj[scwol.i(r)]), int(vertex_proj[scwol.t(r)])) for r in edge_reps)
    composition = {}
    for (a, b), ab in scwol.composition.items():
        composition[(int(edge_proj[a]), int(edge_proj[b]))] = int(edge_proj[ab])
    quotient = Scwol(tuple(scwol.vertices[r] for r in reps), edges, composition)
    logger.debug("Quotient scwol: %d vertices, %d edges", len(reps), len(edges))
    return Quotient(quotient, vertex_proj, edge_proj, tuple(reps),
                    tuple(tuple(orbits[n]) for n in range(len(edge_reps))))


def subdivide_action(act: ScwolAction, subdivision: Subdivision) -> ScwolAction:
    """
    Transport an action on a scwol to its barycentric subdivision
    :param act: Action on subdivision.base
    :param subdivision: Subdivision object
    :return: Action on subdivision.scwol
    """
    group = act.group
    chains = subdivision.chains
    vperm = np.empty((group.size, len(chains)), dtype=np.int64)
    for n, chain in enumerate(chains):
        heads = act.vperm[:, chain.head]
        edges = act.eperm[:, list(chain.edges)] if chain.edges else np.zeros((group.size, 0), dtype=np.int64)
        for g in range(group.size):
            vperm[g, n] = subdivision.chain_index(int(heads[g]), tuple(int(e) for e in edges[g]))
    edge_index = subdivision.scwol.edge_index
    edges = subdivision.scwol.edges
    eperm = np.empty((group.size, len(edges)), dtype=np.int64)
    for a, (i, t) in enumerate(edges):
        for g in range(group.size):
            eperm[g, a] = edge_index[(int(vperm[g, i]), int(vperm[g, t]))]
    return ScwolAction(group, subdivision.scwol, vperm, eperm)


@dataclass(frozen=True, eq=False)
class ComplexAction:
    """
    Action on a complex of groups by simple morphisms.

    Local groups are concatenated into one flat index space (offsets[v] + g); iso[h] maps a flat
    element of G_v to the flat index of its image in G_{h.v}.
    """

    complex: ComplexOfGroups
    action: ScwolAction
    iso: np.ndarray

    @cached_property
    def offsets(self) -> np.ndarray:
        return flat_offsets(self.complex)

    def local_iso(self, h: int, v: int) -> np.ndarray:
        """phi^h_v as an index map G_v -> G_{h.v}"""
        start = self.offsets[v]
        images = self.iso[h, start:start + self.complex.local[v].size]
        return images - self.offsets[self.action.vperm[h, v]]


def flat_offsets(c: ComplexOfGroups) -> np.ndarray:
    return np.concatenate([[0], np.cumsum([g.size for g in c.local])]).astype(np.int64)


LocalIsos = Union[np.ndarray, Callable[[int, int], np.ndarray]]


def extend_action_to_cog(c: ComplexOfGroups, act: ScwolAction,
                         local_isos: LocalIsos) -> Tuple[ComplexAction, CheckReport]:
    """
    Attach local isomorphisms phi^h_v: G_v -> G_{h.v} to an action and check them
    :param c: Simple complex of groups over act.scwol
    :param act: Scwol action
    :param local_isos: Flat iso array, or callable (h, v) -> index map G_v -> G_{h.v}
    :return: Tuple (ComplexAction, CheckReport)
    """
    if callable(local_isos):
        offsets = flat_offsets(c)
        iso = np.empty((act.group.size, int(offsets[-1])), dtype=np.int64)
        for h in range(act.group.size):
            for v in range(len(c.local)):
                iso[h, offsets[v]:offsets[v + 1]] = (
                    np.asarray(local_isos(h, v), dtype=np.int64) + offsets[act.vperm[h, v]]
                )
    else:
        iso = np.asarray(local_isos, dtype=np.int64)
    complex_action = ComplexAction(c, act, iso)
    return complex_action, validate_complex_action(complex_action)


def validate_complex_action(ca: ComplexAction) -> CheckReport:
    """
    Check the local isomorphisms: composition rule, isomorphism property and compatibility
    with the edge maps
    :param ca: ComplexAction
    :return: CheckReport
    """
    report = CheckReport("action on complex of groups")
    c, act, iso = ca.complex, ca.action, ca.iso
    group, offsets = act.group, ca.offsets
    if iso.shape != (group.size, offsets[-1]):
        report.add("local isomorphisms", "shape", "iso array does not fit the complex")
        return report

    owner = np.repeat(np.arange(len(c.local)), np.diff(offsets))
    if not np.array_equal(owner[iso], act.vperm[:, owner]):
        report.add("local isomorphisms", "targets", "phi^h_v does not land in G_{h.v}")
        return report
    if not np.array_equal(iso[0], np.arange(offsets[-1])):
        report.add("identity", "element 0", "phi^1 is not the identity")
    for h in range(group.size):
        if len(np.unique(iso[h])) != offsets[-1]:
            report.add("local isomorphisms", f"element {h}", "not bijective")
    for h in range(group.size):
        if not np.array_equal(iso[group.mult[h]], iso[h][iso]):
            report.add("phi^{hh'} = phi^h phi^{h'}", f"element {h}")
    for h in range(group.size):
        for v in range(len(c.local)):
            if not is_homomorphism(c.local[v], c.local[act.vperm[h, v]], ca.local_iso(h, v)):
                report.add("local isomorphisms", f"element {h}, vertex {v}", "not a homomorphism")
    if report.violations:
        return report

    edges = c.scwol.edges
    if not edges:
        return report
    edge_offsets = np.concatenate([[0], np.cumsum([len(p) for p in c.psi])]).astype(np.int64)
    psi_flat = np.concatenate([p + offsets[t] for p, (_, t) in zip(c.psi, edges)])
    pair_edge = np.repeat(np.arange(len(edges)), np.diff(edge_offsets))
    pair_local = np.arange(edge_offsets[-1]) - edge_offsets[pair_edge]
    initial = np.array([i for i, _ in edges])
    src_flat = offsets[initial[pair_edge]] + pair_local
    for h in range(group.size):
        moved = iso[h, src_flat]
        moved_edges = act.eperm[h, pair_edge]
        lhs = psi_flat[edge_offsets[moved_edges] + moved - offsets[act.vperm[h, initial[pair_edge]]]]
        rhs = iso[h, psi_flat]
        bad = np.unique(pair_edge[lhs != rhs])
        for a in bad:
            report.add("psi_{h.a} phi^h = phi^h psi_a", f"element {h}, edge {a}")
    return report


def identity_local_isos(c: ComplexOfGroups, group: FiniteGroupTable) -> np.ndarray:
    """Flat iso array of the trivial action"""
    total = int(flat_offsets(c)[-1])
    return np.tile(np.arange(total, dtype=np.int64), (group.size, 1))
