"""Morphisms of complexes of groups and the covering condition."""
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from davis_lattice.cog.complex import ComplexOfGroups, identity_map
from davis_lattice.coxeter.group import coset_labels, is_homomorphism
from davis_lattice.report import CheckReport


@dataclass(frozen=True, eq=False)
class CogMorphism:
    """
    Morphism source -> target over the scwol map (vertex_map, edge_map).

    local_maps[v] maps G_v into H_f(v); edge_elements[a] lies in H_t(f(a)). A target with one
    vertex and no edges is a group: edge_map is None there.
    """

    source: ComplexOfGroups
    target: ComplexOfGroups
    vertex_map: Tuple[int, ...]
    edge_map: Optional[Tuple[int, ...]]
    local_maps: Tuple[np.ndarray, ...]
    edge_elements: Tuple[int, ...]

    def theta(self, a: int) -> Optional[np.ndarray]:
        """Target edge map on f(a), None when the target is a group"""
        return None if self.edge_map is None else self.target.psi[self.edge_map[a]]

    def h(self, a: int, b: int) -> int:
        """Target twist on the image of a composable pair"""
        return 0 if self.edge_map is None else self.target.g(self.edge_map[a], self.edge_map[b])

    def with_edge_element(self, a: int, element: int) -> "CogMorphism":
        elements = list(self.edge_elements)
        elements[a] = element
        return CogMorphism(self.source, self.target, self.vertex_map, self.edge_map, self.local_maps,
                           tuple(elements))


def identity_morphism(c: ComplexOfGroups) -> CogMorphism:
    return CogMorphism(
        c, c,
        tuple(range(len(c.scwol.vertices))),
        tuple(range(len(c.scwol.edges))),
        tuple(identity_map(g) for g in c.local),
        tuple(0 for _ in c.scwol.edges),
    )


def _scwol_morphism(m: CogMorphism, report: CheckReport):
    src, dst = m.source.scwol, m.target.scwol
    if len(m.vertex_map) != len(src.vertices) or any(not 0 <= v < len(dst.vertices) for v in m.vertex_map):
        report.add("scwol morphism", "vertex map", "vertex map does not fit the scwols")
        return
    if m.edge_map is None:
        if dst.edges:
            report.add("scwol morphism", "edge map", "edge map missing for a target with edges")
        return
    for a, (i, t) in enumerate(src.edges):
        fa = m.edge_map[a]
        if dst.edges[fa] != (m.vertex_map[i], m.vertex_map[t]):
            report.add("scwol morphism", f"edge {a}", f"f(a)={fa} does not join the images of i(a), t(a)")
    for (a, b), ab in src.composition.items():
        if dst.composition.get((m.edge_map[a], m.edge_map[b])) != m.edge_map[ab]:
            report.add("scwol morphism", f"edges {a},{b}", "f(ab) != f(a)f(b)")


def validate_morphism(m: CogMorphism) -> CheckReport:
    """
    Check a morphism of complexes of groups
    :param m: Morphism to check
    :return: CheckReport with scwol-map, homomorphism, square and composition violations
    """
    report = CheckReport("morphism")
    _scwol_morphism(m, report)
    if report.violations:
        return report
    src, f = m.source, m.vertex_map
    for v, images in enumerate(m.local_maps):
        if not is_homomorphism(src.local[v], m.target.local[f[v]], images):
            report.add("local map homomorphism", f"vertex {v}: {src.scwol.vertices[v]}")
    if report.violations:
        return report

    for a, (i, t) in enumerate(src.scwol.edges):
        group = m.target.local[f[t]]
        x = m.edge_elements[a]
        theta = m.theta(a)
        inner = m.local_maps[i] if theta is None else theta[m.local_maps[i]]
        lhs = group.mult[group.mult[x, inner], group.inv[x]]
        rhs = m.local_maps[t][src.psi[a]]
        if not np.array_equal(lhs, rhs):
            report.add("commuting square", f"edge {a}: {src.scwol.vertices[i]}->{src.scwol.vertices[t]}",
                       "Ad(phi(a)) theta phi_i(a) != phi_t(a) psi_a")

    for a, b in src.scwol.composable_pairs():
        ab = src.scwol.compose(a, b)
        group = m.target.local[f[src.scwol.t(a)]]
        theta = m.theta(a)
        phi_b = m.edge_elements[b] if theta is None else int(theta[m.edge_elements[b]])
        lhs = group.mult[m.local_maps[src.scwol.t(a)][src.g(a, b)], m.edge_elements[ab]]
        rhs = group.mult[group.mult[m.edge_elements[a], phi_b], m.h(a, b)]
        if lhs != rhs:
            report.add("composition", f"edges {a},{b}", f"{lhs} != {rhs}")
    return report


def validate_covering(m: CogMorphism) -> CheckReport:
    """
    Check that a morphism is a covering: nondegenerate, injective on local groups and bijective
    on the coset spaces over every fiber
    :param m: Morphism between complexes of groups with edges
    :return: CheckReport; stats record the fiber sizes and the coset counts on both sides
    """
    report = validate_morphism(m)
    report.name = "covering"
    if report.violations:
        return report
    if m.edge_map is None:
        report.add("covering", "target", "a covering needs a target with edges")
        return report
    src, dst, f, fe = m.source, m.target, m.vertex_map, m.edge_map

    for v in range(len(src.scwol.vertices)):
        images = sorted(fe[a] for a in src.scwol.out_edges(v))
        if images != sorted(dst.scwol.out_edges(f[v])):
            report.add("nondegenerate", f"vertex {v}: {src.scwol.vertices[v]}",
                       "edges leaving the vertex do not biject onto edges leaving its image")
        if len(np.unique(m.local_maps[v])) != src.local[v].size:
            report.add("local map injective", f"vertex {v}: {src.scwol.vertices[v]}")
    if report.violations:
        return report

    fibers: Counter = Counter()
    checked = 0
    for v in range(len(src.scwol.vertices)):
        group_v = src.local[v]
        target_group = dst.local[f[v]]
        fiber_edges = {}
        for a in src.scwol.in_edges(v):
            fiber_edges.setdefault(fe[a], []).append(a)
        for b in dst.scwol.in_edges(f[v]):
            edges = fiber_edges.get(b, [])
            target_labels, target_count = coset_labels(target_group, dst.psi[b])
            hit = []
            for a in edges:
                source_labels, source_count = coset_labels(group_v, src.psi[a])
                images = target_labels[target_group.mult[m.local_maps[v], m.edge_elements[a]]]
                for coset in range(source_count):
                    values = np.unique(images[source_labels == coset])
                    if len(values) != 1:
                        report.add("coset map well defined", f"vertex {v}, edge {a}")
                    hit.append(int(values[0]))
            checked += 1
            fibers[len(edges)] += 1
            if sorted(hit) != list(range(target_count)):
                report.add("coset bijection", f"vertex {v}: {src.scwol.vertices[v]}, target edge {b}",
                           f"{len(hit)} source cosets onto {target_count} target cosets, "
                           f"{len(set(hit))} distinct images")
    report.stats = {"fibers_checked": checked, "fiber_sizes": dict(sorted(fibers.items()))}
    return report
