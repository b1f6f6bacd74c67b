"""Random small equivariant simple complexes of groups."""
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np

from davis_lattice.cog.action import ComplexAction, ScwolAction, extend_action_to_cog, subdivide_action
from davis_lattice.cog.complex import ComplexOfGroups, simple_complex, subdivide_complex
from davis_lattice.cog.scwol import Scwol
from davis_lattice.coxeter.group import FiniteGroupTable, Subgroup, coset_labels, cyclic_group, semidirect_product
from davis_lattice.error import ConstructionError


def small_groups(max_order: int = 6) -> List[Tuple[FiniteGroupTable, np.ndarray]]:
    """
    Acting groups of order at most max_order, each with a homomorphism onto {0, 1}
    :return: List of (group, sign) pairs; sign[h] = 1 marks elements acting by inversion
    """
    groups = []
    for n in range(1, max_order + 1):
        group = cyclic_group(n)
        sign = np.arange(n) % 2 if n % 2 == 0 else np.zeros(n, dtype=np.int64)
        groups.append((group, sign))
    c2, c3 = cyclic_group(2), cyclic_group(3)
    if max_order >= 4:
        klein = semidirect_product(c2, c2, np.tile(np.arange(2), (2, 1)), name="V4")
        groups.append((klein, np.arange(4) % 2))
    if max_order >= 6:
        s3 = semidirect_product(c3, c2, np.stack([np.arange(3), c3.inv]), name="S3")
        groups.append((s3, np.arange(6) % 2))
    return groups


def ambient_groups() -> List[FiniteGroupTable]:
    """Groups whose subgroups serve as local groups, abelian and non-abelian"""
    c2, c3, c4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)
    return [
        cyclic_group(4),
        cyclic_group(6),
        semidirect_product(c2, c2, np.tile(np.arange(2), (2, 1)), name="V4"),
        semidirect_product(c3, c2, np.stack([np.arange(3), c3.inv]), name="S3"),
        semidirect_product(c4, c2, np.stack([np.arange(4), c4.inv]), name="D4"),
    ]


def is_abelian(group: FiniteGroupTable) -> bool:
    return bool(np.array_equal(group.mult, group.mult.T))


def subgroup_lattice(group: FiniteGroupTable) -> List[Tuple[int, ...]]:
    """Member tuples of the subgroups generated by at most two elements, smallest first"""
    found = {tuple(group.closure([g, h])) for g in range(group.size) for h in range(g, group.size)}
    return sorted(found, key=lambda members: (len(members), members))


def _orbit_action(group: FiniteGroupTable, generator: int) -> np.ndarray:
    """Permutation action on the left cosets of the cyclic subgroup generated by generator"""
    labels, count = coset_labels(group, group.closure([generator]))
    reps = [int(np.flatnonzero(labels == n)[0]) for n in range(count)]
    return labels[group.mult[:, reps]]


def random_simple_complex(rng: np.random.Generator, max_group_order: int = 6,
                          levels: int = 3) -> Tuple[ComplexOfGroups, ComplexAction]:
    """
    Draw a random poset with an action of a small group, subdivide it and put an equivariant
    simple complex of groups on it
    :param rng: Random generator
    :param max_group_order: Largest acting group order
    :param levels: Number of poset levels
    :return: Tuple (subdivided complex, action on it)
    """
    candidates = small_groups(max_group_order)
    group, sign = candidates[rng.integers(len(candidates))]

    blocks = []
    payloads = []
    for level in range(levels):
        for _ in range(int(rng.integers(1, 3))):
            perm = _orbit_action(group, int(rng.integers(group.size)))
            offset = len(payloads)
            blocks.append(perm + offset)
            payloads.extend(f"{level}:{offset + j}" for j in range(perm.shape[1]))
    vperm = np.concatenate(blocks, axis=1)
    level_of = [int(p.split(":")[0]) for p in payloads]

    relation = nx.DiGraph()
    relation.add_nodes_from(range(len(payloads)))
    for x in range(len(payloads)):
        for y in range(len(payloads)):
            if level_of[x] < level_of[y] and rng.random() < 0.35:
                relation.add_edges_from((int(vperm[h, x]), int(vperm[h, y])) for h in range(group.size))
    closure = nx.transitive_closure_dag(relation)
    base = Scwol.from_relation(payloads, list(closure.edges))
    eperm = np.array([[base.edge_index[(int(vperm[h, i]), int(vperm[h, t]))] for i, t in base.edges]
                      for h in range(group.size)], dtype=np.int64).reshape(group.size, len(base.edges))

    ambients = ambient_groups()
    ambient = ambients[rng.integers(len(ambients))]
    lattice = subgroup_lattice(ambient)
    invert = is_abelian(ambient)
    members_of: Dict[int, Tuple[int, ...]] = {}
    tables: Dict[Tuple[int, ...], FiniteGroupTable] = {}
    for v in sorted(range(len(payloads)), key=lambda v: level_of[v]):
        if v in members_of:
            continue
        orbit = sorted({int(vperm[h, v]) for h in range(group.size)})
        below = {g for w in orbit for a in base.in_edges(w) for g in members_of[base.i(a)]}
        required = ambient.closure(below)
        choices = [members for members in lattice if set(required) <= set(members)]
        members = choices[rng.integers(len(choices))]
        for w in orbit:
            members_of[w] = members
        if members not in tables:
            tables[members], _ = Subgroup(ambient, members).as_table(f"{ambient.name}[{len(members)}]")

    local = [tables[members_of[v]] for v in range(len(payloads))]
    psi = [np.searchsorted(members_of[t], members_of[i]) for i, t in base.edges]
    base_complex = simple_complex(base, local, psi, name="random")

    c, subdivision = subdivide_complex(base_complex)
    act = subdivide_action(ScwolAction(group, base, vperm, eperm), subdivision)

    def local_iso(h: int, v: int) -> np.ndarray:
        if invert and sign[h]:
            return c.local[v].inv
        return np.arange(c.local[v].size)

    complex_action, report = extend_action_to_cog(c, act, local_iso)
    if not report.passed:
        raise ConstructionError(f"Random equivariant complex is inconsistent: {report}")
    return c, complex_action
