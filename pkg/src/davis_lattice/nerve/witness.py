import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from sympy import isprime

from davis_lattice.config import Bounds
from davis_lattice.coxeter.group import halving
from davis_lattice.coxeter.system import INFINITY, CoxeterSystem
from davis_lattice.nerve.automorphisms import LabelAut, fixes_star, label_automorphisms
from davis_lattice.nerve.nerve import Nerve, build_nerve

logger = logging.getLogger(__name__)

CONDITION_STAR = "Condition (1)"
CONDITION_ORBIT = "Condition (2)"
CONDITION_HALVABLE = "Condition (3)"


@dataclass(frozen=True)
class Witness:
    """
    Data (s1, s2, alpha1, alpha2) for the lattice construction.

    Indices are periodic: s_k is s1 for odd k and s2 for even k, likewise for alpha_k and q_k.
    """

    s1: str
    s2: str
    alpha1: LabelAut
    alpha2: LabelAut

    @property
    def q1(self) -> int:
        return self.alpha1.order

    @property
    def q2(self) -> int:
        return self.alpha2.order

    def s(self, k: int) -> str:
        return self.s1 if k % 2 == 1 else self.s2

    def alpha(self, k: int) -> LabelAut:
        return self.alpha1 if k % 2 == 1 else self.alpha2

    def q(self, k: int) -> int:
        return self.q1 if k % 2 == 1 else self.q2

    def to_dict(self) -> dict:
        return {
            "s1": self.s1, "s2": self.s2,
            "alpha1": self.alpha1.cycles(), "alpha2": self.alpha2.cycles(),
            "q1": self.q1, "q2": self.q2,
        }

    def __str__(self) -> str:
        return f"s1={self.s1} s2={self.s2} alpha1={self.alpha1} alpha2={self.alpha2}"


def orbit_condition(sys: CoxeterSystem, alpha: LabelAut, s: str) -> bool:
    """Every other point of the alpha-orbit of s is joined to s by an infinite label"""
    return all(sys.m(s, t) == INFINITY for t in alpha.orbit(s) if t != s)


def halvable_everywhere(sys: CoxeterSystem, nerve: Nerve, s: str, bounds: Bounds = Bounds()) -> bool:
    """Every spherical T containing s is halvable along s"""
    return all(halving(sys, simplex, s, bounds) is not None for simplex in nerve.simplices_containing(s))


def check_conditions(sys: CoxeterSystem, nerve: Nerve, s1: str, s2: str, alpha1: LabelAut, alpha2: LabelAut,
                     bounds: Bounds = Bounds()) -> List[str]:
    """
    Check the three witness conditions independently of the search
    :return: Names of the failing conditions, empty when (s1, s2, alpha1, alpha2) is a witness
    """
    failed = []
    pairs = ((s1, s2, alpha1), (s2, s1, alpha2))
    if not all(fixes_star(nerve, a, other) and a(s) != s for s, other, a in pairs):
        failed.append(CONDITION_STAR)
    if not all(orbit_condition(sys, a, s) for s, _, a in pairs):
        failed.append(CONDITION_ORBIT)
    if not all(halvable_everywhere(sys, nerve, s, bounds) for s, _, _ in pairs):
        failed.append(CONDITION_HALVABLE)
    return failed


def find_witnesses(sys: CoxeterSystem, bounds: Bounds = Bounds(), limit: Optional[int] = None,
                   auts: Optional[List[LabelAut]] = None) -> List[Witness]:
    """
    Enumerate witnesses in (s1, s2, alpha1, alpha2) search order
    :param sys: Coxeter system
    :param bounds: Resource bounds
    :param limit: Stop after this many witnesses
    :param auts: Precomputed automorphism group of the nerve
    :return: List of witnesses with prime-order automorphisms
    """
    nerve = build_nerve(sys)
    auts = label_automorphisms(nerve, bounds) if auts is None else auts
    prime = [a for a in auts if isprime(a.order)]
    fixers: Dict[str, List[LabelAut]] = {
        s: [a for a in prime if fixes_star(nerve, a, s)] for s in nerve.vertices
    }
    halvable = {s: halvable_everywhere(sys, nerve, s, bounds) for s in nerve.vertices}

    witnesses: List[Witness] = []
    for s1 in nerve.vertices:
        if not halvable[s1]:
            continue
        for s2 in nerve.vertices:
            if s2 == s1 or not halvable[s2]:
                continue
            firsts = [a for a in fixers[s2] if a(s1) != s1 and orbit_condition(sys, a, s1)]
            seconds = [a for a in fixers[s1] if a(s2) != s2 and orbit_condition(sys, a, s2)]
            for alpha1 in firsts:
                for alpha2 in seconds:
                    witnesses.append(Witness(s1, s2, alpha1, alpha2))
                    if limit is not None and len(witnesses) >= limit:
                        return witnesses
    logger.debug("Found %d witnesses for %s", len(witnesses), sys)
    return witnesses


def explain_no_witness(sys: CoxeterSystem, bounds: Bounds = Bounds(),
                       auts: Optional[List[LabelAut]] = None) -> List[str]:
    """
    Name the conditions that rule out every candidate
    :return: Conditions failing for all candidate pairs, in condition order
    """
    nerve = build_nerve(sys)
    auts = label_automorphisms(nerve, bounds) if auts is None else auts
    prime = [a for a in auts if isprime(a.order)]
    halvable = {s: halvable_everywhere(sys, nerve, s, bounds) for s in nerve.vertices}
    star_ok = any(
        a(s1) != s1 and fixes_star(nerve, a, s2)
        for s1 in nerve.vertices for s2 in nerve.vertices if s1 != s2 for a in prime
    )
    orbit_ok = any(a(s) != s and orbit_condition(sys, a, s) for s in nerve.vertices for a in prime)
    reasons = []
    if not star_ok:
        reasons.append(CONDITION_STAR)
    if not orbit_ok:
        reasons.append(CONDITION_ORBIT)
    if not any(halvable.values()):
        reasons.append(CONDITION_HALVABLE)
    return reasons or ["no candidate satisfies all conditions at once"]
