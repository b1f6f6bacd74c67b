import argparse
from typing import Any, Dict, List

from davis_lattice.commands.common import add_common_arguments, guarded, load_input, run_command, timed
from davis_lattice.config import Bounds, RunConfig
from davis_lattice.coxeter.group import enumerate_group, halvable_generators
from davis_lattice.coxeter.spherical import spherical_order, spherical_subsets
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.nerve.automorphisms import label_automorphisms, nondiscreteness_check
from davis_lattice.nerve.nerve import Nerve, build_nerve
from davis_lattice.nerve.witness import Witness, check_conditions, explain_no_witness, find_witnesses
from davis_lattice.report import CheckReport, Report

LISTED_WITNESSES = 5


def add_parser(subparsers: argparse._SubParsersAction):
    """
    Adds a new parser to subparsers
    :param subparsers: Subparsers action
    """
    parser = subparsers.add_parser(
        "check",
        help="Report nerve data, nondiscreteness, witnesses and the halvability table of a Coxeter system"
    )
    add_common_arguments(parser)
    parser.set_defaults(func=_parser_callback)


def _parser_callback(args: argparse.Namespace) -> int:
    """
    Check callback function
    :param args: Supplied arguments
    :return: Exit code - 0 if all checks passed or 1 if not
    """
    return run_command(args, check)


def check(config: RunConfig) -> Report:
    """
    Examine a Coxeter system for the lattice construction
    :param config: Run configuration
    :return: Report with nerve, nondiscreteness, witness and halvability tables
    """
    report = Report("check", config.source, {"witnesses_listed": LISTED_WITNESSES})
    with timed(report.timing, "load"):
        sys = load_input(config)
        nerve = build_nerve(sys)
    with timed(report.timing, "automorphisms"):
        auts = label_automorphisms(nerve, config.bounds)
    report.tables["nerve"] = {
        "generators": sys.rank,
        "edges": len(nerve.edges()),
        "dimension": nerve.dimension,
        "f_vector": nerve.f_vector(),
        "automorphisms": len(auts),
    }

    found = nondiscreteness_check(nerve, config.bounds, auts)
    report.tables["nondiscreteness"] = (
        {"nondiscrete": True, "automorphism": found[0].cycles(), "fixed_star": found[1]} if found
        else {"nondiscrete": False}
    )

    with timed(report.timing, "witnesses"):
        witnesses = find_witnesses(sys, config.bounds, auts=auts)
    listing: Dict[str, Any] = {
        "count": len(witnesses),
        "first": [w.to_dict() for w in witnesses[:LISTED_WITNESSES]],
    }
    if not witnesses:
        listing["reason"] = explain_no_witness(sys, config.bounds, auts)
    report.tables["witnesses"] = listing

    with timed(report.timing, "halvability"):
        report.tables["halvability"] = halvability_table(sys, config.bounds)
        report.checks.append(guarded("spherical orders", lambda: check_spherical_orders(sys, config.bounds)))
    report.checks.append(check_witnesses(sys, nerve, witnesses, config.bounds))
    return report


def halvability_table(sys: CoxeterSystem, bounds: Bounds = Bounds()) -> List[Dict[str, Any]]:
    """
    One row per nonempty spherical subset T
    :param sys: Coxeter system
    :param bounds: Resource bounds
    :return: Rows with the type of W_T, its order and the generators it halves along
    """
    rows = []
    for subset in spherical_subsets(sys):
        if not subset.members:
            continue
        rows.append({
            "T": sys.format_type(subset.members),
            "type": subset.type_name,
            "order": spherical_order(subset),
            "halvable_along": halvable_generators(sys, subset.members, bounds),
        })
    return rows


def check_spherical_orders(sys: CoxeterSystem, bounds: Bounds = Bounds()) -> CheckReport:
    """Enumerated |W_T| against the classification for every spherical T"""
    report = CheckReport("spherical orders")
    subsets = spherical_subsets(sys)
    for subset in subsets:
        enumerated = enumerate_group(sys, subset, bounds).size
        if enumerated != spherical_order(subset):
            report.add("order", sys.format_type(subset.members),
                       f"enumerated {enumerated}, classified {spherical_order(subset)}")
    report.stats = {"spherical_subsets": len(subsets)}
    return report


def check_witnesses(sys: CoxeterSystem, nerve: Nerve, witnesses: List[Witness],
                    bounds: Bounds = Bounds()) -> CheckReport:
    report = CheckReport("witness conditions")
    for i, wit in enumerate(witnesses):
        for condition in check_conditions(sys, nerve, wit.s1, wit.s2, wit.alpha1, wit.alpha2, bounds):
            report.add(condition, f"witness {i}", str(wit))
    report.stats = {"witnesses": len(witnesses)}
    return report
