import argparse

from davis_lattice.action.actions import act_on_GYn, act_on_Yn
from davis_lattice.action.covolume import covolume_report, induce_HZn
from davis_lattice.action.domain import fundamental_domain
from davis_lattice.cog.action import validate_action
from davis_lattice.cog.complex import validate_cog
from davis_lattice.cog.morphism import validate_covering
from davis_lattice.commands.common import (add_common_arguments, guarded, load_input, run_command, select_witness,
                                           skip_all, timed)
from davis_lattice.config import RunConfig
from davis_lattice.davis.chamber import build_Yn, subcomplex_isos, verify_disjointness
from davis_lattice.davis.complexes import build_covering_to_GY1, build_GYn
from davis_lattice.error import ResourceError
from davis_lattice.report import CheckReport, Report

ACTION_SUITES = [
    "action", "action on complex of groups", "fundamental domain", "induced complex of groups",
    "induced covering", "canonical morphism", "covolume consistency",
]


def add_parser(subparsers: argparse._SubParsersAction):
    """
    Adds a new parser to subparsers
    :param subparsers: Subparsers action
    """
    parser = subparsers.add_parser(
        "verify",
        help="Run every axiom suite for Y_n, G(Y_n), the H_n action and the induced H(Z_n)"
    )
    add_common_arguments(parser)
    parser.add_argument(
        "--n", "-n", type=int, default=1, help="Truncation level"
    )
    parser.set_defaults(func=_parser_callback)


def _parser_callback(args: argparse.Namespace) -> int:
    """
    Verify callback function
    :param args: Supplied arguments
    :return: Exit code - 0 if every suite passed or was skipped or 1 if not
    """
    return run_command(args, verify)


def verify(config: RunConfig) -> Report:
    """
    Build every object for truncation level n and validate it exhaustively
    :param config: Run configuration
    :return: Report with one check per axiom suite
    """
    n, bounds = config.n, config.bounds
    report = Report("verify", config.source, {"n": n, "witness": config.witness})
    with timed(report.timing, "load"):
        sys = load_input(config)
        wit = select_witness(sys, config)
    report.tables["witness"] = wit.to_dict()

    with timed(report.timing, "chambers"):
        report.checks.append(guarded("disjointness", lambda: verify_disjointness(wit, sys, n, bounds)))
        y = build_Yn(wit, sys, n)
        report.checks.append(y.check_invariants())
        if n >= 2:
            isos = CheckReport("subcomplex isomorphisms")
            for iso in subcomplex_isos(wit, sys, n):
                isos.extend(iso.check())
            report.checks.append(isos)

    with timed(report.timing, "complexes of groups"):
        gyn = build_GYn(wit, sys, n, bounds, y=y)
        cog_check = validate_cog(gyn)
        cog_check.name = f"complex of groups G(Y_{n})"
        report.checks.append(cog_check)
        covering = validate_covering(build_covering_to_GY1(wit, sys, n, bounds, y=y, gyn=gyn))
        covering.name = f"covering G(Y_{n}) -> G(Y_1)"
        report.checks.append(covering)

    try:
        with timed(report.timing, "action"):
            chamber_action = act_on_Yn(wit, sys, n, bounds, y=y)
            report.checks.append(validate_action(chamber_action.action, bounds))
            groups_action = act_on_GYn(wit, sys, n, bounds, chamber_action=chamber_action, gyn=gyn)
            report.checks.append(groups_action.report)
            report.checks.append(fundamental_domain(wit, sys, n, bounds, action=chamber_action).check())
        with timed(report.timing, "induced complex"):
            induced = induce_HZn(wit, sys, n, bounds, groups_action=groups_action)
            report.checks.extend(induced.checks())
            report.checks.append(covolume_report(wit, sys, n, bounds, induced=induced).consistency())
        report.tables["counts"] = {
            "chambers": len(y.chambers),
            "group_order": chamber_action.group.size,
            "quotient_vertices": len(induced.hz.scwol.vertices),
        }
    except ResourceError as e:
        done = {check.name for check in report.checks}
        report.checks.extend(skip_all([name for name in ACTION_SUITES if name not in done], e))
    return report
