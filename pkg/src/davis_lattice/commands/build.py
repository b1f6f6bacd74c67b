import argparse
from pathlib import Path
from typing import Optional

import shtab

from davis_lattice.cog.complex import validate_cog
from davis_lattice.commands.common import add_common_arguments, load_input, run_command, select_witness, timed
from davis_lattice.config import RunConfig
from davis_lattice.davis.chamber import build_chamber, build_Yn
from davis_lattice.davis.complexes import build_GY1, build_GYn
from davis_lattice.davis.export import dual_graph_dot, dual_graph_edges
from davis_lattice.report import Report


def add_parser(subparsers: argparse._SubParsersAction):
    """
    Adds a new parser to subparsers
    :param subparsers: Subparsers action
    """
    parser = subparsers.add_parser(
        "build",
        help="Build the chamber complex Y_n and the complex of groups G(Y_n)"
    )
    add_common_arguments(parser)
    parser.add_argument(
        "--n", "-n", type=int, default=1, help="Truncation level"
    )
    parser.add_argument(
        "--dot", type=str, help="Write the dual graph of Y_n in DOT format to this file"
    ).complete = shtab.FILE
    parser.set_defaults(func=_parser_callback)


def _parser_callback(args: argparse.Namespace) -> int:
    """
    Build callback function
    :param args: Supplied arguments
    :return: Exit code - 0 if the built objects pass their checks or 1 if not
    """
    return run_command(args, lambda config: build(config, Path(args.dot) if args.dot else None))


def build(config: RunConfig, dot_path: Optional[Path] = None) -> Report:
    """
    Build Y_n and G(Y_n) and check their invariants
    :param config: Run configuration
    :param dot_path: Optional destination of the dual graph export
    :return: Report with chamber counts and the dual graph
    """
    n = config.n
    report = Report("build", config.source, {"n": n})
    with timed(report.timing, "load"):
        sys = load_input(config)
    with timed(report.timing, "chambers"):
        if n == 1:
            y = build_chamber(sys)
        else:
            wit = select_witness(sys, config)
            report.params["witness"] = config.witness
            report.tables["witness"] = wit.to_dict()
            y = build_Yn(wit, sys, n)
    with timed(report.timing, "complex of groups"):
        gyn = build_GY1(sys, config.bounds) if n == 1 else build_GYn(wit, sys, n, config.bounds, y=y)

    report.tables["chambers"] = {
        "total": len(y.chambers),
        "levels": y.level_counts(),
        "vertices": len(y.vertices),
        "edges": len(y.scwol.edges),
        "interior_mirrors": len(y.interior_mirrors()),
    }
    report.tables["dual_graph"] = [
        {"lower": str(lower), "upper": str(upper), "mirror": s} for lower, upper, s in dual_graph_edges(y)
    ]
    if dot_path is not None:
        dot_path.write_text(dual_graph_dot(y), encoding="utf-8")
        report.params["dot"] = str(dot_path)

    report.checks.append(y.check_invariants())
    cog_check = validate_cog(gyn)
    cog_check.name = f"complex of groups G(Y_{n})"
    report.checks.append(cog_check)
    return report
