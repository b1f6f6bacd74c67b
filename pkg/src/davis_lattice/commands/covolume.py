import argparse
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Union

from davis_lattice.action.covolume import CovolumeReport, covolume_report, covolume_series, covolume_trend
from davis_lattice.commands.common import add_common_arguments, load_input, run_command, select_witness, timed
from davis_lattice.config import Bounds, RunConfig
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.error import ResourceError
from davis_lattice.nerve.witness import Witness
from davis_lattice.report import CheckReport, Report

logger = logging.getLogger(__name__)


def add_parser(subparsers: argparse._SubParsersAction):
    """
    Adds a new parser to subparsers
    :param subparsers: Subparsers action
    """
    parser = subparsers.add_parser(
        "covolume",
        help="Tabulate the direct covolume of H(Z_n) against the series value for n = 1..n-max"
    )
    add_common_arguments(parser)
    parser.add_argument(
        "--n-max", "-n", type=int, default=1, help="Largest truncation level"
    )
    parser.set_defaults(func=_parser_callback)


def _parser_callback(args: argparse.Namespace) -> int:
    """
    Covolume callback function
    :param args: Supplied arguments
    :return: Exit code - 0 if every consistency check passed or 1 if not
    """
    return run_command(args, covolume)


def _row(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds) -> Union[CovolumeReport, ResourceError]:
    try:
        return covolume_report(wit, sys, n, bounds)
    except ResourceError as e:
        return e


def covolume(config: RunConfig) -> Report:
    """
    Compute covolume reports for every truncation level up to n_max
    :param config: Run configuration
    :return: Report with the covolume table, per-vertex tables and the trend summary
    """
    report = Report("covolume", config.source, {"n_max": config.n_max, "witness": config.witness})
    with timed(report.timing, "load"):
        sys = load_input(config)
        wit = select_witness(sys, config)
    report.tables["witness"] = wit.to_dict()

    levels = range(1, config.n_max + 1)
    with timed(report.timing, "covolumes"):
        if config.jobs > 1 and len(levels) > 1:
            with ProcessPoolExecutor(max_workers=min(config.jobs, len(levels))) as executor:
                results = list(executor.map(_row, repeat(wit), repeat(sys), levels, repeat(config.bounds)))
        else:
            results = [_row(wit, sys, n, config.bounds) for n in levels]

    series = covolume_series(wit, config.n_max)
    rows, computed = [], []
    for n, result in zip(levels, results):
        if isinstance(result, ResourceError):
            logger.warning("Skipping covolume for n=%d: %s", n, result)
            rows.append({"n": n, "direct": "skipped", "series": str(series[n - 1]), "agree": None})
            report.checks.append(CheckReport.skipped(f"covolume consistency n={n}", str(result)))
            continue
        computed.append(result)
        data = result.to_dict()
        rows.append({key: data[key] for key in ("n", "direct", "series", "agree")})
        report.tables[f"per_vertex n={n}"] = data["per_vertex"]
        report.checks.append(result.consistency())
    report.tables["covolume"] = rows
    report.tables["trend"] = covolume_trend(computed)
    return report

