"""Arguments, input loading and report output shared by the commands."""
import argparse
import logging
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Callable, Dict, Iterator, List

import shtab

from davis_lattice.config import OUTPUT_FORMATS, Bounds, RunConfig
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.error import ConstructionError, DavisLatticeError, ParseError, ResourceError
from davis_lattice.nerve.catalog import catalog_system
from davis_lattice.nerve.witness import Witness, explain_no_witness, find_witnesses
from davis_lattice.parser import load_system
from davis_lattice.report import CheckReport, Report

logger = logging.getLogger(__name__)


def add_common_arguments(parser: argparse.ArgumentParser):
    """
    Add input, output and bounds arguments to a command parser
    :param parser: Command parser
    """
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--system", "-f", type=str, help="Coxeter system document (text, or YAML with a .yaml/.yml suffix)"
    ).complete = shtab.FILE
    source.add_argument(
        "--catalog", "-c", type=str, help="Catalog system such as two_apex(4,4) (see catalog-list)"
    )
    parser.add_argument(
        "--witness", "-w", type=int, default=0, help="Index of the witness in search order"
    )
    add_output_arguments(parser)
    parser.add_argument(
        "--jobs", "-j", type=int, default=1, help="Maximum number of worker processes"
    )
    defaults = Bounds()
    for name in ("max_word_length", "max_group_order", "max_coset_table", "max_nerve_vertices",
                 "max_wreath_order", "max_action_order"):
        parser.add_argument(
            f"--{name.replace('_', '-')}", type=int, default=getattr(defaults, name),
            help=f"Resource bound {name}"
        )


def add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format", "-o", choices=OUTPUT_FORMATS, default="text", help="Report format"
    )
    parser.add_argument(
        "--out", type=str, help="Write the report to this file instead of stdout"
    ).complete = shtab.FILE


def load_input(config: RunConfig) -> CoxeterSystem:
    """
    Load the Coxeter system named by the configuration
    :param config: Run configuration
    :return: CoxeterSystem object
    """
    if config.system_path is not None:
        return load_system(config.system_path)
    return catalog_system(config.catalog)


def select_witness(sys: CoxeterSystem, config: RunConfig) -> Witness:
    """
    Pick the requested witness in search order
    :param sys: Coxeter system
    :param config: Run configuration
    :return: Witness object
    """
    witnesses = find_witnesses(sys, config.bounds, limit=config.witness + 1)
    if not witnesses:
        reasons = explain_no_witness(sys, config.bounds)
        raise ConstructionError(f"Not a witness system: {', '.join(reasons)} fails for every candidate")
    if config.witness >= len(witnesses):
        raise ConstructionError(f"Witness index {config.witness} out of range, found {len(witnesses)}")
    return witnesses[config.witness]


def guarded(name: str, suite: Callable[[], CheckReport]) -> CheckReport:
    """
    Run an axiom suite, reporting resource limits as a skip
    :param name: Suite name used when skipped
    :param suite: Callable producing the CheckReport
    :return: CheckReport
    """
    try:
        return suite()
    except ResourceError as e:
        logger.warning("Skipping %s: %s", name, e)
        return CheckReport.skipped(name, str(e))


def skip_all(names: List[str], reason: ResourceError) -> List[CheckReport]:
    logger.warning("Skipping %s: %s", ", ".join(names), reason)
    return [CheckReport.skipped(name, str(reason)) for name in names]


@contextmanager
def timed(timing: Dict[str, float], key: str) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    finally:
        timing[key] = timing.get(key, 0.0) + time.perf_counter() - start


def emit(report: Report, config: RunConfig):
    """
    Render the report to --out or stdout
    :param report: Report
    :param config: Run configuration
    """
    rendered = report.render(config.output_format)
    if config.out is not None:
        Path(config.out).write_text(rendered, encoding="utf-8")
        print(f"Report written to {config.out}.")
    else:
        print(rendered, end="")


def run_command(args: argparse.Namespace, build_report: Callable[[RunConfig], Report]) -> int:
    """
    Configure, run and emit one command
    :param args: Supplied arguments
    :param build_report: Command body
    :return: Exit code - 0 if every check passed, 1 otherwise
    """
    try:
        config = RunConfig.from_args(args)
    except ValueError as e:
        print(f"Invalid arguments: {e}")
        return 1

    try:
        report = build_report(config)
    except ParseError as e:
        print(f"{e.loc}: {e}")
        return 1
    except ResourceError as e:
        print(f"Resource bound exceeded: {e}")
        return 1
    except DavisLatticeError as e:
        print(str(e))
        return 1
    except OSError as e:
        print(f"Cannot write output: {e}")
        return 1

    try:
        emit(report, config)
    except OSError as e:
        print(f"Cannot write report: {e}")
        return 1
    return 0 if report.passed else 1

