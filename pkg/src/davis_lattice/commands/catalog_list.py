import argparse
from pathlib import Path

from davis_lattice.commands.common import add_output_arguments
from davis_lattice.nerve.catalog import catalog_names
from davis_lattice.report import Report


def add_parser(subparsers: argparse._SubParsersAction):
    """
    Adds a new parser to subparsers
    :param subparsers: Subparsers action
    """
    parser = subparsers.add_parser(
        "catalog-list",
        help="List the example Coxeter systems accepted by --catalog"
    )
    add_output_arguments(parser)
    parser.set_defaults(func=_parser_callback)


def _parser_callback(args: argparse.Namespace) -> int:
    """
    Catalog listing callback function
    :param args: Supplied arguments
    :return: Exit code - 0 if the listing was written or 1 if not
    """
    rendered = catalog_report().render(args.format)
    if args.out is None:
        print(rendered, end="")
        return 0
    try:
        Path(args.out).write_text(rendered, encoding="utf-8")
    except OSError as e:
        print(f"Cannot write report: {e}")
        return 1
    print(f"Report written to {args.out}.")
    return 0


def catalog_report() -> Report:
    report = Report("catalog-list", "catalog")
    report.tables["catalog"] = [
        {"name": entry.name, "signature": entry.signature, "description": entry.description}
        for entry in catalog_names()
    ]
    return report
