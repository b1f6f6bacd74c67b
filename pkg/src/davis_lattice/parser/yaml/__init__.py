from typing import Any

from yaml.error import MarkedYAMLError

from davis_lattice.error import ParseError
from davis_lattice.parser.utils.location import Location
from .loader import Loader
from .node import Node


def load(stream: Any, stream_name: str) -> Node:
    """
    Load a YAML document into location-annotated nodes
    :param stream: IO Stream or text
    :param stream_name: Stream name used in locations
    :return: Root node
    """
    ldr = Loader(stream, stream_name)
    try:
        return ldr.get_single_data()
    except MarkedYAMLError as e:
        mark = e.problem_mark or e.context_mark
        loc = Location(stream_name, mark.line + 1, mark.column + 1) if mark else Location(stream_name, 0, 0)
        raise ParseError(f"Invalid YAML: {e.problem or e.context}", loc) from e
    finally:
        ldr.dispose()
