"""
Reader for the line-oriented system format::

    # Example document
    generators: s1 s2 s3
    m s1 s2 = 4
    default = inf

Produces the same node tree as the YAML reader, so both share one validator.
"""
import math
import re
from typing import Dict, List, Optional

from davis_lattice.error import ParseError
from davis_lattice.parser.utils.location import Location
from davis_lattice.parser.yaml.node import Node

INFINITY_TOKENS = ("inf", "infinity", "∞")

_TOKEN = re.compile(r"\S+")
_GENERATORS = re.compile(r"^generators\s*:(.*)$")
_LABEL = re.compile(r"^m\s+(\S+)\s+(\S+)\s*=\s*(\S+)$")
_DEFAULT = re.compile(r"^default\s*=\s*(\S+)$")


def parse_label_token(token: str, loc: Location) -> Node:
    if token.lower() in INFINITY_TOKENS:
        return Node(math.inf, loc)
    if re.fullmatch(r"[-+]?[0-9]+", token):
        return Node(int(token), loc)
    raise ParseError(f"Invalid label '{token}': expected an integer or inf.", loc)


def _tokens(text: str, line: int, offset: int, stream_name: str) -> List[Node]:
    return [
        Node(m.group(0), Location(stream_name, line, offset + m.start() + 1))
        for m in _TOKEN.finditer(text)
    ]


def load(text: str, stream_name: str) -> Node:
    """
    Read a line-oriented system document
    :param text: Document contents
    :param stream_name: Stream name used in locations
    :return: Root map node with generators, default and labels entries
    """
    root: Dict[Node, Node] = {}
    keys: Dict[str, Node] = {}
    labels: List[Node] = []
    labels_loc: Optional[Location] = None

    def put(key: str, value: Node, loc: Location):
        if key in keys:
            raise ParseError(f"Duplicate '{key}' line, first given at {keys[key].loc}.", loc)
        keys[key] = Node(key, loc)
        root[keys[key]] = value

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        loc = Location(stream_name, number, indent + 1)

        match = _GENERATORS.match(stripped)
        if match:
            offset = indent + match.start(1)
            put("generators", Node(_tokens(match.group(1), number, offset, stream_name), loc), loc)
            continue

        match = _DEFAULT.match(stripped)
        if match:
            put("default", parse_label_token(match.group(1), Location(stream_name, number, indent + match.start(1) + 1)), loc)
            continue

        match = _LABEL.match(stripped)
        if match:
            parts = [
                Node(match.group(1), Location(stream_name, number, indent + match.start(1) + 1)),
                Node(match.group(2), Location(stream_name, number, indent + match.start(2) + 1)),
                parse_label_token(match.group(3), Location(stream_name, number, indent + match.start(3) + 1)),
            ]
            labels.append(Node(parts, loc))
            labels_loc = labels_loc or loc
            continue

        raise ParseError(f"Malformed line: '{stripped}'.", loc)

    if labels:
        root[Node("labels", labels_loc)] = Node(labels, labels_loc)
    return Node(root, Location(stream_name, 1, 1))
