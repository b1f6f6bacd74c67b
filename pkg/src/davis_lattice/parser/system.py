from typing import Dict, Optional, Tuple

from davis_lattice.coxeter.system import INFINITY, CoxeterSystem, Label
from davis_lattice.error import ParseError
from davis_lattice.parser.utils.location import Location
from davis_lattice.parser.yaml.node import Node


class SystemDocument:
    """Validation and construction of a Coxeter system from a document node tree."""

    KEYS = ("generators", "default", "labels")

    @classmethod
    def parse(cls, yaml_node: Node) -> CoxeterSystem:
        """
        Parse document Node to CoxeterSystem object
        :param yaml_node: Root node
        :return: Validated CoxeterSystem
        """
        entries = cls.normalize(yaml_node)
        cls.validate(entries, yaml_node.loc)
        return cls.build(entries)

    @classmethod
    def abort(cls, msg: str, loc: Optional[Location] = None):
        """
        Abort from SystemDocument class
        :param msg: Error message
        :param loc: Location of the error in the document
        :raises: ParseError
        """
        raise ParseError(f"[{cls.__name__}] {msg}", loc)

    @classmethod
    def normalize(cls, yaml_node: Node) -> Dict[str, Tuple[Node, Node]]:
        if not isinstance(yaml_node.value, dict):
            cls.abort("Top level structure should be a map.", yaml_node.loc)
        return yaml_node.entries()

    @classmethod
    def _label(cls, node: Node) -> Label:
        value = node.value
        if value == INFINITY:
            return INFINITY
        if not isinstance(value, int) or isinstance(value, bool):
            cls.abort("Expected integer or inf label.", node.loc)
        if value < 2:
            cls.abort(f"Off-diagonal label must be at least 2, got {value}.", node.loc)
        return value

    @classmethod
    def validate(cls, entries: Dict[str, Tuple[Node, Node]], loc: Location):
        for key, (key_node, _) in entries.items():
            if key not in cls.KEYS:
                cls.abort(f"Unknown key '{key}'. Available: {', '.join(cls.KEYS)}.", key_node.loc)
        if "generators" not in entries:
            cls.abort("Missing generators.", loc)

        generators = entries["generators"][1]
        if not isinstance(generators.value, list) or not generators.value:
            cls.abort("Expected non-empty list of generators.", generators.loc)
        seen: Dict[str, Location] = {}
        for g in generators.value:
            if not isinstance(g.value, str) or not g.value:
                cls.abort("Generator names must be strings.", g.loc)
            if g.value in seen:
                cls.abort(f"Duplicate generator '{g.value}', first declared at {seen[g.value]}.", g.loc)
            seen[g.value] = g.loc

        if "default" in entries:
            cls._label(entries["default"][1])

        if "labels" in entries:
            labels = entries["labels"][1]
            if not isinstance(labels.value, list):
                cls.abort("Expected list of labels.", labels.loc)
            given: Dict[Tuple[str, str], Tuple[Label, Location]] = {}
            for item in labels.value:
                if not isinstance(item.value, list) or len(item.value) != 3:
                    cls.abort("Expected label triple [s, t, m].", item.loc)
                s_node, t_node, label_node = item.value
                for g in (s_node, t_node):
                    if g.value not in seen:
                        cls.abort(f"Unknown generator '{g.value}'.", g.loc)
                s, t = s_node.value, t_node.value
                if s == t:
                    if label_node.value != 1:
                        cls.abort(f"Diagonal label for '{s}' must be 1.", label_node.loc)
                    continue
                label = cls._label(label_node)
                if (s, t) in given:
                    cls.abort(f"Duplicate label for ({s}, {t}), first given at {given[(s, t)][1]}.", item.loc)
                if (t, s) in given and given[(t, s)][0] != label:
                    cls.abort(
                        f"Label matrix is asymmetric: m({t},{s}) = {given[(t, s)][0]} but m({s},{t}) = {label}.",
                        label_node.loc,
                    )
                given[(s, t)] = (label, item.loc)

    @classmethod
    def build(cls, entries: Dict[str, Tuple[Node, Node]]) -> CoxeterSystem:
        generators = [g.value for g in entries["generators"][1].value]
        default = entries["default"][1].value if "default" in entries else INFINITY
        labels: Dict[Tuple[str, str], Label] = {}
        if "labels" in entries:
            for item in entries["labels"][1].value:
                s, t, k = (n.value for n in item.value)
                if s != t:
                    labels[(s, t)] = k
        return CoxeterSystem.from_labels(generators, labels, default if default == INFINITY else int(default))
