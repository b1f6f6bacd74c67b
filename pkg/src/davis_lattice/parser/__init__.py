from pathlib import Path, PurePath

from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.error import ParseError
from davis_lattice.parser import text, yaml
from davis_lattice.parser.system import SystemDocument
from davis_lattice.parser.utils.location import Location

YAML_SUFFIXES = (".yaml", ".yml")


def parse_system(document: str, stream_name: str = "<string>", syntax: str = "text") -> CoxeterSystem:
    """
    Parse a Coxeter system document
    :param document: Document contents
    :param stream_name: Name used in error locations
    :param syntax: Either text or yaml
    :return: Validated CoxeterSystem
    """
    if syntax == "yaml":
        root = yaml.load(document, stream_name)
    elif syntax == "text":
        root = text.load(document, stream_name)
    else:
        raise ParseError(f"Unsupported document syntax: {syntax}.", Location(stream_name, 0, 0))
    return SystemDocument.parse(root)


def load_system(path: PurePath) -> CoxeterSystem:
    """
    Load a Coxeter system document; .yaml/.yml files are read as YAML, anything else as text
    :param path: Path to the document
    :return: Validated CoxeterSystem
    """
    try:
        document = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read system document: {e.strerror}.", Location(str(path), 0, 0)) from e
    syntax = "yaml" if PurePath(path).suffix.lower() in YAML_SUFFIXES else "text"
    return parse_system(document, str(path), syntax)
