from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from davis_lattice.parser.utils.location import Location


class DavisLatticeError(Exception):
    """Base exception for catch-all-davis-lattice-errors constructs."""


class ParseError(DavisLatticeError):
    """Exception that is raised on an invalid Coxeter system document."""

    def __init__(self, msg: str, loc: "Location"):
        """
        Construct ParseError object
        :param msg: Error message
        :param loc: Location of the error in the system document
        """
        super().__init__(msg)
        self.loc = loc


class ConstructionError(DavisLatticeError):
    """Raised when a requested object does not exist for the given input data."""


class CatalogError(ConstructionError):
    """Raised on unknown catalog names or invalid catalog parameters."""


class ResourceError(DavisLatticeError):
    """Raised when a computation would exceed one of the configured bounds."""

    def __init__(self, msg: str, bound: Optional[str] = None):
        """
        Construct ResourceError object
        :param msg: Error message
        :param bound: Name of the exceeded bound
        """
        super().__init__(msg)
        self.bound = bound


class WordTooLongError(ResourceError):
    """Raised when a word is too long for exact reduction."""


class OrderBoundError(ResourceError):
    """Raised when a group is larger than the configured order bound."""


class EnumerationError(ResourceError):
    """Raised when coset enumeration defines more cosets than allowed."""
