import argparse
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional

OUTPUT_FORMATS = ("text", "json", "yaml")


@dataclass(frozen=True)
class Bounds:
    """Resource bounds shared by all constructions."""

    max_word_length: int = 16
    max_group_order: int = 10 ** 6
    max_coset_table: int = 10 ** 7
    max_nerve_vertices: int = 64
    max_wreath_order: int = 10 ** 6
    max_action_order: int = 1000

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) < 1:
                raise ValueError(f"Bound {f.name} must be positive, got {getattr(self, f.name)}")


@dataclass(frozen=True)
class RunConfig:
    command: str
    system_path: Optional[Path] = None
    catalog: Optional[str] = None
    n: int = 1
    n_max: int = 1
    witness: int = 0
    output_format: str = "text"
    out: Optional[Path] = None
    jobs: int = 1
    bounds: Bounds = field(default_factory=Bounds)

    def __post_init__(self):
        if self.n < 1 or self.n_max < 1:
            raise ValueError("Truncation level must be at least 1")
        if self.jobs < 1:
            raise ValueError("Number of jobs must be at least 1")
        if self.witness < 0:
            raise ValueError("Witness index must not be negative")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format: {self.output_format}")
        if (self.system_path is None) == (self.catalog is None):
            raise ValueError("Exactly one of a system file and a catalog entry is required")

    @property
    def source(self) -> str:
        return str(self.system_path) if self.system_path is not None else str(self.catalog)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        """
        Build run configuration from parsed command line arguments
        :param args: Supplied arguments
        :return: RunConfig object
        """
        bounds = Bounds(
            max_word_length=args.max_word_length,
            max_group_order=args.max_group_order,
            max_coset_table=args.max_coset_table,
            max_nerve_vertices=args.max_nerve_vertices,
            max_wreath_order=args.max_wreath_order,
            max_action_order=args.max_action_order,
        )
        return cls(
            command=args.command,
            system_path=Path(args.system) if args.system else None,
            catalog=args.catalog,
            n=getattr(args, "n", 1),
            n_max=getattr(args, "n_max", 1),
            witness=args.witness,
            output_format=args.format,
            out=Path(args.out) if args.out else None,
            jobs=args.jobs,
            bounds=bounds,
        )
