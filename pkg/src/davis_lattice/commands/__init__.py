from davis_lattice.commands import (  # noqa: F401
    build,
    catalog_list,
    check,
    covolume,
    verify
)
