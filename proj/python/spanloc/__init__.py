"""Local geometric spanners and dilation checks."""

from ._spanloc import (
    DegenerateError,
    PreconditionError,
    __version__,
    build_spanner,
    decompose,
    delaunay,
    dilation,
    gen_lower_bound_disk,
    gen_lower_bound_triangle,
    gen_random,
    verify,
)

__all__ = [
    "DegenerateError",
    "PreconditionError",
    "__version__",
    "build_spanner",
    "decompose",
    "delaunay",
    "dilation",
    "gen_lower_bound_disk",
    "gen_lower_bound_triangle",
    "gen_random",
    "verify",
]
