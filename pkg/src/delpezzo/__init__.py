"""Exact-arithmetic toolkit for ACM line bundles on strong del Pezzo surfaces."""

from .errors import (
    DivisorParseError,
    InternalError,
    NotApplicable,
    NotFound,
    PreconditionViolated,
    SurfaceMismatch,
    UnsupportedSurface,
)
from .picard import (
    BLOWUP,
    QUADRIC,
    SURFACE_NAMES,
    DivisorClass,
    RuledCoords,
    SurfaceModel,
    arithmetic_genus,
    blow_up,
    canonical_class,
    degree,
    divisor,
    euler_characteristic,
    format_divisor,
    from_multiplicities,
    from_ruled,
    hyperplane,
    intersect,
    multiplicities,
    parse_divisor,
    quadric,
    self_intersection,
    surface_from_name,
    to_ruled,
    zero_class,
)

__all__ = [
    "BLOWUP",
    "QUADRIC",
    "SURFACE_NAMES",
    "DivisorClass",
    "DivisorParseError",
    "InternalError",
    "NotApplicable",
    "NotFound",
    "PreconditionViolated",
    "RuledCoords",
    "SurfaceMismatch",
    "SurfaceModel",
    "UnsupportedSurface",
    "arithmetic_genus",
    "blow_up",
    "canonical_class",
    "degree",
    "divisor",
    "euler_characteristic",
    "format_divisor",
    "from_multiplicities",
    "from_ruled",
    "hyperplane",
    "intersect",
    "multiplicities",
    "parse_divisor",
    "quadric",
    "self_intersection",
    "surface_from_name",
    "to_ruled",
    "zero_class",
]
