"""Exact wall-and-chamber computations for moduli of sheaves on a
polarized K3 surface of Picard rank one.

The package works in the rank-three lattice of Mukai vectors (r, cH, s),
enumerates the destabilizing walls of Hilbert schemes of points and of
their rank-zero Beauville-Mukai partners, transports walls through the
derived autoequivalence Phi_m, and decomposes wall crossings into
semistable summands with their stratum dimensions.  All geometry is kept
in exact rational arithmetic.
"""

from .charge import (
    DEGENERATE,
    ComplexValue,
    GeometricCheckResult,
    Semicircle,
    StabilityPoint,
    VerticalLine,
    WallCurve,
    central_charge,
    geometric_check,
    path_intersection,
    phase,
    wall_discriminant,
    wall_locus,
)
from .crossing import (
    Decomposition,
    DimReport,
    SaturatedPlane,
    decompositions,
    ext_dim,
    moduli_dim,
    positive_classes,
    saturated_plane,
    stratum_dims,
    wall_base_point,
)
from .lattice import (
    DEFAULT_SURFACE,
    Autoequivalence,
    MukaiVector,
    SurfaceParams,
    dual_shift,
    line_bundle_vector,
    mukai_pairing,
    mukai_square,
    phi,
    phi_pullback,
    phi_pushforward,
    spherical_reflect,
    tensor_twist,
)
from .walls import (
    MovableCone,
    SearchBounds,
    WallRecord,
    WallSearch,
    beauville_mukai_partner,
    candidate_walls,
    default_bounds,
    gamma_of_wall,
    hilbert_n_of,
    hilbert_vector,
    hilbert_walls,
    movable_cone,
    resolve_walls,
    transport_walls,
)

__version__ = "0.1.0"

__all__ = [
    "Autoequivalence",
    "ComplexValue",
    "DEFAULT_SURFACE",
    "DEGENERATE",
    "Decomposition",
    "DimReport",
    "GeometricCheckResult",
    "MovableCone",
    "MukaiVector",
    "SaturatedPlane",
    "SearchBounds",
    "Semicircle",
    "StabilityPoint",
    "SurfaceParams",
    "VerticalLine",
    "WallCurve",
    "WallRecord",
    "WallSearch",
    "beauville_mukai_partner",
    "candidate_walls",
    "central_charge",
    "decompositions",
    "default_bounds",
    "dual_shift",
    "ext_dim",
    "gamma_of_wall",
    "geometric_check",
    "hilbert_n_of",
    "hilbert_vector",
    "hilbert_walls",
    "line_bundle_vector",
    "moduli_dim",
    "movable_cone",
    "mukai_pairing",
    "mukai_square",
    "path_intersection",
    "phase",
    "phi",
    "phi_pullback",
    "phi_pushforward",
    "positive_classes",
    "resolve_walls",
    "saturated_plane",
    "spherical_reflect",
    "stratum_dims",
    "tensor_twist",
    "transport_walls",
    "wall_base_point",
    "wall_discriminant",
    "wall_locus",
]
