from .asymptotics import (
    TIE_RTOL,
    AsymptoticData,
    asymptote,
    asymptotic_length,
    multi_asymptote,
    multi_asymptotic_length,
)
from .band import BandSpec, thickness
from .bracket import BRACKET_RTOL, LengthBracket, bracket, ordered
from .cylinder import (
    CylinderSpec,
    limit_side_sums,
    rotate,
    side_sums,
    truncate,
    width_at,
)
from .height import (
    boundary_points,
    cosh_height_angle,
    cosh_height_minus_one,
    cosh_height_ratio,
    full_product,
    height,
    log_height,
    log_truncated_height,
    max_height,
    truncated_height,
)
from .leaf import band_leaf_terms, leaf_length, min_leaf
