from .distance import asymmetry_bound, asymptotic_ratio_bound, ratio_bound
from .divergence import (
    PROPORTIONAL_RTOL,
    Classification,
    DivergenceReport,
    classify,
    delta,
    find_reparam,
)
from .ray import RaySpec, shared_core_ids
from .transverse import (
    LengthClass,
    StumpRelation,
    TransverseCurveData,
    asymptotic_class,
    transverse_bounds,
    transverse_ratio_bounds,
)
