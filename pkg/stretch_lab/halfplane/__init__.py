from .moebius import (
    BoundaryPoint,
    MoebiusMap,
    apply,
    compose,
    identity,
    parabolic_lower,
    parabolic_shift,
    product,
)
