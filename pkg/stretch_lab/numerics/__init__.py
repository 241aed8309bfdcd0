from .ext_scalar import (
    CANCELLATION_RTOL,
    ExtScalar,
    as_ext,
    ext_add,
    ext_div,
    ext_exp,
    ext_mul,
    ext_pow,
    ext_sqrt,
    ext_sub,
    ext_sum,
    isclose,
)
from .special import acosh1p, log_acosh1p
