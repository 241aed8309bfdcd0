import logging

import numpy as np

from stretch_lab.exceptions import InvariantError
from stretch_lab.numerics import acosh1p, log_acosh1p

from .cylinder import rotate, truncate
from .height import cosh_height_minus_one
from .leaf import min_leaf

logger = logging.getLogger(__name__)

# relative slack, in the log domain, on orderings between independently
# rounded lengths
BRACKET_RTOL = 1e-12


def ordered(log_small, log_big, rtol=BRACKET_RTOL):
    """True if exp(log_small) <= exp(log_big) up to the relative slack"""
    return log_small <= log_big + rtol * max(1.0, abs(log_small), abs(log_big))


class LengthBracket:
    """Bounds h'(t) <= h(t) <= l(t) <= h*(t) on the length l(t) of the core
    geodesic of a cylinder

    The native values underflow to 0 once e^t w passes about 1400; the log
    fields stay accurate.

    Attributes
    ----------
    t : float
    lower : float
        height h(t)
    upper : float
        length of the shortest closed leaf h*(t)
    crosscheck_lower : float
        height h'(t) of the truncated cylinder
    log_lower, log_upper, log_crosscheck_lower : float
        natural logs of the above
    """

    __slots__ = (
        "t",
        "lower",
        "upper",
        "crosscheck_lower",
        "log_lower",
        "log_upper",
        "log_crosscheck_lower",
    )

    def __init__(
        self,
        t,
        lower,
        upper,
        crosscheck_lower,
        log_lower=None,
        log_upper=None,
        log_crosscheck_lower=None,
    ):
        self.t = float(t)
        self.lower = float(lower)
        self.upper = float(upper)
        self.crosscheck_lower = float(crosscheck_lower)
        with np.errstate(divide="ignore"):
            self.log_lower = float(np.log(lower) if log_lower is None else log_lower)
            self.log_upper = float(np.log(upper) if log_upper is None else log_upper)
            self.log_crosscheck_lower = float(
                np.log(crosscheck_lower)
                if log_crosscheck_lower is None
                else log_crosscheck_lower
            )

    def __repr__(self):
        return "LengthBracket(t=%r, crosscheck_lower=%r, lower=%r, upper=%r)" % (
            self.t,
            self.crosscheck_lower,
            self.lower,
            self.upper,
        )


def bracket(cyl, t, cut=0):
    """Rigorous bounds on the core length of a cylinder at time t

    Parameters
    ----------
    cyl : CylinderSpec
    t : float
        stretch time
    cut : int, optional (Default: 0)
        band boundary used for the height; the truncated cylinder is cut
        at the same boundary before truncation
    """
    y = cosh_height_minus_one(cyl, t, cut=cut)
    y_truncated = cosh_height_minus_one(truncate(rotate(cyl, cut)), t)
    _, h_star, _ = min_leaf(cyl, t)

    result = LengthBracket(
        t,
        lower=acosh1p(y),
        upper=h_star.to_real(),
        crosscheck_lower=acosh1p(y_truncated),
        log_lower=log_acosh1p(y),
        log_upper=h_star.log(),
        log_crosscheck_lower=log_acosh1p(y_truncated),
    )

    for name, small, big in (
        ("h' <= h", result.log_crosscheck_lower, result.log_lower),
        ("h <= h*", result.log_lower, result.log_upper),
    ):
        if not ordered(small, big):
            raise InvariantError(
                "%s violated for %s at t=%r: log values %r > %r"
                % (name, cyl.core_id, t, small, big)
            )
        if small > big:
            logger.warning(
                "%s holds for %s at t=%r only within rounding", name, cyl.core_id, t
            )
    return result
