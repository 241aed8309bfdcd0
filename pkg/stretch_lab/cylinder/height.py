import numpy as np

from stretch_lab.halfplane import (
    BoundaryPoint,
    apply,
    compose,
    identity,
    parabolic_lower,
    parabolic_shift,
)
from stretch_lab.numerics import ExtScalar, acosh1p, as_ext, log_acosh1p

from .band import thickness
from .cylinder import rotate, truncate, width_at


def _generators(thicknesses, w_t):
    """P_1, ..., P_2N for the given band thicknesses

    Bands on the left boundary give z -> z + a_k, bands on the right give
    z -> z / (a_k e^{-w(t)} z + 1).
    """
    shrink = ExtScalar(1, -w_t)
    gens = []
    for ii, a_k in enumerate(thicknesses):
        if ii % 2 == 0:
            gens.append(parabolic_shift(a_k))
        else:
            gens.append(parabolic_lower(a_k * shrink))
    return gens


def _thicknesses(cyl, t, cut):
    return [thickness(band, t) for band in rotate(cyl, cut).bands]


def full_product(cyl, t, cut=0):
    """The product P_1 P_2 ... P_2N of the generators of the cut cylinder

    Parameters
    ----------
    cyl : CylinderSpec
    t : float
        stretch time
    cut : int, optional (Default: 0)
        band boundary used as the cut, see rotate
    """
    w_t = width_at(cyl, t).to_real()
    result = identity()
    for gen in _generators(_thicknesses(cyl, t, cut), w_t):
        result = compose(result, gen)
    return result


def boundary_points(cyl, t, cut=0):
    """The points x_1 < x_2 < ... < x_2N on the real axis

    x_{2j-1} is the image of 0 and x_{2j} the image of infinity under
    P_1 ... P_{2j-1} and P_1 ... P_{2j} respectively, so they are the
    convergents of the continued fraction [a_1, a_2 e^{-w}, a_3, ...].

    Parameters
    ----------
    cyl : CylinderSpec
    t : float
        stretch time
    cut : int, optional (Default: 0)
        band boundary used as the cut, see rotate
    """
    w_t = width_at(cyl, t).to_real()
    zero = BoundaryPoint.finite(0.0)
    infinity = BoundaryPoint.infinity()

    points = []
    prefix = identity()
    for ii, gen in enumerate(_generators(_thicknesses(cyl, t, cut), w_t)):
        prefix = compose(prefix, gen)
        points.append(apply(prefix, zero if ii % 2 == 0 else infinity))
    return points


def cosh_height_minus_one(cyl, t, cut=0):
    """cosh(h) - 1 for the height h of the cut cylinder

    With (a, b; c, d) = P_1 ... P_2N we have x_2N = a/c and x_{2N-1} = b/d,
    and ad - bc = 1 turns x_2N / x_{2N-1} - 1 into 1/(bc), so
    cosh(h) - 1 = 2bc needs no subtraction.
    """
    m = full_product(cyl, t, cut=cut)
    return 2.0 * m.b * m.c


def height(cyl, t, cut=0):
    """Height of the cylinder at time t along the given cut

    Parameters
    ----------
    cyl : CylinderSpec
    t : float
        stretch time
    cut : int, optional (Default: 0)
        band boundary used as the cut, see rotate
    """
    return acosh1p(cosh_height_minus_one(cyl, t, cut=cut))


def log_height(cyl, t, cut=0):
    """log of the height, meaningful after the height underflows"""
    return log_acosh1p(cosh_height_minus_one(cyl, t, cut=cut))


def _truncated(cyl, cut):
    return truncate(rotate(cyl, cut))


def truncated_height(cyl, t, cut=0):
    """Height h'(t) of the truncated cylinder, cut where cyl is cut

    The cylinder is rotated to the cut first, so cut=0 gives
    height(truncate(cyl), t).
    """
    return height(_truncated(cyl, cut), t)


def log_truncated_height(cyl, t, cut=0):
    return log_height(_truncated(cyl, cut), t)


def max_height(cyl, t):
    """Largest height over all 2N cuts, each of them a lower bound on the
    core length

    Returns
    -------
    h : float
    cut : int
        the first cut attaining it
    """
    log_heights = [log_height(cyl, t, cut=cut) for cut in range(cyl.n_bands)]
    best = int(np.argmax(log_heights))
    return height(cyl, t, cut=best), best


def cosh_height_ratio(x_odd, x_even):
    """cosh(h) = 1 + 2 / (x_2N / x_{2N-1} - 1), evaluated as written"""
    x_odd = _as_value(x_odd)
    x_even = _as_value(x_even)
    return 1.0 + 2.0 / (x_even / x_odd - 1.0)


def cosh_height_angle(x_odd, x_even):
    """cosh(h) = 1 / cos(theta) with
    cos(theta) = (x_2N - x_{2N-1}) / (x_2N + x_{2N-1})"""
    x_odd = _as_value(x_odd)
    x_even = _as_value(x_even)
    cos_theta = (x_even - x_odd) / (x_even + x_odd)
    return 1.0 / cos_theta


def _as_value(x):
    if isinstance(x, BoundaryPoint):
        return x.value
    return as_ext(x)
