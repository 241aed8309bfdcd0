import logging

import numpy as np

from stretch_lab.exceptions import DomainError
from stretch_lab.numerics import ExtScalar, as_ext, ext_exp, ext_sum

from .band import thickness
from .cylinder import side_sums, width_at

logger = logging.getLogger(__name__)


def _check_depth(cyl, t, d):
    w_t = width_at(cyl, t).to_real()
    d = as_ext(d).to_real()
    if not 0 <= d <= w_t:
        raise DomainError("leaf depth d = %r outside [0, %r]" % (d, w_t))
    return w_t, d


def leaf_length(cyl, t, d):
    """Length of the closed horocyclic leaf at distance d from the left
    boundary

    h*(d) = a_p e^{-d} + a_i e^{-(w(t) - d)}

    Parameters
    ----------
    cyl : CylinderSpec
    t : float
        stretch time
    d : ExtScalar or float
        in [0, w(t)]
    """
    w_t, d = _check_depth(cyl, t, d)
    a_i, a_p = side_sums(cyl, t)
    return ext_sum([a_p * ext_exp(-d), a_i * ext_exp(-(w_t - d))])


def band_leaf_terms(cyl, t, d):
    """The contribution of each band to the leaf at depth d

    A band on the right boundary contributes a_k e^{-d}, one on the left
    a_k e^{-(w(t) - d)}; the order of the bands plays no role, so the sum of
    the terms is leaf_length(cyl, t, d).
    """
    w_t, d = _check_depth(cyl, t, d)
    terms = []
    for ii, band in enumerate(cyl.bands):
        depth = w_t - d if ii % 2 == 0 else d
        terms.append(thickness(band, t) * ext_exp(-depth))
    return terms


def min_leaf(cyl, t):
    """Shortest closed horocyclic leaf of the cylinder at time t

    The critical point of h*(d) is d = w(t)/2 + log(a_p / a_i)/2. When it
    falls outside [0, w(t)] the minimum sits at the nearest end of the
    cylinder.

    Parameters
    ----------
    cyl : CylinderSpec
    t : float
        stretch time

    Returns
    -------
    d_star : ExtScalar
        depth of the shortest leaf
    h_star : ExtScalar
        its length
    interior : bool
        False if the critical point was clamped to an end
    """
    w_t = width_at(cyl, t).to_real()
    a_i, a_p = side_sums(cyl, t)
    d_crit = w_t / 2.0 + 0.5 * (a_p.logmag - a_i.logmag)

    if 0 <= d_crit <= w_t:
        h_star = ExtScalar(
            1, np.log(2.0) + 0.5 * (a_p.logmag + a_i.logmag) - w_t / 2.0
        )
        return ExtScalar.from_real(d_crit), h_star, True

    d_star = min(max(d_crit, 0.0), w_t)
    logger.debug(
        "clamping minimal leaf of %s from d=%g to d=%g", cyl.core_id, d_crit, d_star
    )
    h_star = ext_sum([a_p * ext_exp(-d_star), a_i * ext_exp(-(w_t - d_star))])
    return ExtScalar.from_real(d_star), h_star, False
