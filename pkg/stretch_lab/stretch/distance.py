import numpy as np

from stretch_lab.cylinder import asymptote, bracket
from stretch_lab.exceptions import DomainError, UnknownComponent

from .divergence import delta
from .ray import shared_core_ids
from .transverse import transverse_ratio_bounds


def _shared(g, h):
    core_ids = shared_core_ids(g, h)
    if len(core_ids) == 0:
        raise UnknownComponent(
            "rays %r and %r share no component" % (g.ray_id, h.ray_id)
        )
    return core_ids


def ratio_bound(g, h, t, curves=None):
    """Lower bound on the Thurston distance d_T(g_t, h_t)

    d_T is the log of the supremum of l_h / l_g over all measured
    laminations. Restricting the supremum to the shared core curves, with
    the core lengths replaced by their brackets, gives

        max_j log(lower_h(lambda_j) / upper_g(lambda_j))

    Parameters
    ----------
    g, h : RaySpec
    t : float
        ray parameter
    curves : list of TransverseCurveData, optional (Default: None)
        further curves joining the supremum; curves crossing no core are
        skipped
    """
    bounds = []
    for j in _shared(g, h):
        b_h = bracket(h.cylinder(j), h.local_time(t))
        b_g = bracket(g.cylinder(j), g.local_time(t))
        bounds.append(b_h.log_lower - b_g.log_upper)
    for curve in curves or []:
        if curve.crosses():
            bounds.append(transverse_ratio_bounds(curve, g, h, t)[0])
    return max(bounds)


def asymptotic_ratio_bound(g, h, t):
    """Large t form of ratio_bound:
    max_j [log sqrt(K_j(h) / K_j(g)) - e^t delta_j(g, h)]"""
    bounds = []
    for j in _shared(g, h):
        K_h = asymptote(h.cylinder(j)).K
        K_g = asymptote(g.cylinder(j)).K
        bounds.append(0.5 * np.log(K_h / K_g) - np.exp(t) * delta(g, h, j))
    return max(bounds)


def asymmetry_bound(ray, t, c):
    """Distances between two points of a stretch ray, in both directions

    Going forward by c along a stretch line costs exactly c. Going back
    costs at least ratio_bound(ray shifted by c, ray, t), which grows like
    e^t w_j (e^c - 1) / 2.

    Parameters
    ----------
    ray : RaySpec
    t : float
        ray parameter
    c : float
        strictly positive shift

    Returns
    -------
    forward : float
        d_T(h_t, h_{t+c}) = c
    backward_lower : float
        lower bound on d_T(h_{t+c}, h_t)
    backward_asymptotic : float
        max_j e^t w_j (e^c - 1) / 2
    """
    if not c > 0:
        raise DomainError("shift c must be positive, got %r" % c)
    ahead = ray.shifted(c)
    backward_lower = ratio_bound(ahead, ray, t)
    backward_asymptotic = asymptotic_ratio_bound(ahead, ray, t)
    return float(c), backward_lower, backward_asymptotic
