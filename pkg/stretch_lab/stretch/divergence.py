import enum
import logging

import numpy as np

from stretch_lab.cylinder import asymptote
from stretch_lab.exceptions import InvariantError, ProportionalWeights, UnknownComponent

from .ray import shared_core_ids

logger = logging.getLogger(__name__)

# weight vectors whose log ratios spread less than this are proportional
PROPORTIONAL_RTOL = 1e-12


class Classification(enum.Enum):
    SAME_DIRECTION = "same_direction"
    DIVERGENT_SAME_MULTICURVE = "divergent_same_multicurve"
    DIVERGENT_DIFFERENT_MULTICURVE = "divergent_different_multicurve"


class DivergenceReport:
    """How two stretch rays behave relative to each other

    Attributes
    ----------
    core_ids : tuple of strings
        the components shared by both rays
    deltas : tuple of floats
        delta_j(g, h) for each shared component
    prefactors : tuple of floats
        sqrt(K_j(h) / K_j(g)) for each shared component
    classification : Classification
    witness_u : float or None
        offset making h diverge from g in both directions, only for
        divergent rays along the same multicurve
    j0, j1 : string or None
        the components driving the two directions of divergence
    """

    def __init__(
        self,
        core_ids,
        deltas,
        prefactors,
        classification,
        witness_u=None,
        j0=None,
        j1=None,
    ):
        divergent_same = classification == Classification.DIVERGENT_SAME_MULTICURVE
        if divergent_same != (witness_u is not None):
            raise InvariantError(
                "a witness offset exists exactly for divergent rays along the "
                "same multicurve"
            )
        self.core_ids = tuple(core_ids)
        self.deltas = tuple(deltas)
        self.prefactors = tuple(prefactors)
        self.classification = Classification(classification)
        self.witness_u = witness_u
        self.j0 = j0
        self.j1 = j1

    def __repr__(self):
        return (
            "DivergenceReport(classification=%s, deltas=%r, witness_u=%r, j0=%r, "
            "j1=%r)"
            % (
                self.classification.value,
                self.deltas,
                self.witness_u,
                self.j0,
                self.j1,
            )
        )


def delta(g, h, j):
    """delta_j(g, h) = (w_j(h) - w_j(g)) / 2 with effective weights

    A negative delta_j forces d_T(g_t, h_t) to infinity.
    """
    return (h.effective_weight(j) - g.effective_weight(j)) / 2.0


def _log_ratios(g, h):
    if set(g.core_ids) != set(h.core_ids):
        missing = set(g.core_ids) ^ set(h.core_ids)
        raise UnknownComponent(
            "rays %r and %r differ on components %s"
            % (g.ray_id, h.ray_id, sorted(missing))
        )
    core_ids = list(g.core_ids)
    r = np.array(
        [np.log(g.effective_weight(j) / h.effective_weight(j)) for j in core_ids]
    )
    return core_ids, r


def find_reparam(g, h):
    """An offset u such that h shifted by u diverges from g in both directions

    With r_j = log(w_j(g) / w_j(h)) the admissible offsets are the open
    interval (min r_j, max r_j); the midpoint is returned.

    Parameters
    ----------
    g, h : RaySpec
        rays along the same multicurve with non-proportional weights

    Returns
    -------
    u : float
    j0 : string
        component with e^u w_j0(h) < w_j0(g)
    j1 : string
        component with e^u w_j1(h) > w_j1(g)
    """
    core_ids, r = _log_ratios(g, h)
    i0 = int(np.argmax(r))
    i1 = int(np.argmin(r))
    if r[i0] - r[i1] <= PROPORTIONAL_RTOL:
        raise ProportionalWeights(
            "weights of %r and %r are proportional" % (g.ray_id, h.ray_id)
        )
    u = float((r[i0] + r[i1]) / 2.0)
    logger.debug(
        "witness offset u=%g from components %s and %s", u, core_ids[i0], core_ids[i1]
    )
    return u, core_ids[i0], core_ids[i1]


def classify(g, h):
    """Parallel or divergent, and why

    Rays stretching along different multicurves always diverge, since every
    curve meeting one stump but not the other has a length ratio going to
    infinity. Along the same multicurve they are parallel exactly when the
    weights are proportional.

    Parameters
    ----------
    g, h : RaySpec
    """
    core_ids = shared_core_ids(g, h)
    deltas = [delta(g, h, j) for j in core_ids]
    prefactors = [
        np.sqrt(asymptote(h.cylinder(j)).K / asymptote(g.cylinder(j)).K)
        for j in core_ids
    ]

    if set(g.core_ids) != set(h.core_ids):
        return DivergenceReport(
            core_ids,
            deltas,
            prefactors,
            Classification.DIVERGENT_DIFFERENT_MULTICURVE,
        )
    try:
        u, j0, j1 = find_reparam(g, h)
    except ProportionalWeights:
        return DivergenceReport(
            core_ids, deltas, prefactors, Classification.SAME_DIRECTION
        )
    return DivergenceReport(
        core_ids,
        deltas,
        prefactors,
        Classification.DIVERGENT_SAME_MULTICURVE,
        witness_u=u,
        j0=j0,
        j1=j1,
    )
