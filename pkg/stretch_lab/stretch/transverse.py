import enum
import math

from stretch_lab.cylinder import min_leaf, width_at
from stretch_lab.exceptions import DomainError, InvariantError
from stretch_lab.numerics import ExtScalar, ext_sum


class StumpRelation(enum.Enum):
    """Position of a curve relative to the stump of the stretched lamination"""

    SUBSET_OF_STUMP = "subset_of_stump"
    CROSSES_STUMP = "crosses_stump"
    DISJOINT_FROM_STUMP = "disjoint_from_stump"


class LengthClass(enum.Enum):
    TO_ZERO = "to_zero"
    TO_INFINITY = "to_infinity"
    BOUNDED = "bounded"


_LENGTH_CLASSES = {
    StumpRelation.SUBSET_OF_STUMP: LengthClass.TO_ZERO,
    StumpRelation.CROSSES_STUMP: LengthClass.TO_INFINITY,
    StumpRelation.DISJOINT_FROM_STUMP: LengthClass.BOUNDED,
}


def asymptotic_class(rel):
    """Behaviour of the length of a curve as t -> infinity along the ray"""
    return _LENGTH_CLASSES[StumpRelation(rel)]


class TransverseCurveData:
    """Intersection counts of a simple closed curve alpha with the cylinders

    Parameters
    ----------
    crossings : dict
        core_id -> number of times alpha crosses the core lambda_j
    turnings : dict, optional (Default: None)
        core_id -> number of times alpha turns around inside the cylinder
    curve_id : string, optional (Default: "alpha")
    """

    __slots__ = ("crossings", "turnings", "curve_id")

    def __init__(self, crossings, turnings=None, curve_id="alpha"):
        self.crossings = self._check(crossings, "crossing")
        self.turnings = self._check(turnings or {}, "turning")
        self.curve_id = str(curve_id)

    @staticmethod
    def _check(counts, name):
        checked = {}
        for core_id, n in counts.items():
            try:
                valid = not isinstance(n, bool) and int(n) == n and n >= 0
            except (OverflowError, TypeError, ValueError):
                valid = False
            if not valid:
                raise InvariantError(
                    "%s count for %r must be a non-negative integer, got %r"
                    % (name, core_id, n)
                )
            checked[str(core_id)] = int(n)
        return checked

    @property
    def core_ids(self):
        return sorted(set(self.crossings) | set(self.turnings))

    def crosses(self):
        return any(n > 0 for n in self.crossings.values())

    def __eq__(self, other):
        if not isinstance(other, TransverseCurveData):
            return NotImplemented
        return (self.crossings, self.turnings, self.curve_id) == (
            other.crossings,
            other.turnings,
            other.curve_id,
        )

    def __repr__(self):
        return "TransverseCurveData(crossings=%r, turnings=%r, curve_id=%r)" % (
            self.crossings,
            self.turnings,
            self.curve_id,
        )


def _count(n):
    # counts are unbounded integers, past the range of a double
    return ExtScalar(1, math.log(n))


def transverse_bounds(curve, ray, t):
    """Bounds on the length of a transverse curve at parameter t

    sum_j n_j w_j(t) <= l(alpha) <= sum_j (n_j w_j(t) + m_j l(lambda_j)),
    with the core length l(lambda_j) replaced by the shortest closed leaf.

    Parameters
    ----------
    curve : TransverseCurveData
    ray : RaySpec
    t : float
        ray parameter

    Returns
    -------
    lower, upper : ExtScalar
    """
    crossing_terms = []
    turning_terms = []
    for core_id in curve.core_ids:
        cyl = ray.cylinder(core_id)
        local_t = ray.local_time(t)
        n = curve.crossings.get(core_id, 0)
        m = curve.turnings.get(core_id, 0)
        if n > 0:
            crossing_terms.append(_count(n) * width_at(cyl, local_t))
        if m > 0:
            turning_terms.append(_count(m) * min_leaf(cyl, local_t)[1])
    lower = ext_sum(crossing_terms)
    upper = ext_sum(crossing_terms + turning_terms)
    return lower, upper


def transverse_ratio_bounds(curve, g, h, t):
    """Two-sided control of log(l_h(alpha) / l_g(alpha)) at parameter t

    Returns
    -------
    log_lower : float
        log(lower_h / upper_g), also a lower bound on d_T(g_t, h_t)
    log_upper : float
        log(upper_h / lower_g)
    """
    if not curve.crosses():
        raise DomainError(
            "curve %r crosses no core, its length has no lower bound"
            % curve.curve_id
        )
    lower_g, upper_g = transverse_bounds(curve, g, t)
    lower_h, upper_h = transverse_bounds(curve, h, t)
    return lower_h.log() - upper_g.log(), upper_h.log() - lower_g.log()

