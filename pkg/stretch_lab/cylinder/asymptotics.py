import numpy as np

from stretch_lab.exceptions import DomainError, EmptySelection, InvariantError
from stretch_lab.numerics import ExtScalar

from .cylinder import limit_side_sums

# relative tolerance on widths for membership in the set of thinnest cylinders
TIE_RTOL = 1e-12


class AsymptoticData:
    """Constants of the decay law l(t) ~ 2 sqrt(K) e^{-e^t w / 2}

    Parameters
    ----------
    K : int
        product of the unit-arc counts of the two boundaries
    w : float
        width of the cylinder at t = 0
    """

    __slots__ = ("K", "w")

    def __init__(self, K, w):
        if int(K) != K or K < 1:
            raise InvariantError("K must be a positive integer, got %r" % K)
        if not w > 0:
            raise InvariantError("width <= 0: %r" % w)
        self.K = int(K)
        self.w = float(w)

    def __eq__(self, other):
        if not isinstance(other, AsymptoticData):
            return NotImplemented
        return (self.K, self.w) == (other.K, other.w)

    def __hash__(self):
        return hash((self.K, self.w))

    def __repr__(self):
        return "AsymptoticData(K=%i, w=%r)" % (self.K, self.w)


def asymptote(cyl):
    n_i, n_p = limit_side_sums(cyl)
    return AsymptoticData(n_i * n_p, cyl.width)


def asymptotic_length(a, t):
    """2 sqrt(K) e^{-e^t w / 2} as an ExtScalar"""
    return ExtScalar(1, np.log(2.0) + 0.5 * np.log(a.K) - np.exp(t) * a.w / 2.0)


def multi_asymptote(items, J):
    """Decay law of the union of several core curves

    Only the thinnest cylinders contribute:
    l(union) ~ 2 (sum over thinnest j of sqrt(K_j)) e^{-e^t w_min / 2}

    Parameters
    ----------
    items : list of AsymptoticData
    J : iterable of int
        distinct indices into items, each in [0, len(items))

    Returns
    -------
    w_min : float
    prefactor : ExtScalar
    """
    J = list(J)
    if len(J) == 0:
        raise EmptySelection("no cylinder selected")
    for j in J:
        if isinstance(j, bool) or j not in range(len(items)):
            raise DomainError("index %r outside [0, %i)" % (j, len(items)))
    if len(set(J)) != len(J):
        raise DomainError("repeated index in %r" % (J,))
    selected = [items[j] for j in J]
    w_min = min(a.w for a in selected)
    thinnest = [a for a in selected if a.w - w_min <= TIE_RTOL * w_min]
    prefactor = ExtScalar.from_real(2.0 * sum(np.sqrt(a.K) for a in thinnest))
    return w_min, prefactor


def multi_asymptotic_length(items, J, t):
    w_min, prefactor = multi_asymptote(items, J)
    return prefactor * ExtScalar(1, -np.exp(t) * w_min / 2.0)
