import numpy as np

from stretch_lab.exceptions import InvalidCylinder
from stretch_lab.numerics import ExtScalar, ext_pow, ext_sum


class BandSpec:
    """A maximal band of a foliated cylinder

    The band is described by the lengths of the horocyclic arcs it cuts in
    the cusps it runs into. An arc of length exactly 1 borders an unfoliated
    region and is unaffected by stretching.

    Parameters
    ----------
    arcs : list of floats
        cusp-arc lengths, each in (0, 1]
    """

    __slots__ = ("arcs",)

    def __init__(self, arcs):
        arcs = tuple(float(b) for b in arcs)
        if len(arcs) == 0:
            raise InvalidCylinder("empty band")
        for b in arcs:
            if not np.isfinite(b) or b <= 0:
                raise InvalidCylinder("arc length <= 0: %r" % b)
            if b > 1:
                raise InvalidCylinder("arc length > 1: %r" % b)
        self.arcs = arcs

    @property
    def unit_count(self):
        """Number of arcs bordering an unfoliated region"""
        return sum(1 for b in self.arcs if b == 1.0)

    def units_only(self):
        """The band keeping only its unit arcs, None if it has none"""
        n_units = self.unit_count
        if n_units == 0:
            return None
        return BandSpec([1.0] * n_units)

    def __len__(self):
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def __eq__(self, other):
        if not isinstance(other, BandSpec):
            return NotImplemented
        return self.arcs == other.arcs

    def __hash__(self):
        return hash(self.arcs)

    def __repr__(self):
        return "BandSpec(%r)" % (list(self.arcs),)


def thickness(band, t):
    """Thickness of a band after stretching for time t

    Each cusp arc b is raised to the power e^t, so the thickness decreases
    in t towards the unit-arc count of the band.

    Parameters
    ----------
    band : BandSpec
    t : float
        stretch time, any real
    """
    exponent = np.exp(t)
    if exponent == 0.0:
        # e^t underflows and every arc b^0 is 1
        return ExtScalar.from_real(len(band.arcs))
    return ext_sum([ext_pow(b, exponent) for b in band.arcs])
