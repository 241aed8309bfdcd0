import logging

import numpy as np

from stretch_lab.exceptions import DomainError, InvalidCylinder
from stretch_lab.numerics import ExtScalar, ext_sum

from .band import BandSpec, thickness

logger = logging.getLogger(__name__)


class CylinderSpec:
    """The foliated cylinder around one component of a weighted multicurve

    The cylinder is cut open along a leaf of the stretched lamination and
    described by its cyclic sequence of maximal bands. Bands alternate
    between the two boundaries: positions 1, 3, 5, ... (indices 0, 2, 4, ...
    here) touch the left boundary, positions 2, 4, ... the right one.

    Parameters
    ----------
    width : float
        width of the cylinder at t = 0, the weight of its core curve
    bands : list of BandSpec or list of lists of floats
        the bands B_1, ..., B_2N in cyclic order, starting after the cut
    core_id : string, optional (Default: "core")
        label of the core curve
    """

    __slots__ = ("width", "bands", "core_id")

    def __init__(self, width, bands, core_id="core"):
        width = float(width)
        if not np.isfinite(width) or width <= 0:
            raise InvalidCylinder("width <= 0: %r" % width)
        bands = tuple(b if isinstance(b, BandSpec) else BandSpec(b) for b in bands)
        if len(bands) % 2 == 1:
            raise InvalidCylinder("band count odd: %i" % len(bands))
        if len(bands) < 2:
            raise InvalidCylinder("band count < 2")
        for side, name in ((bands[0::2], "left"), (bands[1::2], "right")):
            if sum(band.unit_count for band in side) == 0:
                raise InvalidCylinder("side without unit arc (%s)" % name)

        self.width = width
        self.bands = bands
        self.core_id = str(core_id)

    @property
    def n_bands(self):
        return len(self.bands)

    def __eq__(self, other):
        if not isinstance(other, CylinderSpec):
            return NotImplemented
        return (self.width, self.bands, self.core_id) == (
            other.width,
            other.bands,
            other.core_id,
        )

    def __hash__(self):
        return hash((self.width, self.bands, self.core_id))

    def __repr__(self):
        return "CylinderSpec(width=%r, bands=%r, core_id=%r)" % (
            self.width,
            [list(b.arcs) for b in self.bands],
            self.core_id,
        )


def width_at(cyl, t):
    """Width e^t w of the cylinder at time t"""
    return ExtScalar(1, t + np.log(cyl.width))


def side_sums(cyl, t):
    """Returns (a_i, a_p), the summed thicknesses of the left (odd position)
    and right (even position) bands at time t"""
    a_i = ext_sum([thickness(band, t) for band in cyl.bands[0::2]])
    a_p = ext_sum([thickness(band, t) for band in cyl.bands[1::2]])
    return a_i, a_p


def limit_side_sums(cyl):
    """Limits of the side sums as t -> infinity: the unit-arc counts"""
    n_i = sum(band.unit_count for band in cyl.bands[0::2])
    n_p = sum(band.unit_count for band in cyl.bands[1::2])
    return n_i, n_p


def rotate(cyl, cut):
    """Moves the cut to the boundary between band `cut` and band `cut` + 1

    cut = 0 is the boundary between B_2N and B_1. An odd cut exchanges the
    roles of the two boundaries, which mirrors the cylinder.

    Parameters
    ----------
    cyl : CylinderSpec
    cut : int
        in [0, 2N)
    """
    cut = int(cut)
    if not 0 <= cut < cyl.n_bands:
        raise DomainError("cut must lie in [0, %i), got %i" % (cyl.n_bands, cut))
    if cut == 0:
        return cyl
    logger.debug("rotating %s to cut %i", cyl.core_id, cut)
    return CylinderSpec(cyl.width, cyl.bands[cut:] + cyl.bands[:cut], cyl.core_id)


def truncate(cyl):
    """Keeps only the unit arcs of the cylinder

    Bands left without arcs are deleted and same-side neighbours are glued
    into one band. When the first and last surviving bands lie on the same
    side they are glued across the cut, the trailing arcs going first.

    Parameters
    ----------
    cyl : CylinderSpec
    """
    # (side, arcs) with side 0 for left, 1 for right
    survivors = []
    for ii, band in enumerate(cyl.bands):
        units = band.units_only()
        if units is None:
            continue
        side = ii % 2
        if survivors and survivors[-1][0] == side:
            survivors[-1][1].extend(units.arcs)
        else:
            survivors.append((side, list(units.arcs)))

    if len(survivors) > 1 and survivors[0][0] == survivors[-1][0]:
        side, arcs = survivors.pop()
        survivors[0] = (side, arcs + survivors[0][1])
    if len(survivors) < 2:
        raise InvalidCylinder("side without unit arc after truncation")
    if survivors[0][0] == 1:
        survivors.insert(0, survivors.pop())

    return CylinderSpec(cyl.width, [arcs for side, arcs in survivors], cyl.core_id)
