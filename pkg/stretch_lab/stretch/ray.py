import numpy as np

from stretch_lab.cylinder import CylinderSpec
from stretch_lab.exceptions import InvariantError, UnknownComponent


class RaySpec:
    """A cylindrical stretch ray

    The ray stretches along a weighted multicurve whose components are the
    cores of the given cylinders, the weights being the cylinder widths. It
    is evaluated at parameter t + offset, so changing the offset changes the
    base point of the ray without changing the ray.

    Parameters
    ----------
    cylinders : list of CylinderSpec
        one cylinder per component, with distinct core_id labels
    offset : float, optional (Default: 0.0)
        reparameterisation u
    ray_id : string, optional (Default: "ray")
        label used in reports
    """

    __slots__ = ("cylinders", "offset", "ray_id")

    def __init__(self, cylinders, offset=0.0, ray_id="ray"):
        cylinders = tuple(cylinders)
        if len(cylinders) == 0:
            raise InvariantError("ray without cylinders")
        for cyl in cylinders:
            if not isinstance(cyl, CylinderSpec):
                raise InvariantError("not a cylinder: %r" % (cyl,))
        core_ids = [cyl.core_id for cyl in cylinders]
        if len(set(core_ids)) != len(core_ids):
            raise InvariantError("duplicate core_id in %s" % core_ids)
        offset = float(offset)
        if not np.isfinite(offset):
            raise InvariantError("offset must be finite, got %r" % offset)

        self.cylinders = cylinders
        self.offset = offset
        self.ray_id = str(ray_id)

    @property
    def core_ids(self):
        return tuple(cyl.core_id for cyl in self.cylinders)

    def cylinder(self, core_id):
        for cyl in self.cylinders:
            if cyl.core_id == core_id:
                return cyl
        raise UnknownComponent(
            "core %r is not a component of ray %r" % (core_id, self.ray_id)
        )

    def local_time(self, t):
        """The cylinder time at which the ray is evaluated at parameter t"""
        return t + self.offset

    def effective_weight(self, core_id):
        """e^offset w_j, the weight seen at parameter 0"""
        return float(np.exp(self.offset) * self.cylinder(core_id).width)

    def shifted(self, u):
        """The same ray with its base point moved by u"""
        return RaySpec(self.cylinders, self.offset + u, self.ray_id)

    def __eq__(self, other):
        if not isinstance(other, RaySpec):
            return NotImplemented
        return (self.cylinders, self.offset, self.ray_id) == (
            other.cylinders,
            other.offset,
            other.ray_id,
        )

    def __hash__(self):
        return hash((self.cylinders, self.offset, self.ray_id))

    def __repr__(self):
        return "RaySpec(cylinders=%r, offset=%r, ray_id=%r)" % (
            list(self.cylinders),
            self.offset,
            self.ray_id,
        )


def shared_core_ids(g, h):
    """Core labels of g that are also components of h, in the order of g"""
    h_ids = set(h.core_ids)
    return [core_id for core_id in g.core_ids if core_id in h_ids]
