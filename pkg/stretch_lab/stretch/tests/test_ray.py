import numpy as np
import pytest

from stretch_lab.cylinder import CylinderSpec
from stretch_lab.exceptions import InvariantError, UnknownComponent
from stretch_lab.stretch import RaySpec, shared_core_ids


def test_ray_invariants():
    with pytest.raises(InvariantError, match="without cylinders"):
        RaySpec([])
    cyl = CylinderSpec(1.0, [[1], [1]], core_id="a")
    with pytest.raises(InvariantError, match="duplicate core_id"):
        RaySpec([cyl, cyl])
    with pytest.raises(InvariantError):
        RaySpec([cyl], offset=np.inf)


def test_ray_accessors():
    a = CylinderSpec(1.0, [[1], [1]], core_id="a")
    b = CylinderSpec(2.5, [[1, 0.5], [1]], core_id="b")
    ray = RaySpec([a, b], offset=0.0, ray_id="g")
    assert ray.core_ids == ("a", "b")
    assert ray.cylinder("b") is b
    with pytest.raises(UnknownComponent, match="'c'"):
        ray.cylinder("c")
    with pytest.raises(LookupError):
        ray.effective_weight("c")

    assert ray.effective_weight("b") == 2.5
    shifted = ray.shifted(np.log(2.0))
    assert np.isclose(shifted.effective_weight("b"), 5.0, rtol=1e-15)
    assert shifted.local_time(1.0) == 1.0 + np.log(2.0)
    assert shifted.shifted(-np.log(2.0)) == ray
    assert ray.shifted(0.0) == ray

    other = RaySpec([CylinderSpec(1.0, [[1], [1]], core_id="b")])
    assert shared_core_ids(ray, other) == ["b"]
    assert shared_core_ids(other, ray) == ["b"]
