import numpy as np
import pytest

from stretch_lab.cylinder import CylinderSpec, min_leaf
from stretch_lab.cylinder.tests.dummy_cylinders import corpus
from stretch_lab.exceptions import DomainError, InvariantError, UnknownComponent
from stretch_lab.numerics import ext_sum, isclose
from stretch_lab.stretch import (
    LengthClass,
    RaySpec,
    StumpRelation,
    TransverseCurveData,
    asymptotic_class,
    transverse_bounds,
    transverse_ratio_bounds,
)


def unit_ray(width=2.0, ray_id="ray"):
    return RaySpec([CylinderSpec(width, [[1], [1]], core_id="a")], ray_id=ray_id)


def test_curve_data():
    curve = TransverseCurveData({"b": 2, "a": 0}, {"c": 1}, curve_id="x")
    assert curve.core_ids == ["a", "b", "c"]
    assert curve.crosses()
    assert not TransverseCurveData({"a": 0}, {"a": 3}).crosses()
    assert curve == TransverseCurveData({"a": 0, "b": 2}, {"c": 1}, curve_id="x")

    for bad in (-1, 0.5, True, float("inf"), "3"):
        with pytest.raises(InvariantError):
            TransverseCurveData({"a": bad})
        with pytest.raises(InvariantError):
            TransverseCurveData({"a": 1}, {"a": bad})


def test_transverse_examples():
    ray = unit_ray()
    lower, upper = transverse_bounds(TransverseCurveData({"a": 0}), ray, 0.0)
    assert lower.to_real() == 0.0 and upper.to_real() == 0.0

    lower, upper = transverse_bounds(TransverseCurveData({"a": 1}), ray, 0.0)
    assert np.isclose(lower.to_real(), 2.0)
    assert np.isclose(upper.to_real(), 2.0)

    lower, upper = transverse_bounds(
        TransverseCurveData({"a": 1}, {"a": 3}), ray, 0.0
    )
    assert np.isclose(lower.to_real(), 2.0)
    assert np.isclose(upper.to_real(), 2.0 + 3 * 2 * np.exp(-1))

    with pytest.raises(UnknownComponent):
        transverse_bounds(TransverseCurveData({"z": 1}), ray, 0.0)


def test_transverse_huge_counts():
    ray = unit_ray()
    curve = TransverseCurveData({"a": 10**400}, {"a": 10**500})
    lower, upper = transverse_bounds(curve, ray, 0.0)
    assert np.isclose(lower.logmag, 400 * np.log(10) + np.log(2.0), rtol=1e-14)
    # the turnings dominate: 10**500 * 2 e^{-1}
    expected = 500 * np.log(10) + np.log(2.0) - 1.0
    assert np.isclose(upper.logmag, expected, rtol=1e-14)

    log_lower, log_upper = transverse_ratio_bounds(curve, ray, unit_ray(4.0), 0.0)
    assert np.isfinite(log_lower) and np.isfinite(log_upper)


def test_transverse_bounds_random():
    rng = np.random.RandomState(70)
    cyls = corpus(seed=71, size=60)
    for ii in range(0, len(cyls), 3):
        ray = RaySpec(
            [
                CylinderSpec(cyl.width, cyl.bands, core_id="c%i" % jj)
                for jj, cyl in enumerate(cyls[ii : ii + 3])
            ],
            offset=rng.uniform(-0.5, 0.5),
        )
        crossings = {j: int(n) for j, n in zip(ray.core_ids, rng.randint(1, 4, 3))}
        turnings = {j: int(m) for j, m in zip(ray.core_ids, rng.randint(0, 4, 3))}
        curve = TransverseCurveData(crossings, turnings)

        for t in (0.0, 1.0, 2.0):
            lower, upper = transverse_bounds(curve, ray, t)
            assert lower <= upper
            turning = ext_sum(
                [
                    m * min_leaf(ray.cylinder(j), ray.local_time(t))[1]
                    for j, m in turnings.items()
                ]
            )
            assert isclose(upper, ext_sum([lower, turning]))

            # the crossing part grows exactly like e^t
            next_lower, _ = transverse_bounds(curve, ray, t + 1)
            assert abs(next_lower.logmag - lower.logmag - 1) < 1e-12

        # far along the ray the turnings are negligible
        t_far = np.log(80.0 / min(ray.effective_weight(j) for j in ray.core_ids))
        lower, upper = transverse_bounds(curve, ray, t_far)
        assert upper.logmag - lower.logmag <= 1e-12


def test_transverse_ratio_bounds():
    g = unit_ray(2.0, ray_id="g")
    h = unit_ray(1.0, ray_id="h")
    curve = TransverseCurveData({"a": 1}, {"a": 2})
    for t in (-1.0, 0.0, 2.0):
        log_lower, log_upper = transverse_ratio_bounds(curve, g, h, t)
        assert log_lower <= log_upper
        assert log_lower <= np.log(0.5) <= log_upper

    with pytest.raises(DomainError):
        transverse_ratio_bounds(TransverseCurveData({"a": 0}, {"a": 1}), g, h, 0.0)


def test_asymptotic_class():
    assert asymptotic_class(StumpRelation.SUBSET_OF_STUMP) == LengthClass.TO_ZERO
    assert asymptotic_class(StumpRelation.CROSSES_STUMP) == LengthClass.TO_INFINITY
    assert asymptotic_class("disjoint_from_stump") == LengthClass.BOUNDED
    with pytest.raises(ValueError):
        asymptotic_class("unrelated")
