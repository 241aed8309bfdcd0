import numpy as np
import pytest

from stretch_lab.cylinder import CylinderSpec
from stretch_lab.cylinder.tests.dummy_cylinders import corpus
from stretch_lab.exceptions import DomainError, UnknownComponent
from stretch_lab.stretch import (
    RaySpec,
    TransverseCurveData,
    asymmetry_bound,
    asymptotic_ratio_bound,
    ratio_bound,
    transverse_ratio_bounds,
)


def single_ray(width, bands=([1], [1]), ray_id="ray"):
    return RaySpec([CylinderSpec(width, bands, core_id="a")], ray_id=ray_id)


def test_ratio_bound_same_ray():
    for cyl in corpus(seed=60, size=100):
        ray = RaySpec([cyl])
        for t in (-1.0, 0.0, 2.0, 5.0):
            assert ratio_bound(ray, ray, t) <= 0


def test_ratio_bound_examples():
    g = single_ray(1.0, ray_id="g")
    h = single_ray(2.0, ray_id="h")
    assert np.isclose(asymptotic_ratio_bound(g, h, 3.0), -np.exp(3) / 2)
    assert np.isclose(asymptotic_ratio_bound(h, g, 3.0), np.exp(3) / 2)
    assert np.isclose(asymptotic_ratio_bound(h, g, 3.0), 10.04, atol=1e-2)

    t = np.log(40.0)
    assert np.isclose(ratio_bound(h, g, t), asymptotic_ratio_bound(h, g, t), rtol=1e-9)
    assert np.isclose(ratio_bound(g, h, t), asymptotic_ratio_bound(g, h, t), rtol=1e-9)

    # delta(h, g) < 0 drives the bound to infinity
    bounds = [ratio_bound(h, g, t) for t in np.linspace(0, 6, 13)]
    assert np.all(np.diff(bounds) > 0)
    assert bounds[-1] > 100

    with pytest.raises(UnknownComponent):
        ratio_bound(g, RaySpec([CylinderSpec(1.0, [[1], [1]], core_id="b")]), 0.0)


def test_ratio_bound_prefactor():
    # K = 1 against K = 4, equal widths: only the prefactor separates them
    g = single_ray(1.0)
    h = single_ray(1.0, bands=([1, 1], [1, 1]))
    assert np.isclose(asymptotic_ratio_bound(g, h, 2.0), np.log(2.0))
    t = np.log(80.0)
    assert np.isclose(ratio_bound(g, h, t), np.log(2.0), atol=1e-9)


def test_ratio_bound_with_curves():
    g = single_ray(2.0, ray_id="g")
    h = single_ray(1.0, ray_id="h")
    curve = TransverseCurveData({"a": 1}, {"a": 2})
    silent = TransverseCurveData({"a": 0}, {"a": 5})
    for t in (0.0, 1.0, 3.0):
        plain = ratio_bound(g, h, t)
        with_curves = ratio_bound(g, h, t, curves=[curve, silent])
        assert with_curves == max(plain, transverse_ratio_bounds(curve, g, h, t)[0])
        assert with_curves >= plain
    # the crossing curve sees the widths shrink by a factor 2
    assert ratio_bound(g, h, 0.0, curves=[curve]) > np.log(0.5) - 1


def test_asymmetry_bound():
    ray = single_ray(1.0)
    c = 1.0
    t = np.log(40.0)
    forward, backward, asym = asymmetry_bound(ray, t, c)
    assert forward == c
    assert backward > 10
    assert np.isclose(asym, np.exp(t) * (np.e - 1) / 2, rtol=1e-12)
    assert abs(backward / asym - 1) < 5e-2

    assert np.isclose(asymmetry_bound(ray, 4.0, 1.0)[2], 46.91, atol=1e-2)

    backwards = [asymmetry_bound(ray, t, c)[1] for t in np.linspace(0, 5, 11)]
    assert np.all(np.diff(backwards) > 0)
    assert backwards[-1] > 10
    for t in (0.0, 3.0):
        assert asymmetry_bound(ray, t, 0.25)[0] == 0.25

    for c in (0.0, -1.0):
        with pytest.raises(DomainError):
            asymmetry_bound(ray, 0.0, c)
