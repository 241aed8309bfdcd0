import mpmath
import numpy as np
import pytest

from stretch_lab.cylinder import (
    CylinderSpec,
    boundary_points,
    bracket,
    cosh_height_angle,
    cosh_height_minus_one,
    cosh_height_ratio,
    height,
    limit_side_sums,
    log_height,
    max_height,
    min_leaf,
    ordered,
    rotate,
)
from stretch_lab.cylinder.tests.dummy_cylinders import (
    corpus,
    mp_boundary_points,
    mp_cosh_height_minus_one,
)
from stretch_lab.numerics import isclose

SMALL_TIMES = (0.0, 0.5, 1.0)


@pytest.fixture(scope="module")
def cylinders():
    return corpus(seed=20, size=1000)


def test_boundary_points_examples():
    x1, x2 = boundary_points(CylinderSpec(np.log(2), [[1], [1]]), 0.0)
    assert np.isclose(x1.value.to_real(), 1.0, rtol=1e-15)
    assert np.isclose(x2.value.to_real(), 3.0, rtol=1e-14)

    points = boundary_points(CylinderSpec(1.0, [[1], [1], [1], [1]]), 0.0)
    e = np.exp(-1.0)
    nested = 1 + 1 / (e + 1 / (1 + 1 / e))
    assert np.isclose(points[-1].value.to_real(), nested, rtol=1e-13)


def test_height_examples():
    cyl = CylinderSpec(2.0, [[1], [1]])
    assert np.isclose(cosh_height_minus_one(cyl, 0.0).to_real(), 2 * np.exp(-2))
    h = height(cyl, 0.0)
    assert np.isclose(h, 0.720100, atol=1e-6)
    assert h <= min_leaf(cyl, 0.0)[1].to_real()
    assert np.isclose(min_leaf(cyl, 0.0)[1].to_real(), 0.735759, atol=1e-6)

    cyl = CylinderSpec(40.0, [[1], [1]])
    h = height(cyl, 0.0)
    assert np.isclose(h, 2 * np.exp(-20), rtol=1e-8)
    assert np.isclose(log_height(cyl, 0.0), np.log(2.0) - 20, rtol=1e-15)


def test_height_relabelling_symmetry():
    for w in (0.2, 1.0, 3.0):
        for t in (-1.0, 0.0, 1.0):
            h1 = height(CylinderSpec(w, [[0.5, 1], [1, 1]]), t)
            h2 = height(CylinderSpec(w, [[1, 1], [0.5, 1]]), t)
            assert np.isclose(h1, h2, rtol=1e-13)


def test_log_height_past_underflow():
    cyl = CylinderSpec(1.0, [[1], [1]])
    t = np.log(2000.0)
    assert height(cyl, t) == 0.0
    assert np.isclose(log_height(cyl, t), np.log(2.0) - 1000.0, rtol=1e-12)


def test_two_formula_oracle(cylinders):
    mpmath.mp.dps = 60
    for cyl in cylinders:
        for t in SMALL_TIMES:
            y = cosh_height_minus_one(cyl, t)
            oracle = mp_cosh_height_minus_one(cyl, t)
            assert abs(y.logmag - float(mpmath.log(oracle))) < 1e-10


def test_moebius_oracle(cylinders):
    mpmath.mp.dps = 60
    for cyl in cylinders:
        for t in SMALL_TIMES:
            points = boundary_points(cyl, t)
            oracle = mp_boundary_points(cyl, t)
            assert len(points) == cyl.n_bands
            for p, x in zip(points, oracle):
                log_x = float(mpmath.log(x))
                assert abs(p.value.logmag - log_x) < 1e-10 * max(1.0, abs(log_x))


def test_boundary_points_nested(cylinders):
    for cyl in cylinders:
        for t in SMALL_TIMES:
            values = [p.value for p in boundary_points(cyl, t)]
            odd = values[0::2]
            even = values[1::2]
            for x, y in zip(odd[:-1], odd[1:]):
                assert x < y
            for x, y in zip(even[:-1], even[1:]):
                assert x > y
            assert odd[-1] < even[-1]


def test_height_routes_agree(cylinders):
    for cyl in cylinders[:300]:
        for t in SMALL_TIMES:
            points = boundary_points(cyl, t)
            ratio = cosh_height_ratio(points[-2], points[-1])
            angle = cosh_height_angle(points[-2], points[-1])
            assert isclose(ratio, angle, rtol=1e-12)
            # x_2N / x_{2N-1} - 1 = 1 / (bc) loses digits as bc grows
            assert isclose(ratio - 1.0, cosh_height_minus_one(cyl, t), rtol=1e-8)


def test_boundary_point_limits():
    for cyl in corpus(seed=21, size=300, max_arc=0.9, width_range=(0.1, 0.4)):
        n_i, n_p = limit_side_sums(cyl)
        for e_w in (40.0, 80.0):
            t = np.log(e_w / cyl.width)
            points = boundary_points(cyl, t)
            x_odd = points[-2].value
            x_even = points[-1].value
            assert np.isclose(x_odd.to_real(), n_i, rtol=1e-3)
            assert np.isclose(np.exp(x_even.logmag - e_w), 1.0 / n_p, rtol=1e-3)


def test_cut_robustness(cylinders):
    for cyl in cylinders[:300]:
        for t in (-1.0, 0.0, 1.0, 2.0):
            log_upper = bracket(cyl, t).log_upper
            for cut in range(cyl.n_bands):
                assert ordered(log_height(cyl, t, cut=cut), log_upper)
                assert log_height(cyl, t, cut=cut) == log_height(rotate(cyl, cut), t)
            h_max, best = max_height(cyl, t)
            assert h_max >= height(cyl, t) * (1 - 1e-14)
            assert h_max == height(cyl, t, cut=best)
