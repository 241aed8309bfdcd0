import numpy as np
import pytest

from stretch_lab.exceptions import DomainError, IndeterminateError
from stretch_lab.halfplane import (
    BoundaryPoint,
    MoebiusMap,
    apply,
    compose,
    identity,
    parabolic_lower,
    parabolic_shift,
    product,
)
from stretch_lab.numerics import ExtScalar, isclose

ZERO = BoundaryPoint.finite(0.0)
INF = BoundaryPoint.infinity()


def random_chain(rng, length):
    """Alternating shift, lower, shift, ... with random positive parameters"""
    params = rng.uniform(0.05, 2.0, size=length)
    return [
        parabolic_shift(p) if ii % 2 == 0 else parabolic_lower(p)
        for ii, p in enumerate(params)
    ]


def assert_points_close(p1, p2, rtol=1e-10):
    assert p1.is_infinite == p2.is_infinite
    if not p1.is_infinite:
        assert isclose(p1.value, p2.value, rtol=rtol)


def test_parabolic_shift():
    assert np.isclose(apply(parabolic_shift(1.0), ZERO).value.to_real(), 1.0)
    assert apply(parabolic_shift(1.0), INF).is_infinite
    x = apply(parabolic_shift(2.5), BoundaryPoint.finite(3.0))
    assert np.isclose(x.value.to_real(), 5.5)

    for a in (0.0, -1.0):
        with pytest.raises(DomainError):
            parabolic_shift(a)


def test_parabolic_lower():
    assert np.isclose(apply(parabolic_lower(1.0), INF).value.to_real(), 1.0)
    assert apply(parabolic_lower(1.0), ZERO) == ZERO
    x = apply(parabolic_lower(0.5), BoundaryPoint.finite(2.0))
    assert np.isclose(x.value.to_real(), 1.0)

    with pytest.raises(DomainError):
        parabolic_lower(-0.5)


def test_compose_examples():
    m = compose(parabolic_shift(1.0), parabolic_lower(1.0))
    assert np.allclose(m.to_array(), [[2, 1], [1, 1]])
    assert np.isclose(apply(m, ZERO).value.to_real(), 1.0)
    assert np.isclose(apply(m, INF).value.to_real(), 2.0)
    assert np.isclose(m.det().to_real(), 1.0)

    m_id = compose(m, identity())
    for e1, e2 in zip(m.entries, m_id.entries):
        assert isclose(e1, e2)
    assert product([]) == identity()


def test_apply_examples():
    x = BoundaryPoint.finite(0.37)
    assert_points_close(apply(identity(), x), x)
    assert BoundaryPoint.finite(ExtScalar.zero()) == ZERO
    for bad in (-0.37, ExtScalar(-1, 2.0)):
        with pytest.raises(DomainError):
            BoundaryPoint.finite(bad)

    huge = parabolic_shift(ExtScalar(1, 300.0))
    assert apply(huge, ZERO).value.logmag == 300.0

    # zero denominator
    assert apply(MoebiusMap(1.0, 1.0, 1.0, 0.0), ZERO).is_infinite
    with pytest.raises(IndeterminateError):
        apply(MoebiusMap(0.0, 0.0, 0.0, 0.0), ZERO)


def test_compose_matches_matrix_product():
    rng = np.random.RandomState(3)
    for ii in range(200):
        chain = random_chain(rng, rng.randint(1, 9))
        expected = np.eye(2)
        for m in chain:
            expected = np.dot(expected, m.to_array())
        assert np.allclose(product(chain).to_array(), expected, rtol=1e-12, atol=0)


def test_functoriality():
    rng = np.random.RandomState(4)
    for ii in range(1000):
        chain = random_chain(rng, rng.randint(2, 21))
        split = rng.randint(1, len(chain))
        m1 = product(chain[:split])
        m2 = product(chain[split:])
        m = compose(m1, m2)
        points = (ZERO, INF, BoundaryPoint.finite(rng.uniform(0, 10)))
        for p in points:
            assert_points_close(apply(m, p), apply(m1, apply(m2, p)))


def test_det_and_positivity():
    rng = np.random.RandomState(5)
    for ii in range(10 ** 4):
        m = product(random_chain(rng, rng.randint(2, 21)))
        for entry in m.entries:
            assert entry.sign >= 0

        ad = m.a * m.d
        bc = m.b * m.c
        # ad = 1 + bc, checked in the log domain where the entries are too
        # large for a native difference
        gap = ad.logmag - bc.logmag
        assert np.isclose(
            gap, np.log1p(np.exp(-bc.logmag)), rtol=0, atol=1e-10 * max(1, ad.logmag)
        )
        if ad.logmag < 20:
            assert abs(m.det().to_real() - 1.0) <= 1e-10 * max(1.0, ad.to_real())
