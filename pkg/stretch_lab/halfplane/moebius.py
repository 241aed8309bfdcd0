import numpy as np

from stretch_lab.exceptions import DomainError, IndeterminateError
from stretch_lab.numerics import ExtScalar, as_ext, ext_sum


class BoundaryPoint:
    """A point of the boundary of the upper half-plane: finite real or infinity

    Use ``BoundaryPoint.finite(x)`` and ``BoundaryPoint.infinity()`` rather
    than calling the constructor.

    Parameters
    ----------
    value : ExtScalar or None
        the abscissa, None for the point at infinity
    """

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    @classmethod
    def finite(cls, x):
        """The point x >= 0 of the real axis"""
        value = as_ext(x)
        if value.sign < 0:
            raise DomainError("boundary points lie in [0, inf], got %r" % x)
        return cls(value)

    @classmethod
    def infinity(cls):
        return cls(None)

    @property
    def is_infinite(self):
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        if self.is_infinite:
            return "BoundaryPoint.infinity()"
        return "BoundaryPoint.finite(%r)" % (self.value,)


class MoebiusMap:
    """The Moebius map z -> (a z + b) / (c z + d) with entries in the log domain

    Products of the parabolic generators of a cylinder have entries that grow
    like e^{e^t w}; ExtScalar entries absorb that growth, so the matrices are
    never renormalised.

    Parameters
    ----------
    a, b, c, d : ExtScalar or float
        matrix entries, rows (a, b; c, d)
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = as_ext(a)
        self.b = as_ext(b)
        self.c = as_ext(c)
        self.d = as_ext(d)

    @property
    def entries(self):
        return self.a, self.b, self.c, self.d

    def det(self):
        """ad - bc; raises CancellationError once the entries are too large
        for the difference to carry any digits"""
        return self.a * self.d - self.b * self.c

    def to_array(self):
        """Native 2x2 numpy array, for entries within double range"""
        return np.array(
            [[self.a.to_real(), self.b.to_real()], [self.c.to_real(), self.d.to_real()]]
        )

    def __call__(self, p):
        return apply(self, p)

    def __matmul__(self, other):
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "MoebiusMap(a=%r, b=%r, c=%r, d=%r)" % self.entries


def identity():
    one, zero = ExtScalar.one(), ExtScalar.zero()
    return MoebiusMap(one, zero, zero, one)


def parabolic_shift(a):
    """The translation z -> z + a, a parabolic map fixing infinity

    Parameters
    ----------
    a : ExtScalar or float
        strictly positive translation length
    """
    a = as_ext(a)
    if a.sign <= 0:
        raise DomainError("parabolic shift needs a > 0, got %r" % a)
    return MoebiusMap(ExtScalar.one(), a, ExtScalar.zero(), ExtScalar.one())


def parabolic_lower(abar):
    """The map z -> 1 / (abar + 1/z) = z / (abar z + 1), a parabolic fixing 0

    Parameters
    ----------
    abar : ExtScalar or float
        strictly positive parameter
    """
    abar = as_ext(abar)
    if abar.sign <= 0:
        raise DomainError("lower parabolic needs abar > 0, got %r" % abar)
    return MoebiusMap(ExtScalar.one(), ExtScalar.zero(), abar, ExtScalar.one())


def compose(m1, m2):
    """Returns m1 o m2, i.e. the matrix product m1 m2 (m2 is applied first)"""
    return MoebiusMap(
        ext_sum([m1.a * m2.a, m1.b * m2.c]),
        ext_sum([m1.a * m2.b, m1.b * m2.d]),
        ext_sum([m1.c * m2.a, m1.d * m2.c]),
        ext_sum([m1.c * m2.b, m1.d * m2.d]),
    )


def product(maps):
    """Composes maps left to right: product([P1, P2, P3]) = P1 o P2 o P3"""
    result = identity()
    for m in maps:
        result = compose(result, m)
    return result


def apply(m, p):
    """Evaluates a Moebius map at a boundary point

    Parameters
    ----------
    m : MoebiusMap
    p : BoundaryPoint
    """
    if p.is_infinite:
        num, den = m.a, m.c
    else:
        num = ext_sum([m.a * p.value, m.b])
        den = ext_sum([m.c * p.value, m.d])
    if den.sign == 0:
        if num.sign == 0:
            raise IndeterminateError("0/0 evaluating %r at %r" % (m, p))
        return BoundaryPoint.infinity()
    return BoundaryPoint.finite(num / den)
