import numpy as np
from scipy.special import logsumexp

from stretch_lab.exceptions import CancellationError, DivisionByZero, DomainError

# mixed-sign additions closer than this (in log magnitude) have no digits left
CANCELLATION_RTOL = 1e-12


class ExtScalar:
    """A signed real stored as its sign and the natural log of its magnitude

    Quantities such as e^{e^t w} overflow a double for modest t, while their
    logarithms stay small. Every exponentially large or small value in the
    package is carried as an ExtScalar and only converted to a native float
    when it is presented.

    Parameters
    ----------
    sign : int
        one of -1, 0, 1
    logmag : float
        natural log of the absolute value, -inf for zero

    Attributes
    ----------
    sign : int
        -1, 0 or 1; 0 if and only if logmag is -inf
    logmag : float
        natural log of the absolute value
    """

    __slots__ = ("sign", "logmag")

    def __init__(self, sign, logmag):
        sign = int(sign)
        logmag = float(logmag)
        if sign not in (-1, 0, 1):
            raise DomainError("sign must be -1, 0 or 1, got %r" % sign)
        if np.isnan(logmag) or logmag == np.inf:
            raise DomainError("log magnitude must be finite or -inf, got %r" % logmag)
        if sign == 0 or logmag == -np.inf:
            sign, logmag = 0, -np.inf
        self.sign = sign
        self.logmag = logmag

    @classmethod
    def from_real(cls, x):
        """Wraps a finite native real"""
        x = float(x)
        if not np.isfinite(x):
            raise DomainError("cannot wrap non-finite value %r" % x)
        if x == 0:
            return cls.zero()
        return cls(1 if x > 0 else -1, np.log(abs(x)))

    @classmethod
    def from_log(cls, logmag, sign=1):
        """Builds sign * e^logmag"""
        return cls(sign, logmag)

    @classmethod
    def zero(cls):
        return cls(0, -np.inf)

    @classmethod
    def one(cls):
        return cls(1, 0.0)

    def to_real(self):
        """Converts to a native float, saturating to 0 or +-inf out of range"""
        if self.sign == 0:
            return 0.0
        with np.errstate(over="ignore", under="ignore"):
            return self.sign * float(np.exp(self.logmag))

    def log(self):
        """Natural log of a positive value"""
        if self.sign <= 0:
            raise DomainError("log of non-positive value %r" % self)
        return self.logmag

    def _compare(self, other):
        other = as_ext(other)
        if self.sign != other.sign:
            return -1 if self.sign < other.sign else 1
        if self.sign == 0 or self.logmag == other.logmag:
            return 0
        bigger = 1 if self.logmag > other.logmag else -1
        return bigger * self.sign

    def __neg__(self):
        return ExtScalar(-self.sign, self.logmag)

    def __abs__(self):
        return ExtScalar(abs(self.sign), self.logmag)

    def __add__(self, other):
        return ext_add(self, as_ext(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ext_sub(self, as_ext(other))

    def __rsub__(self, other):
        return ext_sub(as_ext(other), self)

    def __mul__(self, other):
        return ext_mul(self, as_ext(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ext_div(self, as_ext(other))

    def __rtruediv__(self, other):
        return ext_div(as_ext(other), self)

    def __lt__(self, other):
        return self._compare(other) < 0

    def __le__(self, other):
        return self._compare(other) <= 0

    def __gt__(self, other):
        return self._compare(other) > 0

    def __ge__(self, other):
        return self._compare(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return self.sign == other.sign and self.logmag == other.logmag

    def __hash__(self):
        return hash((self.sign, self.logmag))

    def __float__(self):
        return self.to_real()

    def __repr__(self):
        return "ExtScalar(sign=%i, logmag=%r)" % (self.sign, self.logmag)


def as_ext(x):
    """Returns x unchanged if it is an ExtScalar, else wraps the native real"""
    if isinstance(x, ExtScalar):
        return x
    return ExtScalar.from_real(x)


def ext_add(x, y):
    """Adds two extended scalars

    Same-sign additions are a log-sum-exp and never lose accuracy. Mixed-sign
    additions raise CancellationError when the magnitudes agree to within
    CANCELLATION_RTOL in the log domain.

    Parameters
    ----------
    x : ExtScalar
    y : ExtScalar
    """
    if x.sign == 0:
        return y
    if y.sign == 0:
        return x
    if x.sign == y.sign:
        return ExtScalar(x.sign, np.logaddexp(x.logmag, y.logmag))

    big, small = (x, y) if x.logmag >= y.logmag else (y, x)
    gap = big.logmag - small.logmag
    if gap < CANCELLATION_RTOL:
        raise CancellationError(
            "subtracting magnitudes e^%r and e^%r" % (big.logmag, small.logmag)
        )
    # log(|big| - |small|) = log|big| + log(1 - e^-gap)
    return ExtScalar(big.sign, big.logmag + np.log(-np.expm1(-gap)))


def ext_sub(x, y):
    return ext_add(x, -y)


def ext_mul(x, y):
    if x.sign == 0 or y.sign == 0:
        return ExtScalar.zero()
    return ExtScalar(x.sign * y.sign, x.logmag + y.logmag)


def ext_div(x, y):
    if y.sign == 0:
        raise DivisionByZero("division of %r by zero" % x)
    if x.sign == 0:
        return ExtScalar.zero()
    return ExtScalar(x.sign * y.sign, x.logmag - y.logmag)


def ext_pow(base, exponent):
    """Raises a cusp-arc length to a positive power

    Horocyclic arcs in a cusp have length at most one, and stretching for time
    t raises them to the power e^t, so only bases in (0, 1] are accepted.

    Parameters
    ----------
    base : float
        in (0, 1]
    exponent : float
        strictly positive
    """
    base = float(base)
    exponent = float(exponent)
    if not 0 < base <= 1:
        raise DomainError("base must lie in (0, 1], got %r" % base)
    if not exponent > 0:
        raise DomainError("exponent must be positive, got %r" % exponent)
    return ExtScalar(1, exponent * np.log(base))


def ext_exp(x):
    """e^x for a native real x"""
    return ExtScalar(1, x)


def ext_sqrt(x):
    if x.sign < 0:
        raise DomainError("square root of negative value %r" % x)
    return ExtScalar(x.sign, 0.5 * x.logmag)


def ext_sum(values):
    """Sums extended scalars

    Positive and negative terms are accumulated separately with a log-sum-exp,
    so at most one subtraction happens.
    """
    pos = []
    neg = []
    for value in values:
        value = as_ext(value)
        if value.sign > 0:
            pos.append(value.logmag)
        elif value.sign < 0:
            neg.append(value.logmag)
    total = ExtScalar.zero()
    if pos:
        total = ExtScalar(1, logsumexp(pos))
    if neg:
        total = ext_add(total, ExtScalar(-1, logsumexp(neg)))
    return total


def isclose(x, y, rtol=1e-12):
    """True if x and y agree to rtol relative in the log domain

    The tolerance is scaled by max(1, |logmag|), which is the accuracy a
    double-precision log magnitude can carry.
    """
    x = as_ext(x)
    y = as_ext(y)
    if x.sign != y.sign:
        return False
    if x.sign == 0:
        return True
    scale = max(1.0, abs(x.logmag), abs(y.logmag))
    return abs(x.logmag - y.logmag) <= rtol * scale
