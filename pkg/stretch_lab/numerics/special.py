import numpy as np

from stretch_lab.exceptions import DomainError

from .ext_scalar import as_ext

# below this log magnitude the native formula gives way to the series
SERIES_LOGMAG = -30.0
# above this log magnitude 1 + y is indistinguishable from y
LARGE_LOGMAG = 300.0


def acosh1p(y):
    """Returns arccosh(1 + y) without cancellation near y = 0

    The height of a cylinder satisfies cosh(h) = 1 + y with y exponentially
    small along a stretch ray, so cosh(h) itself is never formed.

    Parameters
    ----------
    y : ExtScalar or float
        cosh(h) - 1, non-negative
    """
    y = as_ext(y)
    if y.sign < 0:
        raise DomainError("acosh1p needs y >= 0, got %r" % y)
    if y.sign == 0:
        return 0.0
    if y.logmag <= SERIES_LOGMAG:
        with np.errstate(under="ignore"):
            return float(np.exp(log_acosh1p(y)))
    if y.logmag >= LARGE_LOGMAG:
        return float(np.log(2.0) + y.logmag)
    yy = y.to_real()
    return float(np.log1p(yy + np.sqrt(yy * (yy + 2.0))))


def log_acosh1p(y):
    """Returns log(arccosh(1 + y)) for y > 0, valid long after h underflows

    Parameters
    ----------
    y : ExtScalar or float
        cosh(h) - 1, strictly positive
    """
    y = as_ext(y)
    if y.sign <= 0:
        raise DomainError("log_acosh1p needs y > 0, got %r" % y)
    if y.logmag <= SERIES_LOGMAG:
        # arccosh(1 + y) = sqrt(2y) (1 - y/12 + 3y^2/160 - ...)
        with np.errstate(under="ignore"):
            yy = float(np.exp(y.logmag))
        return float(0.5 * (np.log(2.0) + y.logmag) + np.log1p(-yy / 12.0))
    return float(np.log(acosh1p(y)))
