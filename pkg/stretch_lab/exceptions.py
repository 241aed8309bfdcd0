"""Exceptions raised by stretch_lab.

Every error derives from ``StretchLabError`` and from the closest builtin,
so ``except ValueError`` style handlers keep working.
"""


class StretchLabError(Exception):
    """Base class for all stretch_lab errors."""


class DomainError(StretchLabError, ValueError):
    """An argument lies outside the domain of the operation."""


class CancellationError(StretchLabError, ArithmeticError):
    """Subtraction of two nearly equal magnitudes in the log domain.

    The caller has to restructure the computation algebraically; the
    result would carry no significant digits.
    """


class DivisionByZero(StretchLabError, ZeroDivisionError):
    """Division of an extended scalar by zero."""


class IndeterminateError(StretchLabError, ArithmeticError):
    """A Moebius map evaluated to 0/0 at a boundary point."""


class InvariantError(StretchLabError, ValueError):
    """A domain object was built with data violating one of its invariants."""


class InvalidCylinder(InvariantError):
    """Cylinder data cannot describe a foliated cylinder."""


class EmptySelection(StretchLabError, ValueError):
    """An index selection that must be non-empty was empty."""


class UnknownComponent(StretchLabError, LookupError):
    """A core curve label is absent from a ray."""

    def __str__(self):
        # LookupError would otherwise repr() the message
        return str(self.args[0]) if self.args else ""


class ProportionalWeights(StretchLabError, ValueError):
    """Two weight vectors are proportional, so no divergence witness exists."""


class ParseError(StretchLabError, ValueError):
    """Malformed input document.

    Parameters
    ----------
    message : string
        what went wrong
    line : int, optional (Default: None)
        1-based line of the offending text, when known
    column : int, optional (Default: None)
        1-based column of the offending text, when known
    field : string, optional (Default: None)
        dotted path of the offending field, e.g. ``rays[0].cylinders[1].width``
    """

    def __init__(self, message, line=None, column=None, field=None):
        self.message = message
        self.line = line
        self.column = column
        self.field = field
        super().__init__(str(self))

    def __str__(self):
        where = []
        if self.line is not None:
            where.append("line %i" % self.line)
            if self.column is not None:
                where.append("column %i" % self.column)
        if self.field is not None:
            where.append("field %s" % self.field)
        if where:
            return "%s (%s)" % (self.message, ", ".join(where))
        return self.message


class IoError(StretchLabError, OSError):
    """Output could not be written."""
