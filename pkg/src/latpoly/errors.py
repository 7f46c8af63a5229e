"""Exception hierarchy shared by all latpoly modules."""


class LatPolyError(Exception):
    """Base class for all latpoly errors."""


class ValidationError(LatPolyError):
    """An input object violates a structural invariant."""


class NotFullDimensional(ValidationError):
    """The affine span of the given vertices is a proper subspace."""


class DimensionMismatch(LatPolyError):
    """Two objects that must share an ambient dimension do not."""


class InternalInconsistency(LatPolyError):
    """Two independent computations of the same quantity disagree.

    This always signals a bug in latpoly itself (or a violated theorem),
    never a user error.
    """


class MalformedSeries(LatPolyError):
    """A counting sequence does not start with 1."""


class RegularSequenceNotFound(LatPolyError):
    """No random degree-1 system sequence produced the expected quotient."""


class AllHeightsZero(LatPolyError):
    """A prism construction needs at least one positive height."""


class ParseError(LatPolyError):
    """A polytope file could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
