"""Shared exception types.

Every error that signals a *mathematical* scope violation (as opposed to a
programming bug) gets its own class so callers can distinguish "the model
does not cover this" from "the data is missing" from "the data is wrong".
"""


class G3Error(Exception):
    """Base class for all package errors."""


# --- motive ring ---------------------------------------------------------

class UnsupportedProduct(G3Error):
    """Product of two non-Tate motives outside the supported S[12]*S[12] rule."""


class AdamsOutOfScope(G3Error):
    """Adams operation would leave the weight-<=22 generator basis."""


class UnsupportedPrimePower(G3Error):
    """Frobenius trace requested outside the q <= 25 table."""


class EmptyExpr(G3Error):
    """Weight of the zero expression is undefined."""


class UnknownLift(G3Error):
    pass


class OutOfModel(G3Error):
    """A construction would need a motive of weight > 22."""


# --- data ----------------------------------------------------------------

class MissingData(G3Error):
    """An ingested table lacks a required entry; carries the missing key."""

    def __init__(self, key, message=None):
        self.key = key
        super().__init__(message or "missing data: %r" % (key,))


class MonoidViolation(G3Error):
    """Ingested value fails a monoid-containment validation."""


class ValidationError(G3Error):
    """An ingested table fails a structural validation."""


# --- symmetric functions / characters ------------------------------------

class NonIntegralCoefficient(G3Error):
    """A value claimed integral has a non-integer coefficient."""


class NonTriangular(G3Error):
    """Basis elimination did not terminate; alphabet convention bug."""


class NegativeMultiplicity(G3Error):
    """Branching produced a negative multiplicity; convention bug."""


class NonIntegral(G3Error):
    """A character/trace evaluation failed to be an integer."""


# --- linear solving ------------------------------------------------------

class SingularSystem(G3Error):
    """Leading square block of a relation system is singular."""


class NonIntegralSolution(G3Error):
    """Exact solution of a relation system is not integral."""


class ResidualNonzero(G3Error):
    """An unused relation is violated; carries the offending row tag."""

    def __init__(self, tag, residual, message=None):
        self.tag = tag
        self.residual = residual
        super().__init__(
            message or "nonzero residual %s in relation %s" % (residual, tag))


class NonIntegralReconstruction(G3Error):
    """Weil reconstruction of a char poly gave non-integer coefficients."""


class UnsupportedCharacteristic(G3Error):
    """Hyperelliptic enumeration in characteristic 2 is out of scope."""
