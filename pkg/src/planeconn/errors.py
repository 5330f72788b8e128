"""Exception hierarchy shared by all planeconn modules."""


class PlaneconnError(Exception):
    """Base class for all package errors."""


class DomainError(PlaneconnError):
    """Evaluation requested at a point where a Puiseux term is undefined."""


class ExactnessError(PlaneconnError):
    """Exact mode cannot represent the result as a rational number."""


class SignError(PlaneconnError):
    """A fractional power of a negative base was requested."""


class NotClosed(PlaneconnError):
    """A bracket left the span of the given fields."""

    def __init__(self, i, j, message=None):
        self.i = i
        self.j = j
        super().__init__(message or f"bracket of fields {i} and {j} leaves the span")


class InvalidParams(PlaneconnError):
    """Normal-form parameters violate a catalog invariant."""


class InvalidScale(PlaneconnError):
    """Scaling factor not admissible for the family."""


class FamilyMismatch(PlaneconnError):
    """Parameter classes belong to different families or have different n."""


class DegenerateCubic(PlaneconnError):
    """Marking cubic vanishes identically: every direction marks."""


class Inconsistent(PlaneconnError):
    """Two-marking solve contradicts the requested type constraints."""


class DegenerateDenominator(PlaneconnError):
    """Third-marking formulas have a vanishing denominator."""


class InvalidN(PlaneconnError):
    """Integer parameter n outside the admissible range or parity."""


class NotTransverse(PlaneconnError):
    """Conic invariant undefined: initial data lies on a line through the origin."""


class NotComplete(PlaneconnError):
    """Requested operation only defined for the geodesically complete case."""


class DegenerateCurve(PlaneconnError):
    """Curve has (numerically) vanishing velocity/acceleration determinant."""


class ParseError(PlaneconnError):
    """Malformed document."""


class Inapplicable(PlaneconnError):
    """Requested symmetry action does not apply to this family (basepoint not fixed)."""
