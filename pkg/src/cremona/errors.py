"""Exception hierarchy shared across the toolkit."""


class CremonaError(Exception):
    """Base class for all domain errors raised by this package."""


class DegreeMismatch(CremonaError):
    """Two nonzero homogeneous polynomials of different degrees were combined."""


class DivisionByZeroPoly(CremonaError):
    """Division by the zero polynomial."""


class NotDivisible(CremonaError):
    """Exact polynomial division failed: the divisor is not a factor."""


class DegenerateMap(CremonaError):
    """A polynomial triple does not define a plane Cremona transformation."""


class DegenerateComposition(DegenerateMap):
    """The image of the inner map lies in the indeterminacy of the outer map."""


class IndeterminateAt(CremonaError):
    """A map was evaluated at one of its base points."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"map is indeterminate at {point}")


class IdentityMap(CremonaError):
    """The operation is undefined for the identity transformation."""


class CurveError(CremonaError):
    """Invalid plane-curve data."""


class MultiplicityError(CurveError):
    """A declared singular point fails its multiplicity verification."""


class NonOrdinarySingularity(CurveError):
    """A declared singular point has a non-squarefree tangent cone."""


class DimensionMismatch(CremonaError):
    """A linear-system dimension disagrees with the value forced by theory."""


class DegenerateElement(CremonaError):
    """A torus element with vanishing twisted norm (a1^2 - h*a2^2 = 0)."""


class MultipleRoots(CremonaError):
    """The base polynomial h has a repeated root."""


class NonPencil(CremonaError):
    """A configuration expected to cut out a pencil has the wrong dimension."""


class CalibrationError(CremonaError):
    """A constructed map failed its verification samples."""


class SingularMember(CremonaError):
    """A pencil member required to be smooth has a singular point."""


class PolyParseError(CremonaError):
    """Syntax or semantic error while parsing the text formats.

    ``span`` is a (start, end) byte-offset pair into the offending input.
    """

    def __init__(self, message, span):
        self.span = span
        super().__init__(message)

    def __str__(self):
        base = super().__str__()
        return f"{base} (at {self.span[0]}..{self.span[1]})"
