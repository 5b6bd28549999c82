"""Exception types shared across the package."""


class RmmError(Exception):
    """Base class for all errors raised by this package."""


# --- curve construction and transforms ---

class SingularCurve(RmmError):
    """The Weierstrass coefficients have discriminant zero."""


class NonIntegralResult(RmmError):
    """A change of variables produced non-integer coefficients."""


class ZeroScale(RmmError):
    """The scale factor u of a change of variables must be nonzero."""


class PointNotOnCurve(RmmError):
    """A rational point does not satisfy the curve equation."""


# --- signatures and minimization ---

class NotASignature(RmmError):
    """(c4, c6) does not satisfy c4^3 - c6^2 = 1728*delta with delta a nonzero integer."""


class NotAdmissible(RmmError):
    """(c4, c6) fails Kraus's conditions, so no integral model realizes it."""


class NotMinimal(RmmError):
    """The signature is not minimal, so the requested reduction is undefined."""


class FactorizationTooHard(RmmError):
    """Prime support could not be determined within the configured effort."""


class UnsupportedPrime(RmmError):
    """The reduction table is only stated for p in {2, 3}."""


# --- torsion family parameters ---

class FamilyParameterError(RmmError):
    """Base class for parameter validation failures."""


class GcdViolation(FamilyParameterError):
    pass


class SignViolation(FamilyParameterError):
    pass


class ParityViolation(FamilyParameterError):
    pass


class SquarefreeViolation(FamilyParameterError):
    pass


class DegenerateCurve(FamilyParameterError):
    """The parameter tuple gives a model with discriminant zero."""


# --- classification and datasets ---

class EmptyResidueClass(RmmError):
    """No valid parameter lift was found for a residue class within the budget."""


class NotAMazurGroup(RmmError):
    """(order, 2-rank) does not match any of Mazur's fifteen groups."""


class MalformedLine(RmmError):
    """A database line does not match the expected allcurves format."""
