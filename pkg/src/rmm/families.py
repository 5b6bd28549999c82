"""The fifteen parameterized torsion families E_T: parameter validation and
normalization, model construction, and family signatures.

Every family model has the shape y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x
(so a6 = 0), and (0, 0) is a point on every family curve.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Optional

from . import intmath
from .curves import WeierstrassModel, compute_invariants
from .errors import (
    DegenerateCurve,
    FamilyParameterError,
    GcdViolation,
    ParityViolation,
    SignViolation,
    SingularCurve,
    SquarefreeViolation,
)


class TorsionStructure(Enum):
    """Mazur's fifteen torsion groups, plus the marker C3_0 for the j = 0
    subfamily of curves with a 3-torsion point."""

    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C8 = "C8"
    C9 = "C9"
    C10 = "C10"
    C12 = "C12"
    C2xC2 = "C2xC2"
    C2xC4 = "C2xC4"
    C2xC6 = "C2xC6"
    C2xC8 = "C2xC8"
    C3_0 = "C3_0"

    @property
    def order(self):
        return _ORDERS[self]

    @property
    def two_rank(self):
        """Dimension of the 2-torsion of the group over F_2."""
        if self in (TorsionStructure.C2xC2, TorsionStructure.C2xC4,
                    TorsionStructure.C2xC6, TorsionStructure.C2xC8):
            return 2
        return 1 if self.order % 2 == 0 else 0

    @classmethod
    def parse(cls, text):
        t = text.strip().upper().replace("×", "X").replace("*", "X").replace("^", "_")
        if t in ("C3_0", "C30", "C3J0"):
            return cls.C3_0
        for member in cls:
            if member.value.upper() == t:
                return member
        raise ValueError(f"unknown torsion structure {text!r}")


_ORDERS = {
    TorsionStructure.C1: 1, TorsionStructure.C2: 2, TorsionStructure.C3: 3,
    TorsionStructure.C4: 4, TorsionStructure.C5: 5, TorsionStructure.C6: 6,
    TorsionStructure.C7: 7, TorsionStructure.C8: 8, TorsionStructure.C9: 9,
    TorsionStructure.C10: 10, TorsionStructure.C12: 12,
    TorsionStructure.C2xC2: 4, TorsionStructure.C2xC4: 8,
    TorsionStructure.C2xC6: 12, TorsionStructure.C2xC8: 16,
    TorsionStructure.C3_0: 3,
}

#: Families that take a third parameter d.
D_FAMILIES = (TorsionStructure.C2, TorsionStructure.C2xC2)

#: The single-parameter j = 0 family y^2 + a*y = x^3.
A_ONLY = (TorsionStructure.C3_0,)


@dataclass(frozen=True)
class FamilyParameters:
    """Validated parameters of one family curve.

    For C3 the normalization a = c^3 * d^2 * e (d, e positive squarefree and
    coprime) is carried in (c, d, e); for C4 it is a = c^2 * d with d
    squarefree.
    """

    torsion: TorsionStructure
    a: int
    b: Optional[int] = None
    d: Optional[int] = None
    c: Optional[int] = None
    e: Optional[int] = None


def validate_params(torsion, a, b=None, d=None):
    """Check and normalize (a, b, d) for the family E_T.

    Raises GcdViolation / SignViolation / ParityViolation /
    SquarefreeViolation when a constraint fails; degenerate tuples
    (discriminant zero) are rejected later, by build_model.
    """
    T = torsion
    if T == TorsionStructure.C1:
        raise FamilyParameterError("there is no parameterized family for trivial torsion")

    if T in A_ONLY:
        if a <= 0:
            raise SignViolation("a must be positive")
        if not intmath.is_cubefree(a):
            raise SquarefreeViolation(f"a = {a} is not cubefree")
        return FamilyParameters(T, a)

    if b is None:
        raise FamilyParameterError(f"family {T.value} needs parameters a and b")

    if T == TorsionStructure.C2:
        if d is None:
            raise FamilyParameterError("family C2 needs a parameter d")
        if d == 1:
            raise FamilyParameterError("d = 1 is excluded for the C2 family")
        if b == 0:
            raise DegenerateCurve("b = 0 gives a singular C2 model")
        if d <= 0:
            raise SignViolation("d must be positive")
        if not intmath.is_squarefree(d):
            raise SquarefreeViolation(f"d = {d} is not squarefree")
        g = gcd(a, b)
        if g == 0 or not intmath.is_squarefree(g):
            raise GcdViolation(f"gcd(a, b) = {g} must be positive and squarefree")
        return FamilyParameters(T, a, b, d)

    if T == TorsionStructure.C2xC2:
        if d is None:
            raise FamilyParameterError("family C2xC2 needs a parameter d")
        if gcd(a, b) != 1:
            raise GcdViolation(f"gcd({a}, {b}) != 1")
        if a % 2 != 0:
            raise ParityViolation("a must be even for C2xC2")
        if d <= 0:
            raise SignViolation("d must be positive")
        if not intmath.is_squarefree(d):
            raise SquarefreeViolation(f"d = {d} is not squarefree")
        return FamilyParameters(T, a, b, d)

    # all remaining families: coprime parameters with a positive
    if d is not None:
        raise FamilyParameterError(f"family {T.value} takes no parameter d")
    if gcd(a, b) != 1:
        raise GcdViolation(f"gcd({a}, {b}) != 1")
    if a <= 0:
        raise SignViolation("a must be positive")

    if T == TorsionStructure.C3:
        c, dd, e = _cube_square_split(a)
        return FamilyParameters(T, a, b, d=dd, c=c, e=e)
    if T == TorsionStructure.C4:
        c, dd = _square_split(a)
        return FamilyParameters(T, a, b, d=dd, c=c)
    return FamilyParameters(T, a, b)


def _cube_square_split(a):
    """a = c^3 * d^2 * e with d, e positive squarefree and coprime."""
    c = d = e = 1
    for p, k in intmath.factorize(a).items():
        c *= p ** (k // 3)
        r = k % 3
        if r == 1:
            e *= p
        elif r == 2:
            d *= p
    return c, d, e


def _square_split(a):
    """a = c^2 * d with d squarefree (positive, since a > 0)."""
    d, c = intmath.squarefree_part(intmath.factorize(a))
    return c, d


def _coeffs(T, a, b, d):
    if T == TorsionStructure.C2:
        return (0, 2 * a, 0, a * a - b * b * d)
    if T == TorsionStructure.C3_0:
        return (0, 0, a, 0)
    if T == TorsionStructure.C3:
        return (a, 0, a * a * b, 0)
    if T == TorsionStructure.C4:
        return (a, -a * b, -a * a * b, 0)
    if T == TorsionStructure.C5:
        return (a - b, -a * b, -a * a * b, 0)
    if T == TorsionStructure.C6:
        return (a - b, -a * b - b * b, -a * a * b - a * b * b, 0)
    if T == TorsionStructure.C7:
        return (a * a + a * b - b * b,
                a * a * b * b - a * b**3,
                a**4 * b * b - a**3 * b**3, 0)
    if T == TorsionStructure.C8:
        return (-a * a + 4 * a * b - 2 * b * b,
                -a * a * b * b + 3 * a * b**3 - 2 * b**4,
                -(a**3) * b**3 + 3 * a * a * b**4 - 2 * a * b**5, 0)
    if T == TorsionStructure.C9:
        a2 = a**4 * b * b - 2 * a**3 * b**3 + 2 * a * a * b**4 - a * b**5
        return (a**3 + a * b * b - b**3, a2, a**3 * a2, 0)
    if T == TorsionStructure.C10:
        a2 = -(a**3) * b**3 + 3 * a * a * b**4 - 2 * a * b**5
        return (a**3 - 2 * a * a * b - 2 * a * b * b + 2 * b**3,
                a2, (a**3 - 3 * a * a * b + a * b * b) * a2, 0)
    if T == TorsionStructure.C12:
        a2 = (b * (a - 2 * b) * (a - b) ** 2
              * (a * a - 3 * a * b + 3 * b * b)
              * (a * a - 2 * a * b + 2 * b * b))
        return (-(a**4) + 2 * a**3 * b + 2 * a * a * b * b - 8 * a * b**3 + 6 * b**4,
                a2, a * (b - a) ** 3 * a2, 0)
    if T == TorsionStructure.C2xC2:
        return (0, a * d + b * d, 0, a * b * d * d)
    if T == TorsionStructure.C2xC4:
        return (a, -a * b - 4 * b * b, -a * a * b - 4 * a * b * b, 0)
    if T == TorsionStructure.C2xC6:
        return (-19 * a * a + 2 * a * b + b * b,
                -10 * a**4 + 22 * a**3 * b - 14 * a * a * b * b + 2 * a * b**3,
                90 * a**6 - 198 * a**5 * b + 116 * a**4 * b * b
                + 4 * a**3 * b**3 - 14 * a * a * b**4 + 2 * a * b**5, 0)
    if T == TorsionStructure.C2xC8:
        a2 = -4 * a * b * b * (a + 2 * b) * (a + 4 * b) ** 2 * (a * a + 4 * a * b + 8 * b * b)
        return (-(a**4) - 8 * a**3 * b - 24 * a * a * b * b + 64 * b**4,
                a2, -2 * b * (a + 4 * b) * (a * a - 8 * b * b) * a2, 0)
    raise FamilyParameterError(f"no model for {T}")


def build_model(params, torsion=None):
    """Weierstrass model of E_T at the validated parameters.

    Raises DegenerateCurve when the tuple gives discriminant zero.
    """
    T = torsion if torsion is not None else params.torsion
    a1, a2, a3, a4 = _coeffs(T, params.a, params.b, params.d)
    try:
        return WeierstrassModel(a1, a2, a3, a4, 0)
    except SingularCurve as exc:
        raise DegenerateCurve(
            f"E_{T.value}(a={params.a}, b={params.b}, d={params.d}) is singular"
        ) from exc


def family_signature(params, torsion=None):
    """Signature of E_T at the validated parameters, computed from the model."""
    return compute_invariants(build_model(params, torsion))[3]


def c2xc2_c6_closed_form(a, b, d, u):
    """Closed form of the minimal c6 for the C2xC2 family on the two scale
    branches: -32 d^3 (2a-b)(a+b)(a-2b) when u = 1 and
    -d^3 (2a-b)(a+b)(a/2 - b) when u = 2."""
    if u == 1:
        return -32 * d**3 * (2 * a - b) * (a + b) * (a - 2 * b)
    if u == 2:
        if a % 2:
            raise ValueError("u = 2 requires a even")
        return -(d**3) * (2 * a - b) * (a + b) * (a // 2 - b)
    raise ValueError(f"u must be 1 or 2 for C2xC2, got {u}")
