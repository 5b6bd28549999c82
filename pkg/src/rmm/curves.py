"""Exact arithmetic on integral Weierstrass models: invariants, changes of
variables, reduction types, and the rational group law.

All quantities are exact (Python ints and fractions.Fraction); there is no
floating point in this module.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import (
    NonIntegralResult,
    NotASignature,
    PointNotOnCurve,
    SingularCurve,
    ZeroScale,
)


@dataclass(frozen=True)
class Signature:
    """The triple (c4, c6, Delta) of a Weierstrass model, with
    c4^3 - c6^2 = 1728 * Delta and Delta != 0."""

    c4: int
    c6: int
    delta: int

    def __post_init__(self):
        if self.c4**3 - self.c6**2 != 1728 * self.delta:
            raise NotASignature(f"c4^3 - c6^2 != 1728*delta for {self}")
        if self.delta == 0:
            raise NotASignature("delta = 0")


@dataclass(frozen=True)
class WeierstrassModel:
    """y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 with integer
    coefficients and nonzero discriminant."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        b2, b4, b6 = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        if c4**3 == c6**2:
            raise SingularCurve(f"discriminant is zero for {self.a_invariants()}")

    def a_invariants(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self):
        b2 = self.a1 * self.a1 + 4 * self.a2
        b4 = 2 * self.a4 + self.a1 * self.a3
        b6 = self.a3 * self.a3 + 4 * self.a6
        return b2, b4, b6

    def signature(self):
        return compute_invariants(self)[3]

    def rhs(self, x):
        return x**3 + self.a2 * x * x + self.a4 * x + self.a6

    def lhs(self, x, y):
        return y * y + self.a1 * x * y + self.a3 * y

    def contains(self, point):
        if point.is_infinity():
            return True
        return self.lhs(point.x, point.y) == self.rhs(point.x)


class ReductionType(Enum):
    GOOD = "good"
    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


def compute_invariants(model):
    """Return (b2, b4, b6, sig) for an integral model.

    c4 = b2^2 - 24*b4, c6 = -b2^3 + 36*b2*b4 - 216*b6, and
    Delta = (c4^3 - c6^2)/1728, which is a nonzero integer.
    """
    b2, b4, b6 = model.b_invariants()
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    num = c4**3 - c6**2
    # 1728 | c4^3 - c6^2 for every integral model
    delta = num // 1728
    return b2, b4, b6, Signature(c4, c6, delta)


def apply_isomorphism(model, u, r=0, s=0, t=0):
    """Change of variables x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.

    u, r, s, t may be rational, but the resulting coefficients must be
    integers (NonIntegralResult otherwise).  The new signature is
    (u^-4 c4, u^-6 c6, u^-12 Delta).
    """
    u, r, s, t = (Fraction(v) for v in (u, r, s, t))
    if u == 0:
        raise ZeroScale("u must be nonzero")
    a1, a2, a3, a4, a6 = model.a_invariants()
    na1 = (a1 + 2 * s) / u
    na2 = (a2 - s * a1 + 3 * r - s * s) / u**2
    na3 = (a3 + r * a1 + 2 * t) / u**3
    na4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4
    na6 = (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / u**6
    new = (na1, na2, na3, na4, na6)
    if any(v.denominator != 1 for v in new):
        raise NonIntegralResult(f"transform (u,r,s,t)=({u},{r},{s},{t}) gives {new}")
    return WeierstrassModel(*(int(v) for v in new))


def reduction_type(sig_min, p):
    """Reduction type at p of the curve with minimal signature sig_min.

    Good iff p does not divide Delta; multiplicative iff p | Delta and
    p does not divide c4; additive iff p | gcd(c4, Delta), where c4 = 0
    counts as divisible by every p.
    """
    if sig_min.delta % p != 0:
        return ReductionType.GOOD
    if sig_min.c4 % p != 0:
        return ReductionType.MULTIPLICATIVE
    return ReductionType.ADDITIVE


# --- rational points and the group law ---

@dataclass(frozen=True)
class RationalPoint:
    """Affine point (x, y) with exact rational coordinates, or the point at
    infinity (represented with x = y = None)."""

    x: Fraction = None
    y: Fraction = None

    def is_infinity(self):
        return self.x is None

    @staticmethod
    def affine(x, y):
        return RationalPoint(Fraction(x), Fraction(y))


INFINITY = RationalPoint()


def point_neg(model, point):
    if point.is_infinity():
        return INFINITY
    x, y = point.x, point.y
    return RationalPoint(x, -y - model.a1 * x - model.a3)


def point_add(model, P, Q):
    """Exact group law on a general Weierstrass model."""
    if P.is_infinity():
        return Q
    if Q.is_infinity():
        return P
    a1, a2, a3, a4, a6 = model.a_invariants()
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 + y2 + a1 * x1 + a3 == 0:
            return INFINITY
        # doubling (P == Q since x determines +/-y)
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-(x1**3) + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return RationalPoint(x3, y3)


def point_mul(model, n, point):
    if n < 0:
        return point_mul(model, -n, point_neg(model, point))
    acc = INFINITY
    for _ in range(n):
        acc = point_add(model, acc, point)
    return acc


def point_order(model, point, bound=16):
    """Smallest n <= bound with n*P = infinity, or None if P is not torsion
    of order <= bound.  The default bound 16 covers every group allowed by
    Mazur's theorem."""
    if not model.contains(point):
        raise PointNotOnCurve(f"{point} not on {model.a_invariants()}")
    acc = point
    for n in range(1, bound + 1):
        if acc.is_infinity():
            return n
        acc = point_add(model, acc, point)
    return None
