"""Kraus admissibility, signature minimization, the Laska-Kraus-Connell
reduction, the closed-form reduced model, and the congruence classifiers
that read off the reduced-model class from c4 and c6."""

from dataclasses import dataclass
from math import gcd

from . import intmath
from .curves import ReductionType, Signature, WeierstrassModel, compute_invariants
from .errors import (
    NotAdmissible,
    NotASignature,
    NotMinimal,
    UnsupportedPrime,
)

#: The twelve possible (a1, a2, a3) triples of a reduced minimal model,
#: indexed 1..12.
RMM_TRIPLES = {
    1: (0, 0, 0),
    2: (0, 0, 1),
    3: (0, -1, 0),
    4: (0, -1, 1),
    5: (0, 1, 0),
    6: (0, 1, 1),
    7: (1, 0, 0),
    8: (1, 0, 1),
    9: (1, -1, 0),
    10: (1, -1, 1),
    11: (1, 1, 0),
    12: (1, 1, 1),
}

TRIPLE_TO_INDEX = {t: i for i, t in RMM_TRIPLES.items()}


@dataclass(frozen=True)
class RmmClass:
    """One of the twelve reduced-minimal-model classes R_1..R_12."""

    index: int

    def __post_init__(self):
        if self.index not in RMM_TRIPLES:
            raise ValueError(f"index must be 1..12, got {self.index}")

    @property
    def triple(self):
        return RMM_TRIPLES[self.index]

    def __str__(self):
        return f"R{self.index}"


#: Per-class congruences on (c4 mod 48) and (c6 mod m), m in {864, 288, 72}.
C4_RESIDUES = {1: 0, 2: 0, 3: 16, 4: 16, 5: 16, 6: 16,
               7: 1, 8: 25, 9: 9, 10: 33, 11: 25, 12: 1}
C6_RESIDUES = {
    1: (0, 864), 2: (648, 864),
    3: (64, 288), 4: (136, 288), 5: (224, 288), 6: (8, 288),
    7: (71, 72), 8: (35, 72), 9: (27, 72), 10: (63, 72), 11: (19, 72), 12: (55, 72),
}

#: A_i = pA*c4 + qA, B_i = pB*c4 + 2*c6 + qB; the reduced model has
#: a4 = -A_i/48 and a6 = -B_i/1728.
AB_FORMS = {
    1: ((1, 0), (0, 0)),
    2: ((1, 0), (0, 432)),
    3: ((1, -16), (-12, 64)),
    4: ((1, -16), (-12, 496)),
    5: ((1, -16), (12, -64)),
    6: ((1, -16), (12, 368)),
    7: ((1, -1), (3, -1)),
    8: ((1, 23), (3, 431)),
    9: ((1, -9), (-9, 27)),
    10: ((1, 15), (-9, 459)),
    11: ((1, -25), (15, -125)),
    12: ((1, -1), (15, 307)),
}

#: Residues of 2^(a1-1)*c6 mod 24 (c6/2 when c6 is even, c6 when odd),
#: keyed by class index.
MOD24_KEYS = {1: 0, 2: 12, 3: 8, 4: 20, 5: 16, 6: 4,
              7: 23, 8: 11, 9: 3, 10: 15, 11: 19, 12: 7}

KEY_TO_INDEX = {k: i for i, k in MOD24_KEYS.items()}


@dataclass(frozen=True)
class CongruenceProfile:
    """The congruence row of one class: c4 mod 48, c6 mod (864|288|72),
    the derived mod-24 key, and the affine forms of A_i and B_i."""

    index: int
    c4_residue: int
    c6_residue: int
    c6_modulus: int
    c6_mod24_key: int
    A_form: tuple  # (p, q): A = p*c4 + q
    B_form: tuple  # (p, q): B = p*c4 + 2*c6 + q

    def holds_for(self, c4, c6):
        return (c4 % 48 == self.c4_residue
                and c6 % self.c6_modulus == self.c6_residue)


def congruence_profile(i):
    """Table row for class index i (1..12)."""
    if isinstance(i, RmmClass):
        i = i.index
    if i not in RMM_TRIPLES:
        raise ValueError(f"index must be 1..12, got {i}")
    res, mod = C6_RESIDUES[i]
    return CongruenceProfile(
        index=i,
        c4_residue=C4_RESIDUES[i],
        c6_residue=res,
        c6_modulus=mod,
        c6_mod24_key=derive_mod24_key(res, mod),
        A_form=AB_FORMS[i][0],
        B_form=AB_FORMS[i][1],
    )


def derive_mod24_key(c6_residue, c6_modulus):
    """Reduce a c6 congruence (residue mod 864/288/72) to the mod-24 key
    2^(a1-1)*c6 mod 24.  Well defined because half the modulus (even cases)
    or the modulus itself (odd cases) is divisible by 24."""
    if c6_residue % 2 == 0:
        assert (c6_modulus // 2) % 24 == 0
        return (c6_residue // 2) % 24
    assert c6_modulus % 24 == 0
    return c6_residue % 24


def kraus_admissible(c4, c6):
    """Whether (c4, c6) is the invariant pair of some integral model.

    Conditions: v3(c6) != 2; and c6 = -1 mod 4, or v2(c4) >= 4 with
    c6 mod 32 in {0, 8}.  Raises NotASignature unless c4^3 - c6^2 is
    1728 times a nonzero integer.
    """
    diff = c4**3 - c6**2
    if diff == 0 or diff % 1728 != 0:
        raise NotASignature(f"({c4}, {c6}) is not a signature pair")
    return _admissible_at_3(c4, c6) and _admissible_at_2(c4, c6)


def _admissible_at_2(c4, c6):
    if c6 % 4 == 3:
        return True
    return intmath.valuation(c4, 2) >= 4 and c6 % 32 in (0, 8)


def _admissible_at_3(c4, c6):
    return intmath.valuation(c6, 3) != 2


def _scaling_primes(c4, c6, trial_bound, rho_rounds):
    """Primes p that could divide the scale factor u, i.e. with p^4 | c4 and
    p^6 | c6.  Only the k-th-power-full part of the relevant gcd needs
    factoring, so trial division up to its k-th root usually suffices."""
    if c4 != 0 and c6 != 0:
        n, k = gcd(abs(c4), abs(c6)), 4
    elif c4 == 0:
        n, k = abs(c6), 6
    else:
        n, k = abs(c4), 4
    bound = min(trial_bound, intmath.iroot(n, k))
    primes = []
    for p in (2, 3, 5):
        if p <= bound and n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
    d = 7
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d <= bound:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += steps[i]
        i = (i + 1) % 8
    if bound >= trial_bound and n > trial_bound**k:
        # a prime > trial_bound could still divide n to the k-th power
        primes.extend(p for p in intmath.factorize(n, trial_bound=1, rho_rounds=rho_rounds)
                      if p > bound)
    return primes


def _local_ok(c4, c6, p):
    """Kraus condition at p plus integrality of (c4^3 - c6^2)/1728 at p."""
    diff = c4**3 - c6**2
    if p == 2:
        return intmath.valuation(diff, 2) >= 6 and _admissible_at_2(c4, c6)
    return intmath.valuation(diff, 3) >= 3 and _admissible_at_3(c4, c6)


def minimize(sig, trial_bound=intmath.DEFAULT_TRIAL_BOUND,
             rho_rounds=intmath.DEFAULT_RHO_ROUNDS):
    """Minimal signature of a curve with signature sig.

    Returns (sig_min, u) where u is the largest positive integer with
    u^4 | c4 and u^6 | c6 such that (c4/u^4, c6/u^6) stays admissible,
    and sig_min = (c4/u^4, c6/u^6, Delta/u^12).
    """
    c4, c6 = sig.c4, sig.c6
    if not kraus_admissible(c4, c6):
        raise NotAdmissible(f"({c4}, {c6}) fails Kraus's conditions")
    u = 1
    for p in _scaling_primes(c4, c6, trial_bound, rho_rounds):
        e = _max_exponent(c4, c6, p)
        if p in (2, 3):
            while e > 0 and not _local_ok(c4 // p ** (4 * e), c6 // p ** (6 * e), p):
                e -= 1
        if e:
            c4 //= p ** (4 * e)
            c6 //= p ** (6 * e)
            u *= p**e
    sig_min = Signature(c4, c6, sig.delta // u**12)
    assert kraus_admissible(c4, c6)
    return sig_min, u


def _max_exponent(c4, c6, p):
    # c4 = 0 and c6 = 0 cannot happen together (delta would be 0)
    if c4 == 0:
        return intmath.valuation(c6, p) // 6
    if c6 == 0:
        return intmath.valuation(c4, p) // 4
    return min(intmath.valuation(c4, p) // 4, intmath.valuation(c6, p) // 6)


def lkc_reduce(sig_min):
    """Reduced minimal model from a minimal signature, following the
    Laska-Kraus-Connell recipe step by step.

    b2 = -c6 mod 12 taken in {-5,...,6}, b4 = (b2^2 - c4)/24,
    b6 = (-b2^3 + 36 b2 b4 - c6)/216, then a1 = b2 mod 2, a2 = (b2-a1)/4,
    a3 = b6 mod 2, a4 = (b4 - a1 a3)/2, a6 = (b6 - a3)/4.
    """
    c4, c6 = sig_min.c4, sig_min.c6
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    b4 = _exact_div(b2 * b2 - c4, 24)
    b6 = _exact_div(-(b2**3) + 36 * b2 * b4 - c6, 216)
    a1 = b2 % 2
    a2 = _exact_div(b2 - a1, 4)
    a3 = b6 % 2
    a4 = _exact_div(b4 - a1 * a3, 2)
    a6 = _exact_div(b6 - a3, 4)
    model = WeierstrassModel(a1, a2, a3, a4, a6)
    if compute_invariants(model)[3] != sig_min:
        raise NotMinimal(f"{sig_min} is not a minimal signature")
    return model


def _exact_div(n, d):
    q, r = divmod(n, d)
    if r:
        raise NotMinimal(f"{n} is not divisible by {d}; signature not minimal")
    return q


def rmm_index(sig_min):
    """Class of the reduced minimal model, read off the mod-24 key of c6
    (c6/2 mod 24 when c6 is even, c6 mod 24 when odd)."""
    c6 = sig_min.c6
    key = (c6 % 48) // 2 if c6 % 2 == 0 else c6 % 24
    try:
        return RmmClass(KEY_TO_INDEX[key])
    except KeyError:
        raise NotMinimal(f"c6 key {key} mod 24 matches no class; "
                         f"signature {sig_min} is not minimal") from None


def reduced_model(sig_min):
    """Reduced minimal model in closed form: a4 = -A_i/48, a6 = -B_i/1728
    with (A_i, B_i) the affine forms of the class of sig_min.  Independent
    of lkc_reduce, which it must agree with."""
    c4, c6 = sig_min.c4, sig_min.c6
    cls = rmm_index(sig_min)
    (pa, qa), (pb, qb) = AB_FORMS[cls.index]
    A = pa * c4 + qa
    B = pb * c4 + 2 * c6 + qb
    a1, a2, a3 = cls.triple
    a4 = _exact_div(-A, 48)
    a6 = _exact_div(-B, 1728)
    return WeierstrassModel(a1, a2, a3, a4, a6)


#: Classes compatible with each reduction type at 2 and at 3; additive
#: reduction at 2 is a biconditional with membership in {1, 3, 5}.
ALLOWED_BY_REDUCTION = {
    (2, ReductionType.GOOD): frozenset({2, 4, 6, 7, 8, 9, 10, 11, 12}),
    (2, ReductionType.MULTIPLICATIVE): frozenset({7, 8, 9, 10, 11, 12}),
    (2, ReductionType.ADDITIVE): frozenset({1, 3, 5}),
    (3, ReductionType.GOOD): frozenset(range(1, 13)),
    (3, ReductionType.MULTIPLICATIVE): frozenset({3, 4, 5, 6, 7, 8, 11, 12}),
    (3, ReductionType.ADDITIVE): frozenset({1, 2, 9, 10}),
}


def allowed_indices_for_reduction(p, rtype):
    if p not in (2, 3):
        raise UnsupportedPrime(f"reduction table only covers p in {{2, 3}}, got {p}")
    return set(ALLOWED_BY_REDUCTION[(p, rtype)])
