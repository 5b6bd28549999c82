"""Allowed-class tables for each torsion structure, exhaustive parameter
sweeps, empirical residue classification, and the symbolic congruence check
for the C2xC2 family."""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from . import intmath
from .curves import ReductionType, WeierstrassModel, compute_invariants, reduction_type
from .errors import EmptyResidueClass, FamilyParameterError
from .families import (
    A_ONLY,
    D_FAMILIES,
    TorsionStructure,
    build_model,
    validate_params,
)
from .minimal import (
    KEY_TO_INDEX,
    allowed_indices_for_reduction,
    minimize,
    rmm_index,
)

#: Classes that can occur for curves whose torsion contains T.
_ALLOWED_RMM = {
    TorsionStructure.C1: frozenset(range(1, 13)),
    TorsionStructure.C2: frozenset({1, 3, 5, 7, 8, 9, 10, 11, 12}),
    TorsionStructure.C3: frozenset({1, 2, 5, 6, 7, 8, 9, 10}),
    TorsionStructure.C3_0: frozenset({1, 2, 5, 6, 7, 8, 9, 10}),
    TorsionStructure.C4: frozenset({1, 3, 5, 7, 8, 9, 10, 11, 12}),
    TorsionStructure.C5: frozenset({4, 6, 7, 12}),
    TorsionStructure.C6: frozenset({1, 5, 7, 8, 9, 10}),
    TorsionStructure.C7: frozenset({7, 10}),
    TorsionStructure.C8: frozenset({3, 5, 7, 12}),
    TorsionStructure.C9: frozenset({7, 10}),
    TorsionStructure.C10: frozenset({7}),
    TorsionStructure.C12: frozenset({7, 8, 9, 10}),
    TorsionStructure.C2xC2: frozenset({1, 3, 5, 7, 8, 9, 10, 11, 12}),
    TorsionStructure.C2xC4: frozenset({3, 5, 7, 12}),
    TorsionStructure.C2xC6: frozenset({7, 8, 9, 10}),
    TorsionStructure.C2xC8: frozenset({7}),
}


def allowed_rmm(torsion):
    """Set of class indices an elliptic curve with the given torsion
    structure can have."""
    return set(_ALLOWED_RMM[torsion])


def reduction_cross_check(sig_min):
    """Whether the class of sig_min is compatible with its reduction types at
    2 and 3, with the biconditional additive-at-2 <=> index in {1, 3, 5}."""
    idx = rmm_index(sig_min).index
    for p in (2, 3):
        rt = reduction_type(sig_min, p)
        if idx not in allowed_indices_for_reduction(p, rt):
            return False
    additive2 = reduction_type(sig_min, 2) is ReductionType.ADDITIVE
    return additive2 == (idx in {1, 3, 5})


@dataclass
class SweepReport:
    torsion: TorsionStructure
    bound: int
    counts: dict = field(default_factory=dict)        # index -> number of tuples
    witnesses: dict = field(default_factory=dict)     # index -> first parameter tuple
    violations: list = field(default_factory=list)    # (params, index) outside allowed_rmm
    degenerate: int = 0
    total: int = 0

    @property
    def observed(self):
        return set(self.counts)

    @property
    def missing_allowed(self):
        return allowed_rmm(self.torsion) - self.observed

    def merge(self, other):
        for i, n in other.counts.items():
            self.counts[i] = self.counts.get(i, 0) + n
        for i, w in other.witnesses.items():
            self.witnesses.setdefault(i, w)
        self.violations.extend(other.violations)
        self.degenerate += other.degenerate
        self.total += other.total
        return self


def parameter_tuples(torsion, bound):
    """All (a, b, d) tuples with |a|, |b|, |d| <= bound that satisfy the
    validity constraints of the family, in lexicographic order.

    For C1 there is no family; the sweep instead enumerates reduced-shaped
    integral models (a4, a6 ranging over [-bound, bound]) and yields their
    a-invariant 5-tuples.
    """
    T = torsion
    if T == TorsionStructure.C1:
        from .minimal import RMM_TRIPLES
        for (a1, a2, a3), a4, a6 in itertools.product(
                RMM_TRIPLES.values(), range(-bound, bound + 1), range(-bound, bound + 1)):
            yield (a1, a2, a3, a4, a6)
        return
    if T in A_ONLY:
        for a in range(1, bound + 1):
            if intmath.is_cubefree(a):
                yield (a, None, None)
        return
    if T == TorsionStructure.C2:
        sqfree = [d for d in range(2, bound + 1) if intmath.is_squarefree(d)]
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                if b == 0:
                    continue
                g = gcd(a, b)
                if not intmath.is_squarefree(g):
                    continue
                for d in sqfree:
                    yield (a, b, d)
        return
    if T == TorsionStructure.C2xC2:
        sqfree = [d for d in range(1, bound + 1) if intmath.is_squarefree(d)]
        for a in range(-bound, bound + 1, 1):
            if a % 2:
                continue
            for b in range(-bound, bound + 1):
                if gcd(a, b) != 1:
                    continue
                for d in sqfree:
                    yield (a, b, d)
        return
    for a in range(1, bound + 1):
        for b in range(-bound, bound + 1):
            if gcd(a, b) == 1:
                yield (a, b, None)


def classify_tuple(torsion, params_tuple):
    """Full pipeline for one parameter tuple: build, signature, minimize,
    class index.  Returns (index, u), or None when the tuple is degenerate."""
    sig = _tuple_signature(torsion, params_tuple)
    if sig is None:
        return None
    sig_min, u = minimize(sig)
    return rmm_index(sig_min).index, u


def _tuple_signature(torsion, params_tuple):
    if torsion == TorsionStructure.C1:
        try:
            model = WeierstrassModel(*params_tuple)
        except Exception:
            return None
        return compute_invariants(model)[3]
    a, b, d = params_tuple
    try:
        params = validate_params(torsion, a, b, d)
        model = build_model(params)
    except FamilyParameterError:
        return None
    return compute_invariants(model)[3]


def _sweep_chunk(torsion_value, bound, chunk):
    T = TorsionStructure(torsion_value)
    report = SweepReport(T, bound)
    allowed = allowed_rmm(T)
    for tup in chunk:
        result = classify_tuple(T, tup)
        if result is None:
            report.degenerate += 1
            continue
        idx, _u = result
        report.total += 1
        report.counts[idx] = report.counts.get(idx, 0) + 1
        report.witnesses.setdefault(idx, tup)
        if idx not in allowed:
            report.violations.append((tup, idx))
    return report


def sweep_verify(torsion, bound, threads=1):
    """Classify every valid parameter tuple with |a|, |b|, |d| <= bound and
    check the classes against allowed_rmm(torsion).

    The report's violations list is empty exactly when the sweep confirms
    the allowed-class table at this bound.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    tuples = list(parameter_tuples(torsion, bound))
    if threads <= 1 or len(tuples) < 4 * threads:
        return _sweep_chunk(torsion.value, bound, tuples)
    size = (len(tuples) + threads - 1) // threads
    chunks = [tuples[i:i + size] for i in range(0, len(tuples), size)]
    report = SweepReport(torsion, bound)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_sweep_chunk, [torsion.value] * len(chunks),
                             [bound] * len(chunks), chunks):
            report.merge(part)
    return report


# --- residue classification ---

INCONSISTENT = "inconsistent"


@dataclass
class ResidueClassification:
    torsion: TorsionStructure
    modulus: int
    samples_per_class: int
    #: (parameter residues, u) -> class index, or INCONSISTENT
    classes: dict = field(default_factory=dict)
    #: residue tuples with no valid lift under the sampling budget
    empty_classes: list = field(default_factory=list)

    @property
    def inconsistent_keys(self):
        return [k for k, v in self.classes.items() if v == INCONSISTENT]

    @property
    def observed_indices(self):
        return {v for v in self.classes.values() if v != INCONSISTENT}


def _residue_arity(torsion):
    if torsion == TorsionStructure.C1:
        raise FamilyParameterError("no parameterized family for trivial torsion")
    if torsion in A_ONLY:
        return 1
    if torsion in D_FAMILIES:
        return 3
    return 2


def classify_residue_class(torsion, residues, modulus, samples_per_class,
                           lift_range=8):
    """Sample integer lifts of one parameter-residue tuple and classify them.

    Returns a dict {(residues, u): index or INCONSISTENT} for the u branches
    observed.  Raises EmptyResidueClass when no valid lift exists among the
    first lift_range lifts of each parameter.
    """
    arity = _residue_arity(torsion)
    found = 0
    branches = {}
    for offsets in itertools.product(range(lift_range), repeat=arity):
        lift = tuple(r + modulus * k for r, k in zip(residues, offsets))
        tup = lift + (None,) * (3 - arity)
        result = classify_tuple(torsion, tup)
        if result is None:
            continue
        idx, u = result
        key = (residues, u)
        if key in branches and branches[key] not in (idx, INCONSISTENT):
            branches[key] = INCONSISTENT
        else:
            branches.setdefault(key, idx)
        found += 1
        if found >= samples_per_class:
            break
    if not found:
        raise EmptyResidueClass(f"no valid lift for residues {residues} mod {modulus}")
    return branches


def residue_classification(torsion, modulus, samples_per_class, lift_range=8):
    """Empirical class table over all parameter residues modulo 24 or 48.

    Residue classes with no valid lift are recorded in empty_classes; a class
    whose lifts disagree on the same u branch is marked INCONSISTENT.
    """
    if modulus not in (24, 48):
        raise ValueError("modulus must be 24 or 48")
    if samples_per_class < 1:
        raise ValueError("samples_per_class must be >= 1")
    arity = _residue_arity(torsion)
    table = ResidueClassification(torsion, modulus, samples_per_class)
    for residues in itertools.product(range(modulus), repeat=arity):
        try:
            branches = classify_residue_class(
                torsion, residues, modulus, samples_per_class, lift_range)
        except EmptyResidueClass:
            table.empty_classes.append(residues)
            continue
        table.classes.update(branches)
    return table


# --- the C2xC2 case tables ---

#: d(a+b) mod 3 -> c6/2 mod 24 on the u = 1 branch.
C2XC2_CASE1 = {0: 0, 2: 8, 1: 16}
#: d(a+b) mod 24 -> c6 mod 24 on the u = 2 branch.
C2XC2_CASE2 = {1: 23, 13: 11, 21: 3, 9: 15, 5: 19, 17: 7}


def c2c2_symbolic_check():
    """Verify the two C2xC2 case tables by exhausting residues.

    Case 1 (u = 1): c6/2 = 16 d^3 (a+b)^3 mod 24, determined by d(a+b) mod 3.
    Case 2 (u = 2, so a = 0 mod 16 and bd = 1 mod 4): c6 = -d^3 (a+b)^3
    mod 24, determined by d(a+b) mod 24.  Both tables must land on the
    mod-24 keys of the classes allowed_rmm permits for C2xC2.
    """
    # Case 1: all residues of (a, b, d) mod 24
    for a, b, d in itertools.product(range(24), repeat=3):
        half = (-16 * d**3 * (2 * a - b) * (a + b) * (a - 2 * b)) % 24
        cube = (16 * d**3 * (a + b) ** 3) % 24
        if half != cube:
            return False
        if cube != C2XC2_CASE1[(d * (a + b)) % 3]:
            return False
    # Case 2: a = 0 mod 16 (so a mod 48 in {0, 16, 32}), bd = 1 mod 4
    for a in (0, 16, 32):
        for b, d in itertools.product(range(24), repeat=2):
            if (b * d) % 4 != 1:
                continue
            c6 = (-(d**3) * (2 * a - b) * (a + b) * (a // 2 - b)) % 24
            cube = (-(d**3) * (a + b) ** 3) % 24
            if c6 != cube:
                return False
            if cube != C2XC2_CASE2[(d * (a + b)) % 24]:
                return False
    # the case tables must agree with the mod-24 classifier keys
    case1_classes = {KEY_TO_INDEX[v] for v in C2XC2_CASE1.values()}
    case2_classes = {KEY_TO_INDEX[v] for v in C2XC2_CASE2.values()}
    return (case1_classes | case2_classes) <= allowed_rmm(TorsionStructure.C2xC2)
