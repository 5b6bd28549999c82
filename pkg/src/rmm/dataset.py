"""Curve-database ingestion (Cremona allcurves format), torsion-structure
inference from order plus 2-torsion rank, and distribution reports over the
twelve reduced-minimal-model classes."""

import re
from dataclasses import dataclass, field
from math import isqrt

from .classify import allowed_rmm
from .curves import WeierstrassModel, compute_invariants
from .errors import MalformedLine, NotAMazurGroup, SingularCurve
from .families import TorsionStructure
from .minimal import minimize, reduced_model, rmm_index

_AINVS = re.compile(r"^\[(-?\d+),(-?\d+),(-?\d+),(-?\d+),(-?\d+)\]$")


@dataclass(frozen=True)
class CurveRecord:
    """One line of an allcurves file:
    `N class num [a1,a2,a3,a4,a6] rank torsion_order`."""

    conductor: int
    iso_class: str
    number: int
    model: WeierstrassModel
    rank: int
    torsion_order: int


def parse_allcurves(line):
    """Parse one allcurves line into a CurveRecord.

    Raises MalformedLine on bad syntax and SingularCurve when the
    a-invariants have discriminant zero.
    """
    fields = line.split()
    if len(fields) != 6:
        raise MalformedLine(f"expected 6 whitespace-separated fields, got {len(fields)}: {line!r}")
    conductor_s, iso_class, number_s, ainvs_s, rank_s, torsion_s = fields
    m = _AINVS.match(ainvs_s)
    if m is None:
        raise MalformedLine(f"bad a-invariants field {ainvs_s!r}")
    try:
        conductor = int(conductor_s)
        number = int(number_s)
        rank = int(rank_s)
        torsion_order = int(torsion_s)
    except ValueError as exc:
        raise MalformedLine(f"non-integer field in {line!r}") from exc
    if conductor <= 0 or number <= 0 or rank < 0:
        raise MalformedLine(f"out-of-range field in {line!r}")
    if torsion_order not in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16):
        raise MalformedLine(f"torsion order {torsion_order} is not a Mazur group order")
    model = WeierstrassModel(*(int(g) for g in m.groups()))
    return CurveRecord(conductor, iso_class, number, model, rank, torsion_order)


def serialize_record(record):
    """Inverse of parse_allcurves."""
    a = record.model.a_invariants()
    return (f"{record.conductor} {record.iso_class} {record.number} "
            f"[{a[0]},{a[1]},{a[2]},{a[3]},{a[4]}] {record.rank} {record.torsion_order}")


def two_torsion_rank(model):
    """Rank of E(Q)[2] over F_2: 0, 1, or 2.

    Counts integer roots of the monic cubic X^3 + b2 X^2 + 8 b4 X + 16 b6
    (X = 4x), found by exact integer bisection on monotone pieces; no
    factoring, no floating point.
    """
    b2, b4, b6 = model.b_invariants()
    roots = _integer_roots_monic_cubic(b2, 8 * b4, 16 * b6)
    return {0: 0, 1: 1, 3: 2}[len(roots)]


def _integer_roots_monic_cubic(c2, c1, c0):
    """Distinct integer roots of X^3 + c2 X^2 + c1 X + c0 (separable)."""
    def f(x):
        return ((x + c2) * x + c1) * x + c0

    bound = 1 + max(abs(c2), abs(c1), abs(c0))
    # critical points of f are the roots of 3X^2 + 2 c2 X + c1
    disc = 4 * (c2 * c2 - 3 * c1)
    if disc <= 0:
        pieces = [(-bound, bound)]
    else:
        # m1 <= t1 < t2 <= m2 for the critical points t1, t2
        m1 = _floor_shifted_sqrt(-2 * c2, disc, 6, negative_root=True)
        m2 = -_floor_shifted_sqrt(2 * c2, disc, 6, negative_root=True)
        pieces = [(-bound, m1), (m1 + 1, m2 - 1), (m2, bound)]
    roots = set()
    for lo, hi in pieces:
        lo, hi = max(lo, -bound), min(hi, bound)
        if lo > hi:
            continue
        increasing = f(lo) <= f(hi)
        r = _bisect_root(f, lo, hi, increasing)
        if r is not None:
            roots.add(r)
    return roots


def _floor_shifted_sqrt(a, d, b, negative_root=False):
    """floor((a - sqrt(d))/b) for b > 0, d >= 0, exactly."""
    assert negative_root
    s = isqrt(d)
    n = (a - s - 1) // b
    while True:
        t = a - (n + 1) * b
        if t >= 0 and t * t >= d:
            n += 1
        else:
            return n


def _bisect_root(f, lo, hi, increasing):
    sign = 1 if increasing else -1
    flo, fhi = sign * f(lo), sign * f(hi)
    if flo > 0 or fhi < 0:
        return None
    while lo < hi:
        mid = (lo + hi) // 2
        if sign * f(mid) < 0:
            lo = mid + 1
        else:
            hi = mid
    return lo if f(lo) == 0 else None


#: (order, 2-rank) -> torsion structure, for the pairs Mazur allows.
_MAZUR_PAIRS = {}
for _t in TorsionStructure:
    if _t != TorsionStructure.C3_0:
        _MAZUR_PAIRS[(_t.order, _t.two_rank)] = _t


def torsion_structure(order, rank2):
    """The unique Mazur group with the given order and 2-torsion rank."""
    try:
        return _MAZUR_PAIRS[(order, rank2)]
    except KeyError:
        raise NotAMazurGroup(f"(order={order}, 2-rank={rank2}) matches no Mazur group") from None


@dataclass
class CurveResult:
    record: CurveRecord
    torsion: TorsionStructure
    index: int
    u: int
    reduced: WeierstrassModel


@dataclass
class DistributionReport:
    """Per-torsion counts over the twelve classes."""

    rows: dict = field(default_factory=dict)      # TorsionStructure -> {index: count}
    totals: dict = field(default_factory=dict)    # TorsionStructure -> n_T
    skipped: list = field(default_factory=list)   # (line_number, line, reason)

    def add(self, torsion, index):
        self.rows.setdefault(torsion, {})[index] = self.rows.get(torsion, {}).get(index, 0) + 1
        self.totals[torsion] = self.totals.get(torsion, 0) + 1

    def percentages(self, torsion):
        n = self.totals[torsion]
        row = self.rows[torsion]
        return {i: 100.0 * row.get(i, 0) / n for i in range(1, 13)}

    def forbidden_cells_zero(self):
        """Every cell outside allowed_rmm(T) must be exactly zero."""
        for t, row in self.rows.items():
            if set(row) - allowed_rmm(t):
                return False
        return True


def classify_record(record):
    """minimize -> class index -> reduced model, plus inferred torsion."""
    sig = compute_invariants(record.model)[3]
    sig_min, u = minimize(sig)
    torsion = torsion_structure(record.torsion_order, two_torsion_rank(record.model))
    cls = rmm_index(sig_min)
    return CurveResult(record, torsion, cls.index, u, reduced_model(sig_min))


def distribution(records):
    """Distribution of classes per torsion structure over parsed records."""
    report = DistributionReport()
    for record in records:
        result = classify_record(record)
        report.add(result.torsion, result.index)
    return report


def distribution_from_lines(lines):
    """Like distribution, but parses raw lines with a skip-and-log policy."""
    report = DistributionReport()
    results = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            result = classify_record(parse_allcurves(line))
        except (MalformedLine, SingularCurve, NotAMazurGroup) as exc:
            report.skipped.append((lineno, line, f"{type(exc).__name__}: {exc}"))
            continue
        results.append(result)
        report.add(result.torsion, result.index)
    return report, results
