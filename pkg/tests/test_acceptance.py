"""End-to-end acceptance checks.

Each test prints one PASS/FAIL line; run with `pytest -s tests/test_acceptance.py`
to see all of them.  Everything asserted here is exact integer equality.
"""

from fractions import Fraction

import pytest

from rmm import (
    Signature,
    TorsionStructure,
    WeierstrassModel,
    allowed_rmm,
    apply_isomorphism,
    c2c2_symbolic_check,
    compute_invariants,
    congruence_profile,
    distribution_from_lines,
    family_signature,
    lkc_reduce,
    minimize,
    reduction_cross_check,
    reduced_model,
    rmm_index,
    sweep_verify,
    validate_params,
)
from rmm.minimal import MOD24_KEYS, RMM_TRIPLES, derive_mod24_key
from rmm.classify import classify_tuple, parameter_tuples
from conftest import FIXTURE, random_minimal_signature

T = TorsionStructure


def report(name, ok):
    print(f"{'PASS' if ok else 'FAIL'}: {name}")
    assert ok, name


def test_criterion_1_large_curve_end_to_end():
    model = WeierstrassModel(0, 0, 0, -11346507, 16371897606)
    sig_min, u = minimize(compute_invariants(model)[3])
    ok = ((sig_min.c4, sig_min.c6, sig_min.delta)
          == (420241, -303183289, -10245657600000)
          and rmm_index(sig_min).index == 7
          and reduced_model(sig_min).a_invariants() == (1, 0, 0, -8755, 350177)
          and lkc_reduce(sig_min).a_invariants() == (1, 0, 0, -8755, 350177))
    report("criterion 1: reduction of the large conductor example", ok)


def test_criterion_2_c4_family_example():
    sig = family_signature(validate_params(T.C4, 2**12 * 3**2, 5 * 7 * 131))
    sig_min, _u = minimize(sig)
    ok = (sig_min.c4 == 4399653136
          and sig_min.c6 == -286462685864384
          and rmm_index(sig_min).index == 3
          and reduced_model(sig_min).a_invariants()
          == (0, -1, 0, -91659440, 331584587712))
    report("criterion 2: C4 family example", ok)


def test_criterion_3_c12_family_example():
    sig = family_signature(validate_params(T.C12, 6, 11))
    sig_min, _u = minimize(sig)
    ok = (sig_min.c4 == 44115712857085761
          and sig_min.c6 == -9246342494619021684087009
          and rmm_index(sig_min).index == 10
          and reduced_model(sig_min).a_invariants()
          == (1, -1, 1, -919077351189287, 10701785524467279561311))
    report("criterion 3: C12 family example", ok)


def test_criterion_4_table_consistency(rng):
    # the mod-24 keys must reduce from the finer congruence rows
    ok = True
    for i in range(1, 13):
        profile = congruence_profile(i)
        if derive_mod24_key(profile.c6_residue, profile.c6_modulus) != MOD24_KEYS[i]:
            ok = False
    # dual-path agreement on at least 10^4 random minimal signatures
    for _ in range(10_000):
        sig_min = random_minimal_signature(rng, size=200)
        idx = rmm_index(sig_min).index
        model = reduced_model(sig_min)
        if model != lkc_reduce(sig_min):
            ok = False
            break
        if (model.a1, model.a2, model.a3) != RMM_TRIPLES[idx]:
            ok = False
            break
        if not congruence_profile(idx).holds_for(sig_min.c4, sig_min.c6):
            ok = False
            break
    report("criterion 4: key tables agree and both match the reduction", ok)


SWEEP_BOUNDS = {t: 12 if t in (T.C2xC6, T.C2xC8) else 40
                for t in T if t is not T.C3_0}
WITNESS_REQUIRED = (T.C1, T.C2, T.C3, T.C4, T.C5, T.C6)


@pytest.mark.parametrize("torsion", sorted(SWEEP_BOUNDS, key=lambda t: t.value))
def test_criterion_5_family_sweeps(torsion):
    bound = SWEEP_BOUNDS[torsion]
    rep = sweep_verify(torsion, bound, threads=4)
    ok = rep.violations == []
    name = f"criterion 5: sweep {torsion.value} bound {bound} has no violations"
    if torsion in WITNESS_REQUIRED:
        ok = ok and rep.missing_allowed == set()
        name += " and witnesses every allowed class"
    report(name, ok)


def test_criterion_6_c2xc2_case_tables():
    report("criterion 6: C2xC2 case tables verify symbolically",
           c2c2_symbolic_check())


def test_criterion_7_reduction_cross_check(rng, fixture_lines):
    ok = True
    # fixture curves
    for line in fixture_lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        ainvs = line.split()[3][1:-1]
        model = WeierstrassModel(*(int(v) for v in ainvs.split(",")))
        sig_min, _ = minimize(compute_invariants(model)[3])
        ok = ok and reduction_cross_check(sig_min)
    # family curves
    for t in (T.C3, T.C5, T.C7, T.C2xC2, T.C2xC4):
        for tup in parameter_tuples(t, 6):
            result = classify_tuple(t, tup)
            if result is None:
                continue
            from rmm.classify import _tuple_signature
            sig_min, _ = minimize(_tuple_signature(t, tup))
            ok = ok and reduction_cross_check(sig_min)
    # random curves
    for _ in range(1_000):
        ok = ok and reduction_cross_check(random_minimal_signature(rng))
    report("criterion 7: reduction types consistent with the class tables", ok)


def test_criterion_8_uniqueness_under_isomorphism(rng):
    ok = True
    for _ in range(1_000):
        sig_min = random_minimal_signature(rng, size=200)
        original = reduced_model(sig_min)
        k = rng.choice((1, 2, 3, 6))
        r, s, t = (rng.randrange(-20, 21) for _ in range(3))
        moved = apply_isomorphism(original, Fraction(1, k), r, s, t)
        back_sig, u = minimize(compute_invariants(moved)[3])
        if u != k or reduced_model(back_sig) != original:
            ok = False
            break
    report("criterion 8: random isomorphisms undone exactly", ok)


def test_criterion_9_dataset_fixture():
    lines = FIXTURE.read_text().splitlines()
    rep, results = distribution_from_lines(lines)
    ok = (len(results) == 20
          and rep.skipped == []
          and rep.forbidden_cells_zero()
          and T.C10 in rep.rows
          and rep.percentages(T.C10)[7] == 100.0)
    report("criterion 9: fixture distribution matches the structural table", ok)
