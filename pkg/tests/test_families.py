import pytest

from rmm import (
    RationalPoint,
    TorsionStructure,
    build_model,
    compute_invariants,
    family_signature,
    point_order,
    validate_params,
)
from rmm.errors import (
    DegenerateCurve,
    FamilyParameterError,
    GcdViolation,
    ParityViolation,
    SignViolation,
    SquarefreeViolation,
)
from rmm.families import c2xc2_c6_closed_form
from rmm.minimal import minimize

T = TorsionStructure
ORIGIN = RationalPoint.affine(0, 0)


def test_parse_variants():
    assert T.parse("C5") is T.C5
    assert T.parse("c2xc2") is T.C2xC2
    assert T.parse("C2×C4") is T.C2xC4
    assert T.parse("c2*c8") is T.C2xC8
    assert T.parse("C3_0") is T.C3_0
    assert T.parse("C30") is T.C3_0
    with pytest.raises(ValueError):
        T.parse("C11")


def test_orders_and_two_ranks():
    assert [t.order for t in (T.C1, T.C7, T.C12, T.C2xC2, T.C2xC8, T.C3_0)] == \
        [1, 7, 12, 4, 16, 3]
    assert T.C5.two_rank == 0
    assert T.C10.two_rank == 1
    assert T.C2xC6.two_rank == 2
    # fifteen distinct (order, 2-rank) pairs among Mazur's groups
    pairs = {(t.order, t.two_rank) for t in T if t is not T.C3_0}
    assert len(pairs) == 15


def test_validate_rejects_trivial_torsion():
    with pytest.raises(FamilyParameterError):
        validate_params(T.C1, 1, 1)


def test_validate_j_zero_family():
    params = validate_params(T.C3_0, 2)
    assert (params.a, params.b, params.d) == (2, None, None)
    with pytest.raises(SignViolation):
        validate_params(T.C3_0, -1)
    with pytest.raises(SquarefreeViolation):
        validate_params(T.C3_0, 8)  # not cubefree


def test_validate_c2():
    validate_params(T.C2, 3, 2, 5)
    with pytest.raises(FamilyParameterError):
        validate_params(T.C2, 3, 2)  # d missing
    with pytest.raises(FamilyParameterError):
        validate_params(T.C2, 3, 2, 1)  # d = 1 excluded
    with pytest.raises(DegenerateCurve):
        validate_params(T.C2, 3, 0, 5)
    with pytest.raises(SignViolation):
        validate_params(T.C2, 3, 2, -5)
    with pytest.raises(SquarefreeViolation):
        validate_params(T.C2, 3, 2, 4)
    with pytest.raises(GcdViolation):
        validate_params(T.C2, 4, 8, 5)  # gcd = 4 not squarefree
    validate_params(T.C2, 6, 2, 5)      # gcd = 2 squarefree is fine


def test_validate_c2xc2():
    validate_params(T.C2xC2, 4, 1, 3)
    with pytest.raises(GcdViolation):
        validate_params(T.C2xC2, 4, 2, 3)
    with pytest.raises(ParityViolation):
        validate_params(T.C2xC2, 3, 2, 3)
    with pytest.raises(SignViolation):
        validate_params(T.C2xC2, 4, 1, -3)
    with pytest.raises(SquarefreeViolation):
        validate_params(T.C2xC2, 4, 1, 12)


def test_validate_coprime_families():
    with pytest.raises(GcdViolation):
        validate_params(T.C5, 2, 4)
    with pytest.raises(SignViolation):
        validate_params(T.C7, -1, 2)
    with pytest.raises(FamilyParameterError):
        validate_params(T.C5, 2, 1, 3)  # no d parameter


def test_c3_c4_normalization():
    p = validate_params(T.C3, 24, 1)
    assert (p.c, p.d, p.e) == (2, 1, 3)     # 24 = 2^3 * 1^2 * 3
    p = validate_params(T.C3, 72, 1)
    assert (p.c, p.d, p.e) == (2, 3, 1)     # 72 = 2^3 * 3^2 * 1
    p = validate_params(T.C4, 12, 1)
    assert (p.c, p.d) == (2, 3)             # 12 = 2^2 * 3


def test_degenerate_tuples():
    with pytest.raises(DegenerateCurve):
        build_model(validate_params(T.C10, 2, 1))
    with pytest.raises(DegenerateCurve):
        build_model(validate_params(T.C2xC6, 1, 3))
    with pytest.raises(DegenerateCurve):
        build_model(validate_params(T.C5, 1, 0))


def test_model_coefficients_examples():
    assert build_model(validate_params(T.C5, 2, 1)).a_invariants() == (1, -2, -4, 0, 0)
    assert build_model(validate_params(T.C7, 2, 1)).a_invariants() == (5, 2, 8, 0, 0)
    assert build_model(validate_params(T.C3_0, 2)).a_invariants() == (0, 0, 2, 0, 0)
    assert build_model(validate_params(T.C12, 6, 11)).a1 == 36126
    assert build_model(validate_params(T.C2, 3, 2, 5)).a_invariants() == (0, 6, 0, -11, 0)
    assert build_model(validate_params(T.C2xC2, 4, 1, 3)).a_invariants() == (0, 15, 0, 36, 0)


def test_published_c4_family_invariants():
    sig = family_signature(validate_params(T.C4, 2**12 * 3**2, 5 * 7 * 131))
    assert sig.c4 == 4399653136 * 192**4
    assert sig.c6 == -286462685864384 * 192**6


def test_origin_is_torsion_of_expected_order():
    # the point (0, 0) generates the cyclic part named by the family
    expected = {
        T.C2: 2, T.C3: 3, T.C3_0: 3, T.C4: 4, T.C5: 5, T.C6: 6, T.C7: 7,
        T.C8: 8, T.C9: 9, T.C10: 10, T.C12: 12,
        T.C2xC2: 2, T.C2xC4: 4, T.C2xC6: 6, T.C2xC8: 8,
    }
    cases = {
        T.C2: (3, 2, 5), T.C3: (2, 3, None), T.C3_0: (2, None, None),
        T.C4: (3, 2, None), T.C5: (2, 1, None), T.C6: (3, 1, None),
        T.C7: (2, 1, None), T.C8: (3, 1, None), T.C9: (2, 1, None),
        T.C10: (3, 1, None), T.C12: (6, 11, None), T.C2xC2: (4, 1, 3),
        T.C2xC4: (1, 1, None), T.C2xC6: (2, 1, None), T.C2xC8: (1, 1, None),
    }
    for t, (a, b, d) in cases.items():
        model = build_model(validate_params(t, a, b, d))
        assert model.contains(ORIGIN)
        assert point_order(model, ORIGIN) == expected[t], t


def test_scale_factor_membership():
    # each family admits only a few scale factors u between the family
    # signature and the minimal signature
    allowed_u = {
        T.C5: {1}, T.C7: {1}, T.C9: {1},
        T.C6: {1, 2}, T.C8: {1, 2}, T.C10: {1, 2}, T.C12: {1, 2},
        T.C2xC2: {1, 2}, T.C2: {1, 2, 4}, T.C2xC4: {1, 2, 4},
        T.C2xC6: {1, 4, 16}, T.C2xC8: {1, 16, 64},
    }
    from rmm.classify import parameter_tuples, classify_tuple
    for t, us in allowed_u.items():
        seen = set()
        bound = 5 if t in (T.C2, T.C2xC2) else 10
        for tup in parameter_tuples(t, bound):
            result = classify_tuple(t, tup)
            if result is not None:
                seen.add(result[1])
        assert seen <= us, (t, seen)


def test_scale_factor_c3_c4():
    # for C3 the scale is c^2 d with a = c^3 d^2 e; for C4 it is c or 2c
    # with a = c^2 d
    for a in range(1, 30):
        for b in (-5, -2, -1, 1, 2, 5):
            try:
                p3 = validate_params(T.C3, a, b)
                _, u = minimize(family_signature(p3))
                assert u == p3.c**2 * p3.d, (a, b, u)
            except FamilyParameterError:
                pass
            try:
                p4 = validate_params(T.C4, a, b)
                _, u = minimize(family_signature(p4))
                assert u in (p4.c, 2 * p4.c), (a, b, u)
            except FamilyParameterError:
                pass


def test_c2xc2_closed_form_matches_minimal_c6():
    from rmm.classify import parameter_tuples
    checked = 0
    for a, b, d in parameter_tuples(T.C2xC2, 6):
        try:
            sig = family_signature(validate_params(T.C2xC2, a, b, d))
        except FamilyParameterError:
            continue
        sig_min, u = minimize(sig)
        assert u in (1, 2)
        assert sig_min.c6 == c2xc2_c6_closed_form(a, b, d, u), (a, b, d, u)
        checked += 1
    assert checked > 100
    with pytest.raises(ValueError):
        c2xc2_c6_closed_form(2, 1, 1, 3)
    with pytest.raises(ValueError):
        c2xc2_c6_closed_form(1, 2, 1, 2)  # u = 2 needs a even
