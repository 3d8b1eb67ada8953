import pytest

from normtrace.autgroup import enumerate_group
from normtrace.codes import BudgetExceeded
from normtrace.curve import build_curve
from normtrace.gf import build_field
from normtrace.sepcurve import (AffineAut, MONOMIAL_CASE_I, MONOMIAL_CASE_II,
                                NON_MONOMIAL, SearchFieldTooSmall,
                                SeparatedCurveSpec, assert_group, b_roots,
                                brute_force_stabilizer_search, classify,
                                classify_monomial, compose_affine,
                                condiz_check, embed_field, genus,
                                h_bound_from_roots, inverse_affine,
                                kernel_elements, linearization_gcd,
                                monomial_shift, mu_fixers, norm_trace_spec,
                                recommended_search_field, spec_from_dict,
                                to_standard_qm, validate)

F2 = build_field(2, 1)
F5 = build_field(5, 1)


def spec_a422_b3():
    # p = 2, n = 2, A = Y^4 + Y^2 + Y, B = X^3
    return SeparatedCurveSpec(F2, {0: 1, 1: 1, 2: 1}, (0, 0, 0, 1))


def spec_a51_b3():
    # p = 5, n = 1, A = Y^5 + Y, B = X^3
    return SeparatedCurveSpec(F5, {0: 1, 1: 1}, (0, 0, 0, 1))


def test_validate_norm_trace():
    spec = norm_trace_spec(2, 3)
    validate(spec)
    assert spec.a_coeffs == {0: 1, 1: 1, 2: 1}
    assert spec.m == 7 and spec.n == 2


def test_validate_rejections():
    with pytest.raises(ValueError, match="divisible by p"):
        validate(SeparatedCurveSpec(F2, {0: 1, 1: 1}, (0, 0, 0, 0, 1)))  # m = 4
    with pytest.raises(ValueError, match="b_m"):
        validate(SeparatedCurveSpec(F2, {0: 1, 1: 1}, (0, 1, 0, 0)))
    with pytest.raises(ValueError, match="a_0"):
        validate(SeparatedCurveSpec(F2, {1: 1, 2: 1}, (0, 0, 0, 1)))
    with pytest.raises(ValueError, match="degree"):
        validate(SeparatedCurveSpec(F2, {0: 1, 1: 1}, (0, 0, 0, 1)))  # deg 3
    with pytest.raises(ValueError, match=">= 2"):
        validate(SeparatedCurveSpec(F5, {0: 1, 1: 1}, (1, 1)))
    with pytest.raises(ValueError, match="n >= 1"):
        validate(SeparatedCurveSpec(F5, {0: 1}, (0, 0, 0, 1)))


def test_additivity_holds_by_construction():
    # the A-representation only stores p-power exponents, so sampled
    # additivity must hold for any stored spec
    spec = spec_a422_b3().map_coefficients(build_field(2, 6))
    validate(spec)
    ctx = spec.ctx
    for u in range(0, 64, 7):
        for v in range(0, 64, 5):
            assert spec.a_eval(ctx.add(u, v)) == ctx.add(spec.a_eval(u),
                                                         spec.a_eval(v))


def test_genus():
    assert genus(spec_a422_b3()) == 3                      # (4-1)(3-1)/2
    assert genus(spec_a51_b3()) == 4                       # (5-1)(3-1)/2
    f3 = build_field(3, 1)
    assert genus(SeparatedCurveSpec(f3, {0: 1, 1: 1}, (0, 0, 1))) == 1


def test_linearization_gcd():
    assert linearization_gcd(spec_a422_b3()) == 1          # gcd(1, 2)
    assert linearization_gcd(spec_a51_b3()) == 1
    assert linearization_gcd(norm_trace_spec(4, 3)) == 2   # gcd(2, 4), q = 4
    two_term = SeparatedCurveSpec(F2, {0: 1, 3: 1}, (0, 0, 0, 1))
    assert linearization_gcd(two_term) == 3


def test_mu_fixers_is_pd_subfield():
    f64 = build_field(2, 6)
    spec = spec_a422_b3().map_coefficients(f64)
    assert mu_fixers(spec) == [1]                          # d = 1
    # p^2-linearized: A = Y^16 + Y over GF(16): fixers = GF(4)^*
    f16 = build_field(2, 4)
    spec2 = SeparatedCurveSpec(f16, {0: 1, 2: 1}, (0, 0, 0, 1))
    fix = mu_fixers(spec2)
    assert sorted(fix + [0]) == f16.subfield_indices(2)


def test_kernel_size_is_pn():
    # A separable: exactly p^n roots in the splitting field
    f = recommended_search_field(spec_a422_b3())
    assert len(kernel_elements(spec_a422_b3(), f)) == 4
    f5 = recommended_search_field(spec_a51_b3())
    assert len(kernel_elements(spec_a51_b3(), f5)) == 5


def test_monomial_shift():
    assert monomial_shift(spec_a422_b3()) == 0
    assert monomial_shift(SeparatedCurveSpec(F5, {0: 1, 1: 1},
                                             (1, 3, 3, 1))) == 1  # (X+1)^3
    assert monomial_shift(SeparatedCurveSpec(F2, {0: 1, 1: 1, 2: 1},
                                             (0, 1, 0, 1))) is None


def test_classify_case_ii():
    res = classify_monomial(spec_a422_b3())
    assert res.case == MONOMIAL_CASE_II
    assert res.d == 1
    assert res.predicted_full_order == 4 * 3 * 1 == 12
    assert res.predicted_stabilizer_order == 12
    kinds = {g.kind: g.count for g in res.generators}
    assert kinds == {"translation": 4, "scaling": 3}


def test_classify_case_i():
    res = classify_monomial(spec_a51_b3())
    assert res.case == MONOMIAL_CASE_I
    # m * |PGL(2, 5)| = 3 * 120 = 360; stabilizer = 360 / (p^n + 1)
    assert res.predicted_full_order == 360
    assert res.predicted_stabilizer_order == 60
    assert res.notes


def test_classify_rejects_out_of_scope():
    with pytest.raises(ValueError, match="single root"):
        classify_monomial(SeparatedCurveSpec(F2, {0: 1, 1: 1, 2: 1}, (0, 1, 0, 1)))
    # m = 5 is 1 mod p^n = 4
    with pytest.raises(ValueError, match="outside the classification"):
        classify_monomial(SeparatedCurveSpec(F2, {0: 1, 2: 1},
                                             (0, 0, 0, 0, 0, 1)))


def test_classify_norm_trace_matches_group_order():
    for q, r in [(2, 3), (3, 3), (2, 4)]:
        res = classify_monomial(norm_trace_spec(q, r))
        assert res.case == MONOMIAL_CASE_II
        want = q ** (r - 1) * (q ** r - 1)
        assert res.predicted_full_order == want
        assert res.predicted_full_order == len(enumerate_group(build_curve(q, r)))


def test_search_on_norm_trace_spec_reproduces_group():
    # the generic stabilizer search over GF(q^r) itself must find the
    # very same maps the dedicated group enumeration produces
    cv = build_curve(2, 3)
    spec = norm_trace_spec(2, 3, cv.ctx)
    maps = brute_force_stabilizer_search(spec, cv.ctx)
    assert len(maps) == 28
    found = set()
    for s in maps:
        assert s.a == 1 and s.c0 == 0      # b^c = 1 for every b in GF(8)*
        assert len(s.q_coeffs) <= 1        # y -> y + constant
        q0 = s.q_coeffs[0] if s.q_coeffs else 0
        found.add((q0, s.b))
    grp = {(g.a, g.b) for g in enumerate_group(cv)}
    assert found == grp


def test_search_case_ii_gf64():
    maps = brute_force_stabilizer_search(spec_a422_b3(), build_field(2, 6))
    assert len(maps) == 12
    assert sum(1 for s in maps if s.is_identity) == 1
    assert all(condiz_check(spec_a422_b3(), s) for s in maps)


def test_search_case_i_gf25():
    maps = brute_force_stabilizer_search(spec_a51_b3(), build_field(5, 2))
    assert len(maps) == 60
    assert all(condiz_check(spec_a51_b3(), s) for s in maps)


def test_search_respects_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_stabilizer_search(spec_a422_b3(), build_field(2, 6),
                                      budget=100)


def test_search_non_monomial_b():
    f64 = build_field(2, 6)
    for b_coeffs in [(0, 1, 0, 1), (0, 0, 1, 1)]:  # X^3 + X, X^3 + X^2
        spec = SeparatedCurveSpec(F2, {0: 1, 1: 1, 2: 1}, b_coeffs)
        maps = brute_force_stabilizer_search(spec, f64)
        h_order = len(maps) // 4  # p-part is the p^n translations
        assert len(maps) == 4 and h_order == 1
        assert h_order < 3  # strictly below m (p^d - 1)
        assert h_bound_from_roots(spec).satisfied_by(h_order)


def test_group_structure_of_search_results():
    maps = brute_force_stabilizer_search(spec_a51_b3(), build_field(5, 2))
    elems = set(maps)
    assert all(inverse_affine(s) in elems for s in maps)
    for s1 in maps[:10]:
        for s2 in maps[:10]:
            assert compose_affine(s1, s2) in elems
    # apply/compose consistency on sample points
    ctx = maps[0].ctx
    for s1 in maps[:5]:
        for s2 in maps[:5]:
            both = compose_affine(s1, s2)
            for x in range(0, 25, 7):
                for y in range(0, 25, 6):
                    assert both.apply_xy(x, y) == s1.apply_xy(*s2.apply_xy(x, y))


def test_assert_group_detects_doctored_sets():
    maps = brute_force_stabilizer_search(spec_a422_b3(), build_field(2, 6))
    with pytest.raises(SearchFieldTooSmall):
        assert_group(maps[1:])   # drop the identity


def test_condiz_negative():
    f64 = build_field(2, 6)
    # b with b^3 != 1 violates the scaling law for B = X^3
    b = next(b for b in f64.nonzero() if f64.pow(b, 3) != 1)
    bad = AffineAut(f64, 1, b, 0, ())
    assert not condiz_check(spec_a422_b3(), bad)


def test_h_bound_examples():
    # literal unique-multiple-root case: X^3 (X + 1) over GF(4); note the
    # degree is 0 mod p, so this exercises the root helper on its own
    f4 = build_field(2, 2)
    spec = SeparatedCurveSpec(f4, {0: 1, 1: 1, 2: 1}, (0, 0, 0, 1, 1))
    hb = h_bound_from_roots(spec)
    assert hb.kind == "unique-multiple-root"
    assert hb.divisors == (3, 2)
    assert hb.satisfied_by(3) and hb.satisfied_by(2) and not hb.satisfied_by(4)
    # all roots of one multiplicity M > 1: X^2 (X + 1)^2 over GF(3)
    f3 = build_field(3, 1)
    spec2 = SeparatedCurveSpec(f3, {0: 1, 1: 1}, (0, 0, 1, 2, 1))
    hb2 = h_bound_from_roots(spec2)
    assert hb2.kind == "all-equal-multiplicity"
    assert hb2.divisors == (1,)
    # monomial B keeps the classification order m (p^d - 1)
    hb3 = h_bound_from_roots(spec_a422_b3())
    assert hb3.kind == "monomial"
    assert hb3.divisors == (3,)


def test_b_roots_multiplicities():
    f4 = build_field(2, 2)
    spec = SeparatedCurveSpec(f4, {0: 1, 1: 1, 2: 1}, (0, 0, 0, 1, 1))
    field, roots = b_roots(spec)
    assert sorted(m for _, m in roots) == [1, 3]
    assert sum(m for _, m in roots) == 4


def test_classify_general_non_monomial():
    spec = SeparatedCurveSpec(F2, {0: 1, 1: 1, 2: 1}, (0, 1, 0, 1))
    res = classify(spec)
    assert res.case == NON_MONOMIAL
    assert res.predicted_full_order is None
    assert res.predicted_stabilizer_order == 4
    assert res.h_bound is not None


def test_embedding_is_homomorphism():
    f4 = build_field(2, 2)
    f16 = build_field(2, 4)
    emb = embed_field(f4, f16)
    assert len(set(emb)) == 4
    for a in range(4):
        for b in range(4):
            assert emb[f4.add(a, b)] == f16.add(emb[a], emb[b])
            assert emb[f4.mul(a, b)] == f16.mul(emb[a], emb[b])
    with pytest.raises(ValueError):
        embed_field(f4, build_field(2, 3))
    with pytest.raises(ValueError):
        embed_field(f4, build_field(3, 2))


def test_recommended_search_field():
    # kernel of Y^4 + Y^2 + Y = Y (Y^3 + Y + 1) needs GF(8); the cube
    # roots of unity need GF(4); the compositum is GF(64)
    f = recommended_search_field(spec_a422_b3())
    assert f.order == 64
    maps = brute_force_stabilizer_search(spec_a422_b3(), f)
    assert len(maps) == 12
    f5 = recommended_search_field(spec_a51_b3())
    assert f5.order == 25
    # case (i) uses the m (p^n - 1)-th roots of unity: 12 | 25 - 1
    assert (f5.order - 1) % 12 == 0


def test_to_standard_qm_trivial():
    f25 = build_field(5, 2)
    std = to_standard_qm(spec_a51_b3().map_coefficients(f25))
    assert (std.gamma, std.delta, std.shift) == (1, 1, 0)
    assert std.extension_degree == 1


def test_to_standard_qm_scaled():
    # X^3 = 2 Y^5 + 2 Y over GF(25)
    f25 = build_field(5, 2)
    spec = SeparatedCurveSpec(f25, {0: 2, 1: 2}, (0, 0, 0, 1))
    std = to_standard_qm(spec)
    E = std.field
    # constants satisfy the two scaling constraints
    k = E.div(E.pow(std.gamma, 3), 1)
    assert E.pow(std.delta, 5) == E.mul(k, 2)
    assert std.delta == E.mul(k, 2)


def test_to_standard_qm_recentred():
    # (X + 1)^3 = Y^5 + Y: the shift must remove the translation exactly
    spec = SeparatedCurveSpec(F5, {0: 1, 1: 1}, (1, 3, 3, 1))
    std = to_standard_qm(spec)
    assert std.shift == 1


def test_to_standard_qm_rejections():
    with pytest.raises(ValueError, match="two-term"):
        to_standard_qm(spec_a422_b3())
    with pytest.raises(ValueError, match="b_m"):
        to_standard_qm(SeparatedCurveSpec(F5, {0: 1, 1: 1}, (0, 1, 0, 1)))


def test_spec_serialization_roundtrip():
    spec = spec_a422_b3()
    rec = spec.to_dict()
    assert rec["A"] == [{"j": 0, "a_j_index": 1}, {"j": 1, "a_j_index": 1},
                        {"j": 2, "a_j_index": 1}]
    again = spec_from_dict(rec)
    assert again.a_coeffs == spec.a_coeffs
    assert again.b_coeffs == spec.b_coeffs
    assert again.ctx == spec.ctx
    rec["p"] = 3
    with pytest.raises(ValueError):
        spec_from_dict(rec)
