"""Named-series builders: Euler products, quotients, theta sums, alpha, h."""

import pytest

from qcong import (CUBE, PENTAGONAL, SIGNED_PENTAGONAL, SLOPE_3K1, SLOPE_6K1,
                   TRIANGULAR, FQuotientSpec, bilateral, count_table,
                   cubic_theta_alpha, euler_f, euler_f_product, fquotient,
                   h_level12, Unrestricted)


def test_euler_f_first_terms():
    f1 = euler_f(1, 12)
    assert dict(f1.terms()) == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}


def test_euler_f4_low_order():
    assert euler_f(4, 3).coeffs == (1, 0, 0, 0)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_pentagonal_vs_product_builder(m):
    assert euler_f(m, 2000).coeffs == euler_f_product(m, 2000).coeffs


def test_fquotient_triple_gf():
    from qcong import count_triples
    s = fquotient({2: 4, 1: -2, 4: -3}, 5)
    assert list(s.coeffs) == count_triples(5) == [1, 2, 1, 2, 5, 6]


def test_fquotient_single_factor_is_euler():
    assert fquotient({1: 1}, 80).coeffs == euler_f(1, 80).coeffs


def test_fquotient_p5n4_values():
    """5 f5^5/f1^6 must list p(5n+4): checked against the partition DP."""
    p = count_table(Unrestricted(), 24)
    s = fquotient({5: 5, 1: -6}, 4).scale(5)
    assert list(s.coeffs) == [p[4], p[9], p[14], p[19], p[24]] == [5, 30, 135, 490, 1575]


def test_fquotient_qshift_validation():
    with pytest.raises(ValueError):
        fquotient(FQuotientSpec.of({1: 1}, qshift=5), 3)
    spec = FQuotientSpec.of({2: 1, 28: -4}, qshift=-3)
    s = fquotient(spec, 0)
    assert s.v == -3 and s.coeff(-3) == 1


def test_fquotient_spec_normalization():
    spec = FQuotientSpec.of({3: 2, 1: 0, 2: -1})
    assert spec.factors == ((2, -1), (3, 2))
    with pytest.raises(ValueError):
        FQuotientSpec.of([(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        FQuotientSpec.of({0: 1})


def test_triangular_first_terms():
    t = bilateral(TRIANGULAR, 10)
    assert dict(t.terms()) == {0: 1, 1: 1, 3: 1, 6: 1, 10: 1}


@pytest.mark.parametrize("spec,quot", [
    (PENTAGONAL, {1: 1}),
    (CUBE, {1: 3}),
    (TRIANGULAR, {2: 2, 1: -1}),
    (SLOPE_3K1, {2: 5, 1: -2}),
    (SLOPE_6K1, {1: 5, 2: -2}),
    (SIGNED_PENTAGONAL, {2: 3, 1: -1, 4: -1}),
])
def test_bilateral_matches_quotient(spec, quot):
    assert bilateral(spec, 300).eq_through(fquotient(quot, 300), 300)


def test_alpha_first_coefficients():
    # independent recount of the lattice points m^2 + mn + n^2 = e
    counts = {}
    for mm in range(-40, 41):
        for nn in range(-40, 41):
            e = mm * mm + mm * nn + nn * nn
            counts[e] = counts.get(e, 0) + 1
    a = cubic_theta_alpha(4)
    assert list(a.coeffs) == [counts.get(e, 0) for e in range(5)] == [1, 6, 0, 6, 6]


def test_alpha_multiplicity_of_six():
    a = cubic_theta_alpha(300)
    for e in range(1, 301):
        assert a.coeff(e) % 6 == 0


def test_alpha_eta_quotient_identity():
    a = cubic_theta_alpha(200)
    rhs = fquotient({2: 6, 3: 1, 1: -3, 6: -2}, 200).add(
        fquotient({6: 6, 1: 1, 3: -3, 2: -2}, 199).shift(1).scale(3))
    assert a.eq_through(rhs, 199)


def test_alpha_q4_contraction_identity():
    a = cubic_theta_alpha(200)
    a4 = cubic_theta_alpha(50).substitute(4)
    rhs = a.sub(fquotient({4: 2, 12: 2, 2: -1, 6: -1}, 199).shift(1).scale(6))
    assert a4.eq_through(rhs, 199)


def test_h_valuation_and_inverse():
    h = h_level12(150)
    assert h.v == 1 and h.coeff(1) == 1
    assert h.normalize().v == 1
    assert h.invert().v == -1


def test_h_quotient_identities():
    h = h_level12(154)
    hi = h.invert()  # known through 152
    pairs = [
        (hi.add(h), {3: 3, 4: 1, 1: -1, 12: -3}),
        (hi.add(h).sub(1), {4: 4, 6: 2, 2: -2, 12: -4}),
        (hi.add(h).sub(2), {1: 1, 4: 2, 6: 9, 2: -3, 3: -3, 12: -6}),
        (hi.add(h).sub(4), {1: 3, 4: 1, 6: 2, 2: -2, 3: -1, 12: -3}),
    ]
    for lhs, quot in pairs:
        rhs = fquotient(FQuotientSpec.of(quot, qshift=-1), 150)
        assert lhs.eq_through(rhs, 150)


def test_bilateral_rejects_negative_order():
    with pytest.raises(ValueError):
        bilateral(TRIANGULAR, -1)


def test_spec_str_roundtrippable_text():
    spec = FQuotientSpec.of({2: 4, 1: -2, 4: -3})
    assert str(spec) == "f2^4/(f1^2*f4^3)"
