from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graded_elements
from frobend.catalog import VarietySpec, del_pezzo_spec, fano3_spec, pn_spec, projective_space_hyperplane
from frobend.chow import GradedRing, IntersectionTable, MissingIntersectionError
from frobend.classes import todd_abstract
from frobend.frobpush import (
    FrobParams,
    InterpolationMismatch,
    NonIntegralEulerCharacteristic,
    QPolynomial,
    chi_end_at,
    chi_frob_end,
    chi_symbolic,
    frob_end_ch,
    lagrange_interpolate,
    pushforward_ch,
)
from oracles import chi_end_pn, lagrange_by_linear_solve

QS = [Fraction(2), Fraction(3), Fraction(4), Fraction(9, 2)]


def test_frob_params():
    fp = FrobParams(3, 2)
    assert fp.q == 9
    with pytest.raises(ValueError):
        FrobParams(4, 1)
    with pytest.raises(ValueError):
        FrobParams(2, 0)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("q", QS)
def test_pushforward_structure_sheaf_display(n, q):
    td = todd_abstract(n)
    d1, d2 = td.ring.gen("d1"), td.ring.gen("d2")
    ch = pushforward_ch(td.ring.one(), td, q, n)
    assert ch.component(0) == q**n
    assert ch.component(1) == (q ** (n - 1) - q**n) * d1
    assert ch.component(2) == (q ** (n - 2) - q**n) * d2 - (q ** (n - 1) - q**n) * d1 * d1


def test_pushforward_at_q_one_is_identity():
    td = todd_abstract(3)
    x = 2 + td.ring.gen("d1") - td.ring.gen("d3")
    assert pushforward_ch(x, td, 1) == x


def test_pushforward_p2_rank_and_c1():
    H, td = projective_space_hyperplane(2)
    ch = pushforward_ch(H.ring.one(), td, 2, 2)
    assert ch.constant() == 4
    assert ch.component(1) == -3 * H
    # the same through the Chern-class presentation: c1 = 3H, so ch_1 = -c1
    spec = pn_spec(2)
    ch_c = pushforward_ch(spec.ring.one(), spec.todd(), 2, 2)
    assert ch_c.component(1) == -spec.ring.gen("c1")


def test_pn_todd_presentations_agree():
    # td(P^n) as (H/(1-e^-H))^(n+1) versus the universal Todd class at c_i = C(n+1, i) H^i
    for n in (2, 3, 4):
        H, td_h = projective_space_hyperplane(n)
        spec = pn_spec(n)
        for k in range(n + 1):
            substituted = sum(
                (c * prod(comb(n + 1, g.degree) ** a for a, g in zip(m, spec.ring.generators))
                 for m, c in spec.todd().component(k).terms().items()),
                Fraction(0),
            )
            assert substituted == td_h.coefficient(H.ring.monomial(H=k))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_frob_end_ch(n):
    td = todd_abstract(n)
    d1, d2 = td.ring.gen("d1"), td.ring.gen("d2")
    for q in QS:
        end = frob_end_ch(td, q, n)
        assert end.component(0) == q ** (2 * n)
        assert end.component(2) == (q ** (2 * (n - 1)) - q ** (2 * n)) * (2 * d2 - d1 * d1)
        assert all(end.component(k).is_zero() for k in range(1, n + 1, 2))
    assert frob_end_ch(td, 1, n) == 1


def test_chi_point_values():
    assert chi_frob_end(del_pezzo_spec(3), FrobParams(2, 1)) == 1
    for p in (2, 3, 5, 7):
        for e in (1, 2, 3):
            assert chi_frob_end(del_pezzo_spec(4), FrobParams(p, e)) == p ** (2 * e)
            assert chi_frob_end(fano3_spec(24), FrobParams(p, e)) == p ** (4 * e)


def test_chi_del_pezzo_degree_one():
    assert chi_frob_end(del_pezzo_spec(1), FrobParams(2, 1)) == -5
    # 81 * (-3/4) + 9 * (7/4)
    assert chi_frob_end(del_pezzo_spec(1), FrobParams(3, 1)) == -45


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chi_projective_space_against_line_bundle_sum(n):
    # independent route: split F_*O into line bundles by Hilbert functions, sum chi(O(i-j))
    for q in (2, 3, 4, 5, 7):
        assert chi_end_at(pn_spec(n), q) == chi_end_pn(n, q)


def test_fano_needs_no_c3():
    spec = fano3_spec(10)
    assert "c3" not in spec.table
    chi_frob_end(spec, FrobParams(5, 2))


def test_missing_number_propagates():
    R = GradedRing.chern(2)
    spec = VarietySpec("no c2", 2, IntersectionTable(R, {"c1^2": 3}))
    with pytest.raises(MissingIntersectionError):
        chi_frob_end(spec, FrobParams(2, 1))


def test_non_integral_chi_is_an_error():
    R = GradedRing.chern(2)
    spec = VarietySpec("bad", 2, IntersectionTable(R, {"c1^2": 3, "c2": 10}))
    with pytest.raises(NonIntegralEulerCharacteristic):
        chi_frob_end(spec, FrobParams(2, 1))


def test_chi_symbolic_closed_forms():
    for d in range(1, 10):
        poly = chi_symbolic(del_pezzo_spec(d))
        assert poly == QPolynomial([0, 0, Fraction(8 - d, 4), 0, Fraction(d - 4, 4)])
        assert all(k % 2 == 0 and k >= 2 for k in poly.support())
    for vol in (2, 22, 24, 64):
        poly = chi_symbolic(fano3_spec(vol))
        assert poly == QPolynomial([0, 0, 0, 0, Fraction(48 - vol, 24), 0, Fraction(vol - 24, 24)])


def test_chi_symbolic_matches_direct_evaluation():
    for spec in (del_pezzo_spec(5), fano3_spec(40), pn_spec(4)):
        poly = chi_symbolic(spec)
        for p in (2, 3, 5):
            for e in (1, 2):
                assert poly(p**e) == chi_frob_end(spec, FrobParams(p, e))


def test_interpolation_against_vandermonde():
    spec = pn_spec(4)
    xs = list(range(2, 11))
    ys = [chi_end_at(spec, x) for x in xs]
    assert list(chi_symbolic(spec).coeffs) == lagrange_by_linear_solve(xs, ys)[: len(chi_symbolic(spec).coeffs)]
    assert all(c == 0 for c in lagrange_by_linear_solve(xs, ys)[len(chi_symbolic(spec).coeffs):])


def test_interpolation_mismatch_detected(monkeypatch):
    import frobend.frobpush as fp

    real = fp.chi_end_at
    monkeypatch.setattr(fp, "chi_end_at", lambda v, q: real(v, q) + (1 if q == 8 else 0))
    with pytest.raises(InterpolationMismatch):
        fp.chi_symbolic(del_pezzo_spec(3))


def test_lagrange_small():
    poly = lagrange_interpolate([(0, 1), (1, 3), (2, 7)])
    assert poly == QPolynomial([1, 1, 1])
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 1), (1, 2)])


def test_qpolynomial_format_and_json():
    poly = QPolynomial([0, 0, Fraction(3, 2), 0, Fraction(-1, 2)])
    assert str(poly) == "(-1/2)q^4 + (3/2)q^2"
    assert QPolynomial.from_json(poly.to_json()) == poly
    assert poly.to_json() == ["0/1", "0/1", "3/2", "0/1", "-1/2"]
    assert str(QPolynomial([0, 0, 0, 0, Fraction(13, 12), 0, Fraction(-1, 12)])) == "(-1/12)q^6 + (13/12)q^4"


def test_leading_sign_criterion():
    for d in range(1, 10):
        assert (chi_symbolic(del_pezzo_spec(d)).leading() < 0) == (d < 4)
    for vol in range(2, 66, 2):
        assert (chi_symbolic(fano3_spec(vol)).leading() < 0) == (vol < 24)


def test_integrality_over_small_q():
    specs = [del_pezzo_spec(d) for d in range(1, 10)] + [fano3_spec(v) for v in range(2, 66, 2)]
    specs += [pn_spec(n) for n in (1, 2, 3)]
    for spec in specs:
        for q in range(2, 13):
            assert chi_end_at(spec, q).denominator == 1, (spec.name, q)


def _random_td(n):
    ring = GradedRing.from_pairs([(f"d{i}", i) for i in range(1, n + 1)], n)
    return ring, graded_elements(ring, unit=True)


qs = st.sampled_from([Fraction(2), Fraction(3), Fraction(5), Fraction(1, 3), Fraction(-2)])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_composition_law(n):
    ring, tds = _random_td(n)

    @settings(max_examples=25, deadline=None)
    @given(tds, graded_elements(ring), qs, qs)
    def check(td, x, q1, q2):
        lhs = pushforward_ch(pushforward_ch(x, td, q1, n), td, q2, n)
        assert lhs == pushforward_ch(x, td, q1 * q2, n)
        assert pushforward_ch(ring.one(), td, q1, n).constant() == q1**n

    check()
