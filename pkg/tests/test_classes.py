from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import graded_elements, small_fractions
from frobend.chow import GradedRing, StructureError
from frobend.classes import (
    adams,
    adams_inverse,
    bernoulli,
    chern_character_line,
    dual,
    end_character,
    todd_abstract,
    todd_class,
    todd_line,
    todd_universal,
)
from oracles import bernoulli_series, todd_by_chern_roots

# frozen from the symmetric-function oracle (tests/oracles.py::todd_by_chern_roots(4, 4))
TD4_FROZEN = {
    (4, 0, 0, 0): Fraction(-1, 720),
    (2, 1, 0, 0): Fraction(1, 180),
    (1, 0, 1, 0): Fraction(1, 720),
    (0, 2, 0, 0): Fraction(1, 240),
    (0, 0, 0, 1): Fraction(-1, 720),
}


@pytest.mark.parametrize("k, value", [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (4, Fraction(-1, 30))])
def test_bernoulli_values(k, value):
    assert bernoulli(k) == value


def test_bernoulli_against_series():
    for k in range(0, 9):
        assert bernoulli(k) == bernoulli_series(k)


def test_todd_low_degrees():
    R = GradedRing.chern(3)
    c1, c2, _ = R.gens()
    td1, td2, td3 = todd_universal(3)
    assert td1 == c1 / 2
    assert td2 == (c1 * c1 + c2) / 12
    assert td3 == c1 * c2 / 24


def test_todd_degree_four_oracle():
    oracle = todd_by_chern_roots(4, 4)
    assert oracle == TD4_FROZEN
    td4 = todd_universal(4)[3]
    assert td4.terms() == oracle


@pytest.mark.parametrize("n", [2, 3])
def test_todd_oracle_other_degrees(n):
    td = todd_universal(n)
    for k in range(1, n + 1):
        got = {m: c for m, c in td[k - 1].terms().items()}
        assert got == todd_by_chern_roots(n, k)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_todd_truncation(n):
    high = todd_universal(n)
    low = todd_universal(n - 1) if n > 1 else []
    R_low = GradedRing.chern(n - 1)
    for k, poly in enumerate(low, start=1):
        # drop c_n (degree n > k) and shrink the ring
        assert poly.terms() == {m[:-1]: c for m, c in high[k - 1].terms().items() if m[-1] == 0}
        assert poly.ring == R_low


def test_todd_of_line_bundle_matches_rank_one_todd():
    R = GradedRing.from_pairs([("c1", 1)], 4)
    c1 = R.gen("c1")
    assert todd_class(R) == todd_line(c1)
    assert todd_line(c1).truncate(2) == (1 + c1 / 2 + c1 * c1 / 12).truncate(2)


def test_chern_character_line():
    R = GradedRing.from_pairs([("H", 1)], 2)
    H = R.gen("H")
    assert chern_character_line(R.zero()) == 1
    assert chern_character_line(H) == 1 + H + H * H / 2
    assert chern_character_line(3 * H) == 1 + 3 * H + Fraction(9, 2) * H * H
    with pytest.raises(StructureError):
        chern_character_line(1 + H)


def test_dual():
    R = GradedRing.from_pairs([("H", 1)], 2)
    H = R.gen("H")
    assert dual(1 + H + H * H / 2) == 1 - H + H * H / 2
    assert dual(R(5)) == 5


def test_end_character_examples():
    R = GradedRing.from_pairs([("x1", 1), ("x2", 2), ("x3", 3), ("x4", 4)], 4)
    x1, x2, x3, x4 = R.gens()
    assert end_character(R(3)) == 9
    ch = 4 + x1 + x2 + x3 + x4
    end = end_character(ch)
    assert end.component(2) == 2 * x2 * 4 - x1 * x1
    assert end.component(1).is_zero() and end.component(3).is_zero()


def test_adams_examples():
    td = todd_abstract(3)
    d1, d2, d3 = td.ring.gens()
    for q in (2, 3, 8, Fraction(1, 5)):
        assert adams_inverse(q, td) == 1 + d1 / q + d2 / q**2 + d3 / q**3
        assert adams(q, adams_inverse(q, td)) == td
    assert adams(1, td) == td
    with pytest.raises(ValueError):
        adams(0, td)


MIXED = GradedRing.from_pairs([("a", 1), ("b", 2), ("c", 3)], 4)


@settings(max_examples=50, deadline=None)
@given(graded_elements(MIXED), graded_elements(MIXED), small_fractions.filter(bool))
def test_adams_is_ring_homomorphism(x, y, q):
    assert adams(q, x * y) == adams(q, x) * adams(q, y)
    assert adams(q, x + y) == adams(q, x) + adams(q, y)


@settings(max_examples=50, deadline=None)
@given(graded_elements(MIXED))
def test_end_character_structure(x):
    end = end_character(x)
    assert all(end.component(k).is_zero() for k in (1, 3))
    assert end.constant() == x.constant() ** 2
    assert end_character(dual(x)) == end
    assert dual(dual(x)) == x


LINE = GradedRing.from_pairs([("h1", 1), ("h2", 1)], 4)


@settings(max_examples=40, deadline=None)
@given(small_fractions, small_fractions, small_fractions, small_fractions)
def test_exponential_multiplicative(a1, a2, b1, b2):
    h1, h2 = LINE.gens()
    a, b = a1 * h1 + a2 * h2, b1 * h1 + b2 * h2
    assert chern_character_line(a) * chern_character_line(b) == chern_character_line(a + b)
