import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobend.diffop import (
    DividedPower,
    FpPoly,
    NotInDError,
    OperatorMatrix,
    binom_mod_p,
    check_linearity,
    divided_power,
    frobenius_power,
    multiplication,
    natural_inclusion,
    split_embedding,
    splitting_tau,
    to_matrix,
    verify_paper_example,
)
from oracles import binom_mod_p_direct


def t(p, k, c=1):
    return FpPoly.monomial(p, k, c)


def random_poly(rng, p, deg):
    return FpPoly(p, [rng.randrange(p) for _ in range(deg + 1)])


def random_operator(rng, p, e, udeg=1):
    q = p**e
    return OperatorMatrix(
        p, e, tuple(tuple(random_poly(rng, p, rng.randrange(udeg + 1)) for _ in range(q)) for _ in range(q))
    )


def test_binom_lucas():
    for p in (2, 3, 5):
        for m in range(40):
            for k in range(m + 2):
                assert binom_mod_p(m, k, p) == binom_mod_p_direct(m, k, p)


def test_apply_examples():
    assert divided_power(1, 2, 1).apply(t(2, 1)) == 1
    assert DividedPower(2)(t(2, 3)) == t(2, 1)
    assert divided_power(2, 2, 2).apply(t(2, 3)) == t(2, 1)
    rng = random.Random(1)
    ident = OperatorMatrix.identity(3, 1)
    for _ in range(10):
        f = random_poly(rng, 3, 12)
        assert ident.apply(f) == f


def test_to_matrix_examples():
    u = FpPoly(2, [0, 1])
    one, zero = FpPoly(2, [1]), FpPoly(2)
    assert divided_power(1, 2, 1).entries == ((zero, one), (zero, zero))
    assert multiplication(t(2, 1), 1).entries == ((zero, u), (one, zero))


def test_not_linear_over_other_subrings():
    with pytest.raises(NotInDError):
        check_linearity(DividedPower(1), 2, 3)
    with pytest.raises(NotInDError):
        to_matrix(DividedPower(2), 2, 1)  # d^[2] is not F_2[t^2]-linear
    with pytest.raises(NotInDError):
        divided_power(4, 2, 2)


def test_natural_inclusion_examples():
    assert natural_inclusion(OperatorMatrix.identity(2, 1), 2) == OperatorMatrix.identity(2, 2)
    i_d = natural_inclusion(divided_power(1, 2, 1), 2)
    assert [i_d.apply(t(2, m)) for m in range(4)] == [FpPoly(2), FpPoly(2, [1]), FpPoly(2), t(2, 2)]
    rng = random.Random(2)
    for p in (2, 3):
        op = random_operator(rng, p, 1, 2)
        big = natural_inclusion(op, 2)
        for _ in range(10):
            f = random_poly(rng, p, 30)
            assert big.apply(f) == op.apply(f)


def test_splitting_tau():
    tau = splitting_tau(2, 1)
    assert tau(t(2, 2)) == t(2, 1)
    assert tau(t(2, 1)) == FpPoly(2)
    assert tau(FpPoly(2, [1])) == 1
    rng = random.Random(3)
    for p in (2, 3, 5):
        for e in (1, 2):
            tau = splitting_tau(p, e)
            q = p**e
            for _ in range(10):
                g = random_poly(rng, p, 8)
                assert tau(frobenius_power(g, e)) == g  # tau o incl = id
                assert tau(t(p, q) * frobenius_power(g, e)) == t(p, 1) * g


def test_split_embedding_examples():
    d = divided_power(1, 2, 1)
    j_d = split_embedding(d, 2)
    assert [j_d.apply(t(2, m)) for m in range(4)] == [FpPoly(2), FpPoly(2), FpPoly(2, [1]), FpPoly(2)]
    formula = divided_power(2, 2, 2) + multiplication(t(2, 1), 2) @ divided_power(3, 2, 2)
    assert j_d == formula
    j_id = split_embedding(OperatorMatrix.identity(2, 1), 2)
    assert j_id != OperatorMatrix.identity(2, 2)
    assert j_id @ j_id == j_id
    assert [j_id.apply(t(2, m)) for m in range(4)] == [FpPoly(2, [1]), FpPoly(2), t(2, 2), FpPoly(2)]


def test_verify_worked_example():
    report = verify_paper_example()
    assert report.passed
    assert report.inclusion != report.embedding
    names = [c.name for c in report.checks]
    assert "j(d/dt) = D2 + t*D3 as matrices" in names
    assert report.to_json()["passed"] is True


def test_verify_other_characteristic():
    report = verify_paper_example(3)
    assert report.passed
    assert report.exploratory["i(t^p) == j(t^p)"] is False
    # tau o incl = id makes j multiplicative even though j(1) != 1
    assert report.exploratory["j(d/dt o t^p) == j(d/dt) o j(t^p)"] is True
    assert report.exploratory["j(1) == 1"] is False


def test_matrix_json_round_trip():
    op = split_embedding(divided_power(1, 3, 1), 2)
    assert OperatorMatrix.from_json(op.to_json()) == op


def test_round_trip_matrix_action_matrix():
    rng = random.Random(4)
    for p, e in [(2, 1), (2, 2), (3, 1), (5, 1), (3, 2)]:
        for _ in range(3):
            op = random_operator(rng, p, e, 2)
            assert to_matrix(op.apply, p, e) == op


@pytest.mark.parametrize("p, e", [(2, 1), (2, 2), (3, 1), (2, 3)])
def test_natural_inclusion_injective_and_multiplicative(p, e):
    rng = random.Random(5 + p + e)
    for _ in range(4):
        a, b = random_operator(rng, p, e), random_operator(rng, p, e)
        ia, ib = natural_inclusion(a, e + 1), natural_inclusion(b, e + 1)
        assert natural_inclusion(a @ b, e + 1) == ia @ ib
        assert (a == b) == (ia == ib)
        assert natural_inclusion(a - b, e + 1) == ia - ib


@pytest.mark.parametrize("p, e", [(2, 1), (3, 1), (2, 2)])
def test_split_embedding_additive_and_multiplicative(p, e):
    # j(psi phi) = incl psi tau incl phi tau = incl psi phi tau, since tau o incl = id
    rng = random.Random(11 * p + e)
    for _ in range(4):
        a, b = random_operator(rng, p, e), random_operator(rng, p, e)
        assert split_embedding(a + b, e + 1) == split_embedding(a, e + 1) + split_embedding(b, e + 1)
        assert split_embedding(a @ b, e + 1) == split_embedding(a, e + 1) @ split_embedding(b, e + 1)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(2, 3), (3, 2), (5, 1), (2, 4)]), st.integers(0, 30), st.integers(0, 30))
def test_divided_power_composition(level, a, b):
    p, e = level
    q = p**e
    if a + b >= q:
        return
    lhs = divided_power(a, p, e) @ divided_power(b, p, e)
    assert lhs == binom_mod_p(a + b, a, p) * divided_power(a + b, p, e)


def test_level_mismatch():
    with pytest.raises(ValueError):
        OperatorMatrix.identity(2, 1) @ OperatorMatrix.identity(2, 2)
    with pytest.raises(ValueError):
        natural_inclusion(OperatorMatrix.identity(2, 2), 2)
