"""Characteristic-class calculus on truncated graded rings.

Todd classes are produced from the universal generating series
``x / (1 - exp(-x))`` via power sums, so they exist in every dimension; the
Chern character, duals, endomorphism characters and Adams operations are
simple degree-wise manipulations of :class:`~frobend.chow.GradedElement`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .chow import (
    GradedElement,
    GradedRing,
    StructureError,
    exp_nilpotent,
    to_fraction,
)


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number, with ``B_1 = -1/2``.

    Computed from ``sum_{j=0}^{m} C(m+1, j) B_j = 0``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return Fraction(1)
    if k > 1 and k % 2:
        return Fraction(0)
    total = sum(comb(k + 1, j) * bernoulli(j) for j in range(k))
    return -total / (k + 1)


def todd_line_coefficients(n: int) -> list[Fraction]:
    """Coefficients of ``x/(1-e^{-x}) = sum (-1)^k B_k x^k / k!`` up to ``x^n``."""
    return [(-1) ** k * bernoulli(k) / factorial(k) for k in range(n + 1)]


def power_sums(ring: GradedRing, n: int) -> list[GradedElement]:
    """Power sums s_0..s_n of Chern roots, written in the generators c1..cn.

    Newton's identities:
    ``s_j = sum_{i=1}^{j-1} (-1)^(i-1) c_i s_{j-i} + (-1)^(j-1) j c_j``.
    """
    c = [ring.one()] + [ring.gen(f"c{i}") if f"c{i}" in ring.names else ring.zero() for i in range(1, n + 1)]
    s = [ring(n)]  # s_0 is the rank; unused by callers
    for j in range(1, n + 1):
        acc = c[j] * ((-1) ** (j - 1) * j)
        for i in range(1, j):
            acc = acc + c[i] * s[j - i] * (-1) ** (i - 1)
        s.append(acc)
    return s


def todd_class(ring: GradedRing) -> GradedElement:
    """Total Todd class ``1 + td_1 + ... + td_n`` in a ring with generators c1..cn.

    log td = c1/2 - sum_{k>=1} B_{2k} / (2k (2k)!) * s_{2k}, then exponentiated.
    """
    n = ring.bound
    s = power_sums(ring, n)
    log_td = s[1] * Fraction(1, 2) if n >= 1 else ring.zero()
    for k in range(1, n // 2 + 1):
        log_td = log_td - s[2 * k] * (bernoulli(2 * k) / (2 * k * factorial(2 * k)))
    return exp_nilpotent(log_td)


def todd_universal(n: int) -> list[GradedElement]:
    """Homogeneous Todd polynomials td_1..td_n in c1..cn."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    td = todd_class(GradedRing.chern(n))
    return [td.component(k) for k in range(1, n + 1)]


def todd_abstract(n: int) -> GradedElement:
    """``1 + d1 + ... + dn`` with ``d_i`` a free generator of degree i."""
    ring = GradedRing.from_pairs([(f"d{i}", i) for i in range(1, n + 1)], n)
    return sum(ring.gens(), ring.one())


def todd_line(c1: GradedElement) -> GradedElement:
    """Todd class ``c1/(1-e^{-c1})`` of a line bundle with first Chern class ``c1``."""
    _require_degree_one(c1)
    result = c1.ring.zero()
    power = c1.ring.one()
    for coeff in todd_line_coefficients(c1.bound):
        result = result + power * coeff
        power = power * c1
    return result


def _require_degree_one(c1: GradedElement):
    if not c1.is_homogeneous(1):
        raise StructureError(f"expected a homogeneous degree-1 class, got {c1!r}")


def chern_character_line(c1: GradedElement) -> GradedElement:
    """``exp(c1)``, truncated at the ring's bound."""
    _require_degree_one(c1)
    return exp_nilpotent(c1)


def dual(ch: GradedElement) -> GradedElement:
    return ch.scale_degrees(-1)


def end_character(ch: GradedElement) -> GradedElement:
    """Chern character of ``E (x) E^*`` given ``ch(E)``."""
    return ch * dual(ch)


def adams(q, x: GradedElement) -> GradedElement:
    """Adams operation: scale the degree-i part by ``q**i``."""
    q = to_fraction(q)
    if not q:
        raise ValueError("Adams operation needs q != 0")
    return x.scale_degrees(q)


def adams_inverse(q, x: GradedElement) -> GradedElement:
    q = to_fraction(q)
    if not q:
        raise ValueError("Adams operation needs q != 0")
    return x.scale_degrees(1 / q)
