"""Chern characters of Frobenius pushforwards and Euler characteristics of their endomorphisms.

The pushforward of a class ``x`` along the ``e``-th Frobenius, with
``q = p**e``, is::

    ch(F^e_* x) = q**n * psi_q^{-1}(td(X) * x) / td(X)

and ``chi(End F^e_* O_X)`` follows by Riemann-Roch.  Everything is exact and
works for any non-zero rational ``q``; that is what lets :func:`chi_symbolic`
recover ``chi`` as a polynomial in ``q`` by interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence

from .chow import GradedElement, format_fraction, integrate, invert, to_fraction
from .classes import adams_inverse, end_character

if TYPE_CHECKING:
    from .catalog import VarietySpec


class NonIntegralEulerCharacteristic(ArithmeticError):
    """Riemann-Roch returned a non-integer: the intersection data is inconsistent."""


class InterpolationMismatch(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FrobParams:
    p: int
    e: int
    q: int = field(init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"e = {self.e} must be positive")
        object.__setattr__(self, "q", self.p**self.e)


def pushforward_ch(ch_e: GradedElement, td: GradedElement, q, n: int | None = None) -> GradedElement:
    """``q^n * psi_q^{-1}(td * ch_e) * td^{-1}``.

    For ``ch_e`` the character of a line bundle this is the Chern character of
    its ``e``-th Frobenius pushforward (``q = p^e``).  Other inputs get the
    linear extension of the same formula.
    """
    q = to_fraction(q)
    if n is None:
        n = td.bound
    if td.constant() != 1:
        raise ValueError("Todd class must have constant term 1")
    return adams_inverse(q, td * ch_e) * invert(td) * q**n


def frob_end_ch(td: GradedElement, q, n: int | None = None) -> GradedElement:
    """``ch(End F^e_* O_X)``; only even degrees survive."""
    return end_character(pushforward_ch(td.ring.one(), td, q, n))


def chi_end_at(v: VarietySpec, q) -> Fraction:
    """Riemann-Roch value of ``chi(End F_* O_X)`` at an arbitrary rational ``q``.

    No integrality check: this is the polynomial in ``q``, evaluated.
    """
    td = v.todd()
    return integrate(frob_end_ch(td, q, v.dim) * td, v.table)


def chi_frob_end(v: VarietySpec, fp: FrobParams) -> int:
    chi = chi_end_at(v, fp.q)
    if chi.denominator != 1:
        raise NonIntegralEulerCharacteristic(f"chi = {chi} for {v.name} at p={fp.p}, e={fp.e} is not an integer")
    return chi.numerator


class QPolynomial:
    """Polynomial in ``q`` with exact rational coefficients, lowest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q) -> Fraction:
        q = to_fraction(q)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: QPolynomial) -> QPolynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[k] + other[k] for k in range(m))

    def __mul__(self, other):
        if isinstance(other, QPolynomial):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return QPolynomial(out)
        c = to_fraction(other)
        return QPolynomial(a * c for a in self.coeffs)

    __rmul__ = __mul__

    def __str__(self):
        terms = []
        for k in reversed(self.support()):
            c = self.coeffs[k]
            if c == 1:
                cs = ""
            elif c.denominator == 1 and c > 0:
                cs = str(c)
            else:
                cs = f"({c})"
            if k == 0:
                terms.append(cs or "1")
            elif k == 1:
                terms.append(f"{cs}q")
            else:
                terms.append(f"{cs}q^{k}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"QPolynomial({[str(c) for c in self.coeffs]})"

    def to_json(self) -> list[str]:
        return [format_fraction(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> QPolynomial:
        return cls(Fraction(c) for c in data)


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> QPolynomial:
    """Unique polynomial of degree < len(points) through the given nodes."""
    xs = [to_fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = QPolynomial()
    for i, (xi, yi) in enumerate(points):
        basis = QPolynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * QPolynomial([-xj, 1])
                denom *= to_fraction(xi) - xj
        total = total + basis * (to_fraction(yi) / denom)
    return total


def chi_symbolic(v: VarietySpec) -> QPolynomial:
    """``chi(End F^e_* O_X)`` as an exact polynomial in ``q = p^e``.

    Interpolates through ``q = 2 .. 2n+2`` and re-checks at two further nodes.
    """
    n = v.dim
    nodes = range(2, 2 * n + 3)
    poly = lagrange_interpolate([(Fraction(q), chi_end_at(v, q)) for q in nodes])
    for q in (2 * n + 3, 2 * n + 4):
        direct = chi_end_at(v, q)
        if poly(q) != direct:
            raise InterpolationMismatch(f"interpolant gives {poly(q)} at q={q}, direct evaluation {direct}")
    return poly
