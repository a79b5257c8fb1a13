"""Truncated graded polynomial rings over the rationals.

A :class:`GradedRing` is the free commutative algebra on a finite set of
graded generators, truncated above a fixed degree ``n``.  Nothing is known
about the ring except the top-degree intersection numbers held in an
:class:`IntersectionTable`, which is enough for Riemann-Roch style integrals.

    >>> R = GradedRing.from_pairs([("d1", 1), ("d2", 2)], 2)
    >>> d1, d2 = R.gen("d1"), R.gen("d2")
    >>> (1 + d1) * (1 - d1)
    1 - d1^2
    >>> table = IntersectionTable(R, {R.monomial(d2=1): 1, R.monomial(d1=2): Fraction(3, 4)})
    >>> integrate(d2 - d1 * d1, table)
    Fraction(1, 4)
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from numbers import Rational
from typing import Iterable, Mapping

Monomial = tuple[int, ...]


class StructureError(ValueError):
    """Operands live in different rings, or an element has the wrong shape."""


class NotInvertibleError(ZeroDivisionError):
    pass


class MissingIntersectionError(KeyError):
    """A top-degree monomial was needed but the table has no value for it."""

    def __init__(self, monomial: str):
        super().__init__(monomial)
        self.monomial = monomial

    def __str__(self):
        return f"missing intersection number for {self.monomial}"


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _common_denominator(values) -> int:
    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    return den


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise StructureError(f"generator {self.name!r} must have degree >= 1")


def _name_key(g: Generator):
    # natural order so that c2 sorts before c10
    m = re.fullmatch(r"(.*?)(\d*)", g.name)
    return (m.group(1), int(m.group(2) or 0), g.name)


@dataclass(frozen=True)
class GradedRing:
    """Free graded algebra on ``generators`` with everything above ``bound`` discarded."""

    generators: tuple[Generator, ...]
    bound: int

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise StructureError(f"duplicate generator names in {names}")
        if self.bound < 0:
            raise StructureError("truncation bound must be non-negative")
        # graded lex on names: sort generators once so monomials are canonical
        ordered = tuple(sorted(self.generators, key=_name_key))
        if ordered != self.generators:
            object.__setattr__(self, "generators", ordered)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]], bound: int) -> GradedRing:
        return cls(tuple(Generator(n, d) for n, d in pairs), bound)

    @classmethod
    def chern(cls, n: int, bound: int | None = None) -> GradedRing:
        """Ring on Chern-class generators c1..cn."""
        return cls.from_pairs([(f"c{i}", i) for i in range(1, n + 1)], n if bound is None else bound)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureError(f"no generator named {name!r}") from None

    def degree(self, mono: Monomial) -> int:
        return sum(a * g.degree for a, g in zip(mono, self.generators))

    def monomial(self, **exponents: int) -> Monomial:
        mono = [0] * len(self.generators)
        for name, a in exponents.items():
            if a < 0:
                raise StructureError("exponents must be non-negative")
            mono[self.index(name)] = a
        return tuple(mono)

    def monomials(self, degree: int) -> list[Monomial]:
        """All monomials of exactly the given total degree, in canonical order."""
        out: list[Monomial] = []

        def rec(i: int, left: int, acc: list[int]):
            if i == len(self.generators):
                if left == 0:
                    out.append(tuple(acc))
                return
            g = self.generators[i]
            for a in range(left // g.degree, -1, -1):
                rec(i + 1, left - a * g.degree, acc + [a])

        rec(0, degree, [])
        return out

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for a, name in zip(mono, self.names):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"

    def parse_monomial(self, text: str) -> Monomial:
        """Inverse of :meth:`format_monomial`, e.g. ``"c1^2*c2"``."""
        text = text.strip()
        mono = [0] * len(self.generators)
        if text == "1":
            return tuple(mono)
        for factor in text.split("*"):
            name, _, exp = factor.strip().partition("^")
            mono[self.index(name.strip())] += int(exp) if exp else 1
        return tuple(mono)

    def element(self, terms: Mapping[Monomial, object] | None = None) -> GradedElement:
        return GradedElement(self, terms or {})

    def __call__(self, c) -> GradedElement:
        """The constant ``c`` as an element of this ring."""
        return GradedElement(self, {self.one_monomial: to_fraction(c)})

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def one(self) -> GradedElement:
        return self(1)

    def zero(self) -> GradedElement:
        return GradedElement(self, {})

    def gen(self, name: str) -> GradedElement:
        return GradedElement(self, {self.monomial(**{name: 1}): Fraction(1)})

    def gens(self) -> tuple[GradedElement, ...]:
        return tuple(self.gen(n) for n in self.names)

    def truncated(self, bound: int) -> GradedRing:
        return GradedRing(self.generators, bound)

    def to_json(self) -> list[dict]:
        return [{"name": g.name, "degree": g.degree} for g in self.generators]


class GradedElement:
    """Immutable element of a :class:`GradedRing`.

    Terms of degree above the ring's bound are dropped on construction, so
    every arithmetic result is silently truncated.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: GradedRing, terms: Mapping[Monomial, object]):
        clean: dict[Monomial, Fraction] = {}
        width = len(ring.generators)
        for mono, c in terms.items():
            if len(mono) != width or any(a < 0 for a in mono):
                raise StructureError(f"bad monomial {mono!r} for ring {ring.names}")
            c = to_fraction(c)
            if c and ring.degree(mono) <= ring.bound:
                clean[tuple(mono)] = c
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: GradedRing, terms: dict[Monomial, Fraction]) -> GradedElement:
        # trusted constructor: terms already clean and in range
        self = object.__new__(cls)
        self.ring = ring
        self._terms = terms
        self._hash = None
        return self

    # -- inspection ----------------------------------------------------

    @property
    def bound(self) -> int:
        return self.ring.bound

    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def component(self, k: int) -> GradedElement:
        deg = self.ring.degree
        return GradedElement._raw(self.ring, {m: c for m, c in self._terms.items() if deg(m) == k})

    def components(self) -> list[GradedElement]:
        return [self.component(k) for k in range(self.bound + 1)]

    def constant(self) -> Fraction:
        return self._terms.get(self.ring.one_monomial, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self, k: int) -> bool:
        return all(self.ring.degree(m) == k for m in self._terms)

    def truncate(self, bound: int) -> GradedElement:
        """Re-express in the same generators with a smaller truncation bound."""
        if bound > self.bound:
            raise StructureError("cannot raise the truncation bound of an element")
        return GradedElement(self.ring.truncated(bound), self._terms)

    def scale_degrees(self, factor) -> GradedElement:
        """Multiply the degree-k component by ``factor**k``."""
        factor = to_fraction(factor)
        deg = self.ring.degree
        return GradedElement(self.ring, {m: c * factor ** deg(m) for m, c in self._terms.items()})

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> GradedElement:
        if isinstance(other, GradedElement):
            if other.ring != self.ring:
                raise StructureError(
                    f"ring mismatch: {self.ring.names}/n={self.bound} vs {other.ring.names}/n={other.bound}"
                )
            return other
        return self.ring(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return GradedElement._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedElement._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GradedElement):
            try:
                c = to_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return self.ring.zero()
            return GradedElement._raw(self.ring, {m: v * c for m, v in self._terms.items()})
        other = self._coerce(other)
        ring = self.ring
        degs = [g.degree for g in ring.generators]
        n = ring.bound
        # integer numerators over a common denominator; normalise once per output term
        den1 = _common_denominator(self._terms.values())
        den2 = _common_denominator(other._terms.values())
        right = [
            (m, c.numerator * (den2 // c.denominator), sum(a * d for a, d in zip(m, degs)))
            for m, c in other._terms.items()
        ]
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            k1 = sum(a * d for a, d in zip(m1, degs))
            i1 = c1.numerator * (den1 // c1.denominator)
            for m2, i2, k2 in right:
                if k1 + k2 > n:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + i1 * i2
        den = den1 * den2
        return GradedElement._raw(ring, {m: Fraction(c, den) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GradedElement):
            return self * invert(other)
        return self * (1 / to_fraction(other))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GradedElement):
            return self.ring == other.ring and self._terms == other._terms
        try:
            return self == self.ring(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- display / serialization ----------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        deg = self.ring.degree
        return sorted(self._terms.items(), key=lambda mc: (deg(mc[0]), tuple(-a for a in mc[0])))

    def __repr__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            c = abs(c)
            name = self.ring.format_monomial(m)
            if name == "1":
                body = str(c)
            elif c == 1:
                body = name
            else:
                body = f"{c}*{name}"
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_json(self) -> dict:
        components = []
        for k in range(self.bound + 1):
            comp = self.component(k)
            components.append(
                [
                    {
                        "monomial": {n: a for n, a in zip(self.ring.names, m) if a},
                        "coeff": format_fraction(c),
                    }
                    for m, c in comp.sorted_terms()
                ]
            )
        return {"generators": self.ring.to_json(), "bound": self.bound, "components": components}

    @classmethod
    def from_json(cls, data: Mapping) -> GradedElement:
        ring = GradedRing.from_pairs(((g["name"], int(g["degree"])) for g in data["generators"]), int(data["bound"]))
        terms: dict[Monomial, Fraction] = {}
        for k, comp in enumerate(data["components"]):
            for term in comp:
                m = ring.monomial(**term["monomial"])
                if ring.degree(m) != k:
                    raise StructureError(f"monomial {term['monomial']} listed in degree {k}")
                terms[m] = terms.get(m, 0) + Fraction(term["coeff"])
        return cls(ring, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class IntersectionTable:
    """Top-degree intersection numbers: monomials of degree ``ring.bound`` to rationals."""

    __slots__ = ("ring", "_values")

    def __init__(self, ring: GradedRing, values: Mapping[Monomial, object]):
        vals: dict[Monomial, Fraction] = {}
        for mono, v in values.items():
            if isinstance(mono, str):
                mono = ring.parse_monomial(mono)
            mono = tuple(mono)
            if len(mono) != len(ring.generators) or ring.degree(mono) != ring.bound:
                raise StructureError(
                    f"intersection key {ring.format_monomial(mono)} does not have degree {ring.bound}"
                )
            vals[mono] = to_fraction(v)
        self.ring = ring
        self._values = vals

    def __getitem__(self, mono: Monomial | str) -> Fraction:
        if isinstance(mono, str):
            mono = self.ring.parse_monomial(mono)
        try:
            return self._values[tuple(mono)]
        except KeyError:
            raise MissingIntersectionError(self.ring.format_monomial(mono)) from None

    def __contains__(self, mono) -> bool:
        if isinstance(mono, str):
            mono = self.ring.parse_monomial(mono)
        return tuple(mono) in self._values

    def items(self):
        return self._values.items()

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        if not isinstance(other, IntersectionTable):
            return NotImplemented
        return self.ring == other.ring and self._values == other._values

    def __hash__(self):
        return hash((self.ring, frozenset(self._values.items())))

    def __repr__(self):
        body = ", ".join(f"{self.ring.format_monomial(m)}: {v}" for m, v in sorted(self._values.items(), reverse=True))
        return f"IntersectionTable({{{body}}})"

    def to_json(self) -> dict:
        return {
            "generators": self.ring.to_json(),
            "bound": self.ring.bound,
            "entries": [
                {"monomial": {n: a for n, a in zip(self.ring.names, m) if a}, "coeff": format_fraction(v)}
                for m, v in sorted(self._values.items(), reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> IntersectionTable:
        ring = GradedRing.from_pairs(((g["name"], int(g["degree"])) for g in data["generators"]), int(data["bound"]))
        return cls(ring, {ring.monomial(**e["monomial"]): Fraction(e["coeff"]) for e in data["entries"]})


def add(a: GradedElement, b: GradedElement) -> GradedElement:
    return a + a._coerce(b)


def multiply(a: GradedElement, b: GradedElement) -> GradedElement:
    return a * a._coerce(b)


@lru_cache(maxsize=256)
def invert(a: GradedElement) -> GradedElement:
    """Inverse of an element with non-zero constant term.

    Uses the recursion ``b_k = -(1/a_0) * sum_{i=1..k} a_i b_{k-i}`` on
    homogeneous components.
    """
    a0 = a.constant()
    if not a0:
        raise NotInvertibleError(f"constant term of {a!r} is zero")
    ring = a.ring
    parts = a.components()
    inv0 = 1 / a0
    out = [ring(inv0)]
    for k in range(1, ring.bound + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            if not parts[i].is_zero() and not out[k - i].is_zero():
                acc = acc + parts[i] * out[k - i]
        out.append(acc * (-inv0))
    return sum(out[1:], out[0])


def exp_nilpotent(x: GradedElement) -> GradedElement:
    """Truncated exponential of an element with zero constant term."""
    if x.constant():
        raise StructureError("exp_nilpotent needs zero constant term")
    result = x.ring.one()
    term = x.ring.one()
    for k in range(1, x.bound + 1):
        term = term * x * Fraction(1, k)
        if term.is_zero():
            break
        result = result + term
    return result


def log_unipotent(x: GradedElement) -> GradedElement:
    """Truncated logarithm of an element with constant term 1."""
    if x.constant() != 1:
        raise StructureError("log_unipotent needs constant term 1")
    y = x - 1
    result = x.ring.zero()
    power = x.ring.one()
    for k in range(1, x.bound + 1):
        power = power * y
        if power.is_zero():
            break
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


def integrate(a: GradedElement, table: IntersectionTable) -> Fraction:
    """Evaluate the top-degree component of ``a`` against ``table``.

    Lower-degree parts are ignored.  Only monomials that actually occur with
    a non-zero coefficient are looked up, so a table may omit numbers the
    integrand never needs.
    """
    if a.ring != table.ring:
        raise StructureError(
            f"element ring {a.ring.names}/n={a.bound} does not match table ring "
            f"{table.ring.names}/n={table.ring.bound}"
        )
    n = a.bound
    total = Fraction(0)
    for m, c in a.component(n).sorted_terms():
        total += c * table[m]
    return total
