"""Preset varieties, closed-form Euler characteristics and tilting verdicts.

Presets only record what the Euler-characteristic computation needs:

* del Pezzo surface of degree d: ``c1^2 = d`` and ``c2 = 12 - d`` (Noether,
  chi(O) = 1);
* Fano threefold with anticanonical volume ``vol = (-K)^3``: ``c1^3 = vol``
  and ``c1 c2 = 24`` (chi(O) = 1).  ``c3`` is left out on purpose;
* projective space: ``c_i = C(n+1, i) H^i`` with ``H^n = 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, prod

from .chow import GradedElement, GradedRing, IntersectionTable, format_fraction
from .classes import todd_class, todd_line
from .frobpush import FrobParams, QPolynomial, pushforward_ch


class InconsistentDataError(ValueError):
    pass


@dataclass(frozen=True)
class VarietySpec:
    name: str
    dim: int
    table: IntersectionTable
    family: str | None = None
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.table.ring.bound != self.dim:
            raise InconsistentDataError(f"table has degree {self.table.ring.bound}, dimension is {self.dim}")

    @property
    def ring(self) -> GradedRing:
        return self.table.ring

    @cached_property
    def _todd(self) -> GradedElement:
        return todd_class(self.ring)

    def todd(self) -> GradedElement:
        return self._todd

    def param(self, key: str) -> int:
        return dict(self.params)[key]

    def to_json(self) -> dict:
        """The spec-file form: ``{name, dim, generators, intersections, family?}``."""
        data = {
            "name": self.name,
            "dim": self.dim,
            "generators": self.ring.to_json(),
            "intersections": {
                self.ring.format_monomial(m): format_fraction(v) for m, v in sorted(self.table.items(), reverse=True)
            },
        }
        if self.family:
            data["family"] = {"kind": self.family, "params": dict(self.params)}
        return data

    @classmethod
    def from_json(cls, data: dict) -> VarietySpec:
        dim = int(data["dim"])
        ring = GradedRing.from_pairs(((g["name"], int(g["degree"])) for g in data["generators"]), dim)
        table = IntersectionTable(ring, {ring.parse_monomial(k): Fraction(v) for k, v in data["intersections"].items()})
        fam = data.get("family")
        kind = fam["kind"] if fam else None
        params = tuple(sorted((k, int(v)) for k, v in fam.get("params", {}).items())) if fam else ()
        spec = cls(str(data.get("name", "unnamed")), dim, table, kind, params)
        _check_family(spec)
        return spec


def _check_family(spec: VarietySpec):
    if spec.family is None:
        return
    builders = {"del_pezzo": ("d", del_pezzo_spec), "fano3": ("vol", fano3_spec), "pn": ("n", pn_spec)}
    if spec.family not in builders:
        raise InconsistentDataError(f"unknown family kind {spec.family!r}")
    key, build = builders[spec.family]
    ref = build(spec.param(key))
    if ref.table != spec.table:
        raise InconsistentDataError(f"intersection numbers do not match family {spec.family} with {key}={spec.param(key)}")


def del_pezzo_spec(d: int) -> VarietySpec:
    if not 1 <= d <= 9:
        raise ValueError(f"del Pezzo degree must be in 1..9, got {d}")
    ring = GradedRing.chern(2)
    table = IntersectionTable(ring, {"c1^2": d, "c2": 12 - d})
    return VarietySpec(f"del Pezzo surface of degree {d}", 2, table, "del_pezzo", (("d", d),))


def fano3_spec(vol: int) -> VarietySpec:
    """Fano threefold with ``(-K)^3 = vol``; ``chi(O_X) = 1`` is assumed via ``c1 c2 = 24``."""
    if vol < 2:
        raise ValueError(f"anticanonical volume must be >= 2, got {vol}")
    ring = GradedRing.chern(3)
    table = IntersectionTable(ring, {"c1^3": vol, "c1*c2": 24})
    return VarietySpec(f"Fano threefold with (-K)^3 = {vol}", 3, table, "fano3", (("vol", vol),))


def pn_spec(n: int) -> VarietySpec:
    if n < 1:
        raise ValueError("n must be >= 1")
    ring = GradedRing.chern(n)
    table = IntersectionTable(
        ring, {m: prod(comb(n + 1, g.degree) ** a for a, g in zip(m, ring.generators)) for m in ring.monomials(n)}
    )
    return VarietySpec(f"P^{n}", n, table, "pn", (("n", n),))


def projective_space_hyperplane(n: int) -> tuple[GradedElement, GradedElement]:
    """``(H, td(P^n))`` in the ring generated by the hyperplane class ``H``."""
    ring = GradedRing.from_pairs([("H", 1)], n)
    h = ring.gen("H")
    return h, todd_line(h) ** (n + 1)


def del_pezzo_closed_poly(d: int) -> QPolynomial:
    return QPolynomial([0, 0, Fraction(8 - d, 4), 0, Fraction(d - 4, 4)])


def fano3_closed_poly(vol: int) -> QPolynomial:
    return QPolynomial([0, 0, 0, 0, Fraction(48 - vol, 24), 0, Fraction(vol - 24, 24)])


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise InconsistentDataError(f"closed form gave non-integer {x}")
    return x.numerator


def chi_del_pezzo_closed(d: int, p: int, e: int) -> int:
    if not 1 <= d <= 9:
        raise ValueError(f"del Pezzo degree must be in 1..9, got {d}")
    return _as_int(del_pezzo_closed_poly(d)(FrobParams(p, e).q))


def chi_fano3_closed(vol: int, p: int, e: int) -> int:
    if vol < 2:
        raise ValueError(f"anticanonical volume must be >= 2, got {vol}")
    return _as_int(fano3_closed_poly(vol)(FrobParams(p, e).q))


def closed_form_chi(spec: VarietySpec, fp: FrobParams) -> int | None:
    """Closed-form value for catalog families that have one, else None."""
    if spec.family == "del_pezzo":
        return chi_del_pezzo_closed(spec.param("d"), fp.p, fp.e)
    if spec.family == "fano3":
        return chi_fano3_closed(spec.param("vol"), fp.p, fp.e)
    return None


class Verdict(enum.Enum):
    HigherCohomologyNonzero = "HigherCohomologyNonzero"
    HigherCohomologyNonzeroGivenH0Bound = "HigherCohomologyNonzeroGivenH0Bound"
    Inconclusive = "Inconclusive"


@dataclass(frozen=True)
class TiltingVerdict:
    chi: int
    h0_lower_bound: int
    verdict: Verdict
    rationale: str

    def to_json(self) -> dict:
        return {
            "chi": self.chi,
            "h0_lower_bound": self.h0_lower_bound,
            "verdict": self.verdict.value,
            "rationale": self.rationale,
        }


def tilting_verdict(chi: int, h0_lower_bound: int = 1) -> TiltingVerdict:
    """Decide what ``chi(End E)`` says about higher self-Ext of ``E``.

    With ``h^0 >= b`` and ``chi < b`` the alternating sum forces some odd
    ``h^i`` with ``i > 0`` to be non-zero.  ``b = 1`` always holds because the
    identity is a global section.
    """
    if h0_lower_bound < 1:
        raise ValueError("h0 lower bound must be at least 1 (the identity is a section)")
    if chi <= 0:
        return TiltingVerdict(
            chi,
            h0_lower_bound,
            Verdict.HigherCohomologyNonzero,
            f"chi = {chi} <= 0 < 1 <= h^0 (identity section), so some H^i, i > 0, is non-zero",
        )
    if chi < h0_lower_bound:
        return TiltingVerdict(
            chi,
            h0_lower_bound,
            Verdict.HigherCohomologyNonzeroGivenH0Bound,
            f"chi = {chi} < {h0_lower_bound} <= h^0, so some H^i, i > 0, is non-zero",
        )
    return TiltingVerdict(
        chi,
        h0_lower_bound,
        Verdict.Inconclusive,
        f"chi = {chi} >= {h0_lower_bound}; Euler characteristic alone does not detect higher cohomology",
    )


def h0_lower_bound(spec: VarietySpec, fp: FrobParams) -> tuple[int, str]:
    """Known lower bound on ``h^0(End F^e_* O_X)`` and where it comes from."""
    if spec.family == "del_pezzo" and spec.param("d") == 3 and fp.q == 2:
        return 2, (
            "cubic surface, p=2, e=1: F-split cubics have several indecomposable summands in F_*O "
            "(idempotent sections), and h^0 is upper semicontinuous in families"
        )
    return 1, "identity endomorphism"


def hilbert_multiplicities(q: int) -> tuple[int, int, int]:
    """Multiplicities of O, O(-1), O(-2) in ``F^e_* O_{P^2}`` from Hilbert functions.

    Uses ``h^0(F^e_* O(t)) = h^0(O(t q))`` for t = 0, 1, 2 to solve and t = 3
    to check.
    """

    def h0(m: int) -> int:
        return comb(m + 2, 2) if m >= 0 else 0

    mult = [0, 0, 0]
    for t in range(3):
        known = sum(mult[j] * h0(t - j) for j in range(t))
        mult[t] = h0(t * q) - known  # h0(O(0)) = 1 for the new summand
    if sum(mult[j] * h0(3 - j) for j in range(3)) != h0(3 * q):
        raise InconsistentDataError(f"Hilbert functions at q={q} are not those of O + O(-1)^a + O(-2)^b")
    return mult[0], mult[1], mult[2]


def pn_multiplicities(p: int, e: int) -> tuple[int, int]:
    """``(a, b)`` with ``F^e_* O_{P^2} = O + O(-1)^a + O(-2)^b``.

    Solved from rank and ``c_1`` of the pushforward Chern character, then
    checked against :func:`hilbert_multiplicities`.
    """
    q = FrobParams(p, e).q
    h, td = projective_space_hyperplane(2)
    ch = pushforward_ch(h.ring.one(), td, q, 2)
    rank = ch.constant()
    c1 = ch.coefficient(h.ring.monomial(H=1))
    # 1 + a + b = rank, a + 2b = -c1
    b = -c1 - (rank - 1)
    a = rank - 1 - b
    if a.denominator != 1 or b.denominator != 1 or a < 0 or b < 0:
        raise InconsistentDataError(f"no non-negative integer solution: a={a}, b={b}")
    a, b = a.numerator, b.numerator
    if hilbert_multiplicities(q) != (1, a, b):
        raise InconsistentDataError(
            f"Chern-character solution (1, {a}, {b}) disagrees with Hilbert functions {hilbert_multiplicities(q)}"
        )
    return a, b


@dataclass(frozen=True)
class RestrictionDefect:
    source_dim: int
    target_dim: int
    surjective_possible: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "surjective_possible", self.source_dim >= self.target_dim)

    def __iter__(self):
        return iter((self.source_dim, self.target_dim, self.surjective_possible))


def restriction_defect(n: int, m: int, k: int) -> RestrictionDefect:
    """Dimensions of ``H^0(P^n, O(m)) -> O_x / m_x^k``.

    The target has dimension ``C(k-1+n, n)``; surjectivity is impossible once it
    exceeds ``h^0(O(m)) = C(m+n, n)``, which happens for ``k = m + 2``.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    source = comb(m + n, n) if m >= 0 else 0
    return RestrictionDefect(source, comb(k - 1 + n, n))
