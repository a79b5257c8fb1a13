"""Golden checks of every published formula and value this package reproduces.

Each check recomputes a value through the engine and compares it with the
closed expression it is supposed to match.  :func:`run_checks` is what the
``verify`` command prints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .catalog import (
    del_pezzo_closed_poly,
    del_pezzo_spec,
    fano3_closed_poly,
    fano3_spec,
    pn_multiplicities,
    restriction_defect,
)
from .chow import GradedRing, integrate, invert
from .classes import adams_inverse, chern_character_line, dual, end_character, todd_abstract, todd_universal
from .diffop import verify_paper_example
from .frobpush import FrobParams, chi_frob_end, chi_symbolic, frob_end_ch, pushforward_ch

SAMPLE_Q = (Fraction(2), Fraction(3), Fraction(5), Fraction(7, 3))


@dataclass
class CheckResult:
    name: str
    claim: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim, "passed": self.passed, "detail": self.detail}


def _todd_low_degrees() -> tuple[bool, str]:
    R = GradedRing.chern(3)
    c1, c2, _ = R.gens()
    td = todd_universal(3)
    want = [c1 / 2, (c1 * c1 + c2) / 12, c1 * c2 / 24]
    return td == want, f"td_1..td_3 = {td}"


def _inverse_todd() -> tuple[bool, str]:
    td = todd_abstract(3)
    d1, d2, d3 = td.ring.gens()
    got = invert(td)
    # the printed expansion stops at 2 d2 d1 - d1^3; the degree-3 part also carries -d3
    ok = got.truncate(2) == (1 - d1 + (d1 * d1 - d2)).truncate(2)
    ok &= got.component(3) == 2 * d2 * d1 - d1**3 - d3
    return ok, f"1/td = {got}"


def _adams_inverse_todd() -> tuple[bool, str]:
    td = todd_abstract(3)
    d1, d2, d3 = td.ring.gens()
    return all(
        adams_inverse(q, td) == 1 + d1 / q + d2 / q**2 + d3 / q**3 for q in SAMPLE_Q
    ), "psi_q^{-1}(1+d1+d2+d3) = 1 + d1/q + d2/q^2 + d3/q^3"


def _product_expansion() -> tuple[bool, str]:
    ok = True
    for n in (2, 3, 4):
        td = todd_abstract(n)
        d1, d2 = td.ring.gen("d1"), td.ring.gen("d2")
        for q in SAMPLE_Q:
            prod = (adams_inverse(q, td) * invert(td)).truncate(2)
            r = prod.ring
            want = r.one() + (1 / q - 1) * r.gen("d1") + ((1 / q**2 - 1) * r.gen("d2") - (1 / q - 1) * r.gen("d1") ** 2)
            ok &= prod == want
    return ok, "psi^{-1}(td)/td = 1 + (q^-1 - 1) d1 + (q^-2 - 1) d2 - (q^-1 - 1) d1^2 + ..."


def _pushforward_display() -> tuple[bool, str]:
    ok = True
    for n in (2, 3, 4):
        td = todd_abstract(n)
        for q in SAMPLE_Q:
            ch = pushforward_ch(td.ring.one(), td, q, n).truncate(2)
            r = ch.ring
            d1, d2 = r.gen("d1"), r.gen("d2")
            want = q**n + (q ** (n - 1) - q**n) * d1 + ((q ** (n - 2) - q**n) * d2 - (q ** (n - 1) - q**n) * d1 * d1)
            ok &= ch == want
    return ok, "ch(F_* O) = q^n + (q^(n-1) - q^n) d1 + (q^(n-2) - q^n) d2 - (q^(n-1) - q^n) d1^2 + ..."


def _end_character_formula() -> tuple[bool, str]:
    R = GradedRing.from_pairs([("x1", 1), ("x2", 2), ("x3", 3)], 3)
    x1, x2, x3 = R.gens()
    ch0 = Fraction(5)
    end = end_character(ch0 + x1 + x2 + x3)
    ok = end.component(0) == ch0**2 and end.component(2) == 2 * x2 * ch0 - x1 * x1
    ok &= end.component(1).is_zero() and end.component(3).is_zero()
    return ok, "ch(End E) = ch_0^2 + (2 ch_2 ch_0 - ch_1^2) + ..., odd degrees vanish"


def _frob_end_degree_two() -> tuple[bool, str]:
    ok = True
    for n in (2, 3, 4):
        td = todd_abstract(n)
        d1, d2 = td.ring.gen("d1"), td.ring.gen("d2")
        for q in SAMPLE_Q:
            end = frob_end_ch(td, q, n)
            ok &= end.component(0) == q ** (2 * n)
            ok &= end.component(2) == (q ** (2 * (n - 1)) - q ** (2 * n)) * (2 * d2 - d1 * d1)
            ok &= all(end.component(k).is_zero() for k in range(1, n + 1, 2))
    return ok, "ch(End F_* O) = q^(2n) + (q^(2(n-1)) - q^(2n))(2 d2 - d1^2) + ..., odd terms 0"


def _del_pezzo_todd_numbers() -> tuple[bool, str]:
    ok = True
    for d in range(1, 10):
        v = del_pezzo_spec(d)
        td = v.todd()
        d1, d2 = td.component(1), td.component(2)
        ok &= integrate(d1 * d1, v.table) == Fraction(d, 4)
        ok &= integrate(d2, v.table) == 1
        ok &= integrate(2 * d2 - d1 * d1, v.table) == 2 - Fraction(d, 4)
    return ok, "del Pezzo of degree d: d1^2 = d/4, d2 = 1, 2 d2 - d1^2 = 2 - d/4"


def _fano_todd_numbers() -> tuple[bool, str]:
    ok = True
    for vol in range(2, 66, 2):
        v = fano3_spec(vol)
        td = v.todd()
        d1, d2, d3 = (td.component(k) for k in (1, 2, 3))
        ok &= integrate(d1**3, v.table) == Fraction(vol, 8)
        ok &= integrate(d2 * d1, v.table) == Fraction(vol, 24) + 1
        ok &= integrate(d3, v.table) == 1
        ok &= integrate((2 * d2 - d1 * d1) * d1, v.table) == Fraction(48 - vol, 24)
    return ok, "Fano threefold: d1^3 = vol/8, d2 d1 = vol/24 + 1, d3 = 1, (2 d2 - d1^2) d1 = (48 - vol)/24"


def _del_pezzo_closed() -> tuple[bool, str]:
    bad = [d for d in range(1, 10) if chi_symbolic(del_pezzo_spec(d)) != del_pezzo_closed_poly(d)]
    return not bad, f"mismatching degrees: {bad}" if bad else "all d in 1..9"


def _fano_closed() -> tuple[bool, str]:
    bad = [v for v in range(2, 66, 2) if chi_symbolic(fano3_spec(v)) != fano3_closed_poly(v)]
    return not bad, f"mismatching volumes: {bad}" if bad else "all even vol in 2..64"


def _cubic_p2() -> tuple[bool, str]:
    chi = chi_frob_end(del_pezzo_spec(3), FrobParams(2, 1))
    return chi == 1, f"chi = {chi}"


def _degree_four() -> tuple[bool, str]:
    v = del_pezzo_spec(4)
    bad = [(p, e) for p in (2, 3, 5, 7) for e in (1, 2, 3) if chi_frob_end(v, FrobParams(p, e)) != p ** (2 * e)]
    return not bad, f"failures at {bad}" if bad else "p in {2,3,5,7}, e in {1,2,3}"


def _negativity() -> tuple[bool, str]:
    bad = []
    for d in (1, 2, 3):
        v = del_pezzo_spec(d)
        for p in (2, 3, 5, 7):
            for e in (1, 2, 3):
                chi = chi_frob_end(v, FrobParams(p, e))
                if (p, e) == (2, 1):
                    if d <= 2 and chi > 0:
                        bad.append((d, p, e, chi))
                elif chi >= 0:
                    bad.append((d, p, e, chi))
    return not bad, f"violations {bad}" if bad else "d <= 3"


def _leading_sign() -> tuple[bool, str]:
    ok = all((chi_symbolic(del_pezzo_spec(d)).leading() < 0) == (d < 4) for d in range(1, 10))
    ok &= all((chi_symbolic(fano3_spec(v)).leading() < 0) == (v < 24) for v in range(2, 66, 2))
    return ok, "negative exactly for d < 4 and for vol < 24"


def _line_bundle_dual() -> tuple[bool, str]:
    R = GradedRing.from_pairs([("H", 1)], 2)
    H = R.gen("H")
    ch = chern_character_line(H)
    return ch == 1 + H + H * H / 2 and dual(ch) == 1 - H + H * H / 2, "ch(L) = e^c1, ch_i(L^*) = (-1)^i ch_i(L)"


def _restriction() -> tuple[bool, str]:
    bad = [(n, m) for n in range(1, 6) for m in range(0, 51) if restriction_defect(n, m, m + 2).surjective_possible]
    return not bad, "H^0(O(m)) -> O/m^(m+2) never surjective (dimension count, n <= 5, m <= 50)"


def _p2_splitting() -> tuple[bool, str]:
    got = {q: pn_multiplicities(p, e) for q, (p, e) in {2: (2, 1), 3: (3, 1), 4: (2, 2), 9: (3, 2)}.items()}
    return all(b == (q - 1) * (q - 2) // 2 for q, (_, b) in got.items()), f"(a, b) = {got}"


def _diffop() -> tuple[bool, str]:
    report = verify_paper_example(2)
    return report.passed, "; ".join(f"{c.name}: {'ok' if c.passed else 'FAIL'}" for c in report.checks)


CHECKS: list[tuple[str, str, Callable[[], tuple[bool, str]]]] = [
    ("todd-low-degrees", "td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24 + ...", _todd_low_degrees),
    ("inverse-todd", "1/td = 1 - d1 + (d1^2 - d2) + (2 d2 d1 - d1^3 - d3) + ...", _inverse_todd),
    ("adams-inverse-todd", "inverse Adams operation scales degree i by q^-i", _adams_inverse_todd),
    ("pushforward-product", "expansion of psi^{-1}(td)/td", _product_expansion),
    ("pushforward-ch", "Chern character of the Frobenius pushforward of O", _pushforward_display),
    ("end-character", "Chern character of an endomorphism bundle", _end_character_formula),
    ("end-frobenius", "ch(End F_* O) through degree 2", _frob_end_degree_two),
    ("del-pezzo-todd", "Todd numbers of del Pezzo surfaces", _del_pezzo_todd_numbers),
    ("del-pezzo-closed-form", "chi = q^4 (d-4)/4 + q^2 (8-d)/4", _del_pezzo_closed),
    ("cubic-p2", "degree 3, p = 2, e = 1: chi(End F_* O) = 1", _cubic_p2),
    ("degree-four", "degree 4: chi = p^(2e) > 0", _degree_four),
    ("del-pezzo-negative", "d <= 3, (p,e) != (2,1): chi < 0; d <= 2 at (2,1): chi <= 0", _negativity),
    ("fano-todd", "Todd numbers of Fano threefolds", _fano_todd_numbers),
    ("fano-closed-form", "chi = q^6 (vol-24)/24 + q^4 (48-vol)/24", _fano_closed),
    ("leading-sign", "leading term negative exactly below the thresholds", _leading_sign),
    ("line-bundle-dual", "Chern character of a line bundle and its dual", _line_bundle_dual),
    ("restriction-never-surjective", "H^0(O(m)) -> O_{(m+2)x} is never surjective", _restriction),
    ("p2-splitting", "F_* O_{P^2} = O + O(-1)^a + O(-2)^b", _p2_splitting),
    ("diffop-i-neq-j", "natural inclusion and split embedding of d/dt differ (p = 2)", _diffop),
]


def run_checks() -> list[CheckResult]:
    out = []
    for name, claim, fn in CHECKS:
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, claim, bool(passed), detail))
    return out
