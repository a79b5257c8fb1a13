"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 bad intersection data (missing or inconsistent numbers).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from .catalog import (
    InconsistentDataError,
    VarietySpec,
    closed_form_chi,
    del_pezzo_spec,
    fano3_spec,
    h0_lower_bound,
    pn_spec,
    tilting_verdict,
)
from .chow import MissingIntersectionError, StructureError
from .diffop import verify_paper_example
from .frobpush import FrobParams, NonIntegralEulerCharacteristic, chi_frob_end, chi_symbolic
from .reproduce import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> list[int]:
    """``"1..9"``, ``"2..24:2"``, ``"2,3,5"`` or a mix: ``"1..3,7"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            rng, _, step = part.partition(":")
            lo, hi = (int(x) for x in rng.split(".."))
            out.extend(range(lo, hi + 1, int(step) if step else 1))
        else:
            out.append(int(part))
    return out


def _int_list(text: str) -> list[int]:
    try:
        return parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def load_spec_file(path: str) -> VarietySpec:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return VarietySpec.from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, StructureError) as exc:
        if isinstance(exc, InconsistentDataError):
            raise
        raise UsageError(f"cannot read spec file {path}: {exc}") from exc


def _single(values: list[int] | None, flag: str) -> int:
    if not values or len(values) != 1:
        raise UsageError(f"{flag} needs exactly one value")
    return values[0]


def spec_from_args(args) -> VarietySpec:
    if args.spec:
        return load_spec_file(args.spec)
    if args.family == "del_pezzo":
        return del_pezzo_spec(_single(args.d, "--d"))
    if args.family == "fano3":
        return fano3_spec(_single(args.vol, "--vol"))
    if args.family == "pn":
        return pn_spec(_single(args.n, "--n"))
    raise UsageError("give --spec FILE or --family with its parameter")


@dataclass
class ReportRow:
    family: str
    param: int
    p: int
    e: int
    q: int
    chi: int
    closed_form: int | None
    match: bool
    leading_sign: int
    verdict: str


def _leading_sign(family: str, param: int) -> int:
    x = param - 4 if family == "del_pezzo" else param - 24
    return (x > 0) - (x < 0)


def _row(args: tuple[str, int, int, int]) -> ReportRow:
    family, param, p, e = args
    spec = del_pezzo_spec(param) if family == "del_pezzo" else fano3_spec(param)
    fp = FrobParams(p, e)
    chi = chi_frob_end(spec, fp)
    closed = closed_form_chi(spec, fp)
    bound, _ = h0_lower_bound(spec, fp)
    return ReportRow(
        family, param, p, e, fp.q, chi, closed, chi == closed, _leading_sign(family, param),
        tilting_verdict(chi, bound).verdict.value,
    )


def scan_rows(family: str, params: list[int], ps: list[int], es: list[int], jobs: int = 1) -> list[ReportRow]:
    for name, vals in (("parameter", params), ("--p", ps), ("--e", es)):
        if not vals:
            raise UsageError(f"empty {name} range")
    for p in ps:
        FrobParams(p, 1)
    grid = [(family, a, p, e) for a in params for p in ps for e in es]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row, grid))
    else:
        rows = [_row(g) for g in grid]
    return sorted(rows, key=lambda r: (r.param, r.p, r.e))


def cmd_chi(args) -> int:
    spec = spec_from_args(args)
    fp = FrobParams(args.p, args.e)
    chi = chi_frob_end(spec, fp)
    bound, source = h0_lower_bound(spec, fp)
    if args.h0_bound is not None:
        bound, source = args.h0_bound, "given on the command line"
    verdict = tilting_verdict(chi, bound)
    closed = closed_form_chi(spec, fp)
    if args.json:
        out = {"spec": spec.name, "p": fp.p, "e": fp.e, "q": fp.q, "chi": chi, "closed_form": closed,
               "h0_bound_source": source, "verdict": verdict.to_json()}
        print(json.dumps(out, indent=2))
    else:
        print(f"spec: {spec.name}")
        print(f"p = {fp.p}, e = {fp.e}, q = {fp.q}")
        print(f"chi = {chi}")
        if closed is not None:
            print(f"closed form = {closed}")
        print(f"verdict: {verdict.verdict.value} (h0 >= {bound}: {source})")
        print(f"rationale: {verdict.rationale}")
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.family not in ("del_pezzo", "fano3"):
        raise UsageError("scan supports --family del_pezzo or fano3")
    params = args.d if args.family == "del_pezzo" else args.vol
    rows = scan_rows(args.family, params or [], args.p or [], args.e or [], args.jobs)
    if args.json:
        print(json.dumps([asdict(r) for r in rows], indent=2))
    else:
        key = "d" if args.family == "del_pezzo" else "vol"
        header = f"{key:>4} {'p':>3} {'e':>2} {'q':>5} {'chi':>14} {'closed':>14} match lead verdict"
        print(header)
        for r in rows:
            print(
                f"{r.param:>4} {r.p:>3} {r.e:>2} {r.q:>5} {r.chi:>14} {str(r.closed_form):>14} "
                f"{'yes' if r.match else 'NO':>5} {r.leading_sign:>+4} {r.verdict}"
            )
    return EXIT_OK if all(r.match for r in rows) else EXIT_FAIL


def cmd_symbolic(args) -> int:
    spec = spec_from_args(args)
    poly = chi_symbolic(spec)
    if args.json:
        print(json.dumps({"spec": spec.name, "coefficients": poly.to_json(), "text": str(poly)}, indent=2))
    else:
        print(f"chi(End F^e_* O) for {spec.name}, q = p^e:")
        print(poly)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_checks()
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.claim}")
            if r.detail and not r.passed:
                print(f"       {r.detail}")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_diffop_demo(args) -> int:
    p = _single(args.p, "--p") if args.p else 2
    FrobParams(p, 1)
    report = verify_paper_example(p)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobend",
        description="Euler characteristics of End(F^e_* O_X) by Riemann-Roch, and Frobenius differential operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_spec=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if with_spec:
            sp.add_argument("--spec", help="variety spec JSON file")
            sp.add_argument("--family", choices=["del_pezzo", "fano3", "pn"])
            sp.add_argument("--d", type=_int_list, help="del Pezzo degree(s)")
            sp.add_argument("--vol", type=_int_list, help="anticanonical volume(s) (-K)^3")
            sp.add_argument("--n", type=_int_list, help="dimension of projective space")

    sp = sub.add_parser("chi", help="chi(End F^e_* O_X) and a tilting verdict")
    common(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--h0-bound", type=int, help="override the known lower bound on h^0")
    sp.set_defaults(func=cmd_chi)

    sp = sub.add_parser("scan", help="grid of chi values against the closed forms")
    common(sp)
    sp.add_argument("--p", type=_int_list, required=True, help="primes, e.g. 2,3")
    sp.add_argument("--e", type=_int_list, required=True, help="range, e.g. 1..3")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("symbolic", help="chi as a polynomial in q = p^e")
    common(sp)
    sp.set_defaults(func=cmd_symbolic)

    sp = sub.add_parser("verify", help="re-derive every reproduced formula and value")
    common(sp, with_spec=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("diffop-demo", help="natural vs split embedding of d/dt")
    common(sp, with_spec=False)
    sp.add_argument("--p", type=_int_list, help="characteristic (default 2)")
    sp.set_defaults(func=cmd_diffop_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MissingIntersectionError, NonIntegralEulerCharacteristic, InconsistentDataError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
