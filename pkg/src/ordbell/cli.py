"""Command line interface: ``family``, ``represent``, ``numbers`` and ``verify``.

Exit codes: 0 success, 1 a theorem-path identity check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .core import UsageError, XPoly, check_degree, format_rational, set_max_degree
from .families import FamilyId, Kind, format_lambda, harmonic, number_table, parse_lambda, stirling2_row
from .identities import DEFAULT_LAMBDA_MODES, IdentityId, run_suite, suite_passed
from .jsonio import poly_from_json, poly_to_json, representation_to_json, scalar_to_json
from .represent import Variant, represent

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

_LAMBDA_KINDS = (Kind.DEGENERATE_ORDERED_BELL, Kind.FALLING_FACTORIAL)
_ORDERED = (Kind.ORDERED_BELL, Kind.DEGENERATE_ORDERED_BELL)
_BASES = ("monomial", "bernoulli", "ordered-bell", "degenerate-ordered-bell", "falling-factorial")
_NUMBER_KINDS = ("bernoulli", "euler", "genocchi", "ordered-bell", "degenerate-ordered-bell", "stirling2", "harmonic")


def _fmt(c) -> str:
    if isinstance(c, Fraction):
        return format_rational(c)
    s = str(c)
    return f"({s})" if any(op in s[1:] for op in " +-") else s


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, ensure_ascii=False, sort_keys=False))
    else:
        print(text)


def _family(kind: Kind, r: int, lam_text) -> FamilyId:
    lam = None
    if kind in _LAMBDA_KINDS:
        lam = parse_lambda(lam_text if lam_text is not None else "sym")
    elif lam_text is not None:
        raise UsageError(f"{kind.value} does not take --lambda")
    if kind not in _ORDERED and r != 1:
        raise UsageError(f"{kind.value} does not take --r")
    return FamilyId(kind, r, lam)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_family(args) -> int:
    fam = _family(Kind(args.kind), args.r, args.lam)
    p = fam.poly(args.n)
    _emit(args, str(p), poly_to_json(p, fam.lam))
    return EXIT_OK


def _read_polynomial(args) -> tuple[XPoly, object]:
    if args.coeffs is not None:
        if args.input is not None:
            raise UsageError("give either --input or --coeffs, not both")
        try:
            vals = [Fraction(t.strip()) for t in args.coeffs.split(",") if t.strip()]
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --coeffs value: {exc}") from None
        return XPoly(vals), None
    if args.input is None:
        raise UsageError("represent needs --input FILE (or -) or --coeffs")
    try:
        if args.input == "-":
            obj = json.load(sys.stdin)
        else:
            with open(args.input, encoding="utf-8") as fh:
                obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.input} is not valid JSON: {exc.msg}") from None
    return poly_from_json(obj)


def cmd_represent(args) -> int:
    p, poly_lam = _read_polynomial(args)
    kind = Kind(args.basis)
    if kind in _LAMBDA_KINDS:
        lam = parse_lambda(args.lam) if args.lam is not None else (poly_lam if poly_lam is not None else parse_lambda("sym"))
        if poly_lam is not None and args.lam is not None and format_lambda(lam) != format_lambda(poly_lam):
            raise UsageError("the input polynomial's λ mode differs from --lambda")
        lam_text = format_lambda(lam)
    else:
        if poly_lam is not None or p.symbolic:
            raise UsageError(f"a {kind.value} basis needs a λ-free polynomial")
        lam_text = args.lam
    fam = _family(kind, args.r, lam_text)
    rep = represent(p, fam, Variant(args.variant))
    lines = [f"basis {fam.kind.value} order {fam.order}" + (f" lambda {lam_text}" if fam.lam is not None else "")]
    lines += [f"a_{k} = {_fmt(c)}" for k, c in enumerate(rep.coeffs)]
    _emit(args, "\n".join(lines), representation_to_json(rep))
    return EXIT_OK


def cmd_numbers(args) -> int:
    kind = args.kind
    if kind == "stirling2":
        if args.n is None:
            raise UsageError("stirling2 needs --n (the row index)")
        values = list(enumerate(stirling2_row(args.n)))
    else:
        if args.count is None:
            raise UsageError(f"{kind} needs --count")
        if kind == "harmonic":
            check_degree(args.count, "count")
            values = [(n, harmonic(n)) for n in range(1, args.count + 1)]
        else:
            fam = _family(Kind(kind), args.r, args.lam)
            values = list(enumerate(number_table(fam, args.count)))
    text = "\n".join(f"{n} {_fmt(v)}" for n, v in values)
    _emit(args, text, {"kind": kind, "values": [{"n": n, "value": scalar_to_json(v)} for n, v in values]})
    return EXIT_OK


def _split_list(items) -> list[str]:
    out = []
    for item in items or ():
        out += [t.strip() for t in item.split(",") if t.strip()]
    return out


def _probe_point(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-97, 97), rng.randint(1, 97))


def cmd_verify(args) -> int:
    filters = _split_list(args.filter) or ["all"]
    ids = "all" if any(f.lower() == "all" for f in filters) else [IdentityId.parse(f) for f in filters]
    modes = _split_list(args.lam) or list(DEFAULT_LAMBDA_MODES)
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    reports = run_suite(ids, args.max_n, args.r_max, modes, jobs=args.jobs)
    if not reports:
        raise UsageError("no identity instances in the requested range")
    rng = random.Random(args.seed)
    full, summary = [], []
    for rep in reports:
        obj = rep.to_json()
        if rep.witness is not None:
            x = _probe_point(rng)
            obj["witness_probe"] = {"x": format_rational(x), "value": scalar_to_json(rep.witness(x))}
        full.append(obj)
        summary.append({k: v for k, v in obj.items() if k != "elapsed_ms"})
    if args.report:
        try:
            with open(args.report, "w", encoding="utf-8") as fh:
                json.dump(full, fh, ensure_ascii=False, indent=1)
                fh.write("\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.report}: {exc.strerror}") from None
    ok = suite_passed(reports)
    if args.format == "json":
        print(json.dumps(summary, ensure_ascii=False))
    else:
        groups: dict[str, list] = {}
        for rep in reports:
            groups.setdefault(rep.id.value, []).append(rep)
        for name, reps in groups.items():
            bad = sum(not r.passed for r in reps)
            printed = sum(r.printed_form == "mismatch" for r in reps)
            line = f"{name:18s} {len(reps):4d} instances  theorem-path {'pass' if not bad else f'{bad} FAILED'}"
            if printed:
                line += f"  (printed-form mismatches: {printed})"
            print(line)
            for r in reps:
                if not r.passed:
                    print(f"    FAILED {r.params}: {', '.join(r.failed_checks)}; witness {r.witness}")
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_MISMATCH


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "json"), default=d("text"), help="output format")
    p.add_argument("--max-degree", type=int, default=d(64), metavar="N", help="degree / series-order guard")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized choices (witness probes)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordbell", description="Exact ordered Bell polynomial machinery and identity checks."
    )
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="print one polynomial of a family")
    _add_globals(p, suppress=True)
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1, help="order (ordered Bell kinds only)")
    p.add_argument("--lambda", dest="lam", help="'sym' or a nonzero rational (degenerate kinds)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("represent", help="expand a polynomial in a basis")
    _add_globals(p, suppress=True)
    p.add_argument("--input", help="polynomial JSON file, or - for stdin")
    p.add_argument("--coeffs", help="inline λ-free coefficients a0,a1,... (lowest degree first)")
    p.add_argument("--basis", required=True, choices=_BASES)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--variant", default=Variant.STIRLING_DERIVATIVE.value, choices=[v.value for v in Variant])
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("numbers", help="print a number table")
    _add_globals(p, suppress=True)
    p.add_argument("--kind", required=True, choices=_NUMBER_KINDS)
    p.add_argument("--count", type=int)
    p.add_argument("--n", type=int, help="row index for stirling2")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--lambda", dest="lam")
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("verify", help="run the identity verification suite")
    _add_globals(p, suppress=True)
    p.add_argument("--filter", action="append", help="identity tag(s), comma separated; default all")
    p.add_argument("--max-n", type=int, help="override each identity's default size cap")
    p.add_argument("--r-max", type=int, default=3)
    p.add_argument("--lambda", dest="lam", action="append", help="λ modes, e.g. sym,1/3 (repeatable)")
    p.add_argument("--report", help="write the full JSON report here")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        set_max_degree(args.max_degree)
        return args.func(args)
    except UsageError as exc:
        print(f"ordbell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
