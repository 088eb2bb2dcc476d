"""Command-line driver: ``twisted-rham {check,fuzz,catalog}``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .checks import EXIT_FAIL, EXIT_INPUT, EXIT_OK, CheckOptions, fuzz_identities, run_checks
from .spec_io import AlgebraSpec, SpecError, parse_algebra, parse_rational


def _rational_arg(text):
    try:
        return parse_rational(text)
    except SpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _s_values(text):
    try:
        return tuple(parse_rational(x) for x in text.split(",") if x.strip())
    except SpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twisted-rham",
                                description="Exact checks of twisted de Rham identities on metric Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def output_flags(sp):
        sp.add_argument("--report", choices=("text", "json"), default="text")
        sp.add_argument("--output", "-o", help="write the report here instead of stdout")
        sp.add_argument("--no-timing", action="store_true", help="omit timing fields")

    c = sub.add_parser("check", help="run every check on one or more algebras")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--algebra", action="append", help="built-in algebra name (repeatable)")
    src.add_argument("--file", help="JSON algebra file")
    src.add_argument("--all", action="store_true", help="every built-in algebra")
    c.add_argument("--scale", type=_rational_arg, default=Fraction(1),
                   help="rational multiplier for all structure constants")
    c.add_argument("--s-values", type=_s_values, default=None,
                   help="comma-separated rationals for the Lichnerowicz residual")
    output_flags(c)

    f = sub.add_parser("fuzz", help="random 3-form check of the Clifford identities")
    f.add_argument("--dim", "-n", type=int, default=4)
    f.add_argument("--trials", type=int, default=50)
    f.add_argument("--seed", type=int, default=0)
    output_flags(f)

    k = sub.add_parser("catalog", help="list built-in algebras")
    k.add_argument("--dump", metavar="NAME", help="print NAME as a JSON algebra file")
    return p


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _render(reports, args) -> str:
    if args.report == "json":
        docs = [r.to_dict(timing=not args.no_timing) for r in reports]
        return json.dumps(docs[0] if len(docs) == 1 else docs, indent=2, sort_keys=True)
    return "\n\n".join(r.to_text() for r in reports)


def _check(args) -> int:
    targets = []
    try:
        if args.file:
            with open(args.file, "rb") as fh:
                spec = parse_algebra(fh.read())
            targets.append(spec.to_algebra())
        else:
            names = sorted(catalog.builtin_catalog()) if args.all else sorted(set(args.algebra))
            targets = [catalog.get(n) for n in names]
    except (OSError, SpecError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    options = CheckOptions(s_values=args.s_values or CheckOptions.s_values,
                           scale=args.scale, timing=not args.no_timing)
    reports, codes = [], []
    for L in targets:
        rep, code = run_checks(L, options)
        reports.append(rep)
        codes.append(code)
    _emit(_render(reports, args), args.output)
    if EXIT_INPUT in codes:
        return EXIT_INPUT
    return EXIT_FAIL if EXIT_FAIL in codes else EXIT_OK


def _fuzz(args) -> int:
    try:
        rep, code = fuzz_identities(args.dim, args.trials, args.seed)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(_render([rep], args), args.output)
    return code


def _catalog(args) -> int:
    cat = catalog.builtin_catalog()
    if args.dump:
        if args.dump not in cat:
            print(f"input error: unknown algebra {args.dump!r}", file=sys.stderr)
            return EXIT_INPUT
        print(AlgebraSpec.from_algebra(cat[args.dump]).dumps())
        return EXIT_OK
    for name, L in cat.items():
        kind = "abelian" if L.is_abelian() else "non-abelian"
        print(f"{name:<18} dim {L.dim:<3} {len(L.brackets()):>3} brackets  {kind}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return {"check": _check, "fuzz": _fuzz, "catalog": _catalog}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
