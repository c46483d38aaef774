"""``bluescheme`` command line: spec, proj, chart, count.

Exit codes: 0 ok, 2 parse/usage error, 3 enumeration guard, 4 grading
problem (ungraded input, unsupported chart degree), 5 unknown generator,
6 non-prime q in ``count``.  Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import DEFAULT_BUDGET, Settings
from .dsl import to_dsl, parse_presentation
from .errors import (DSLParseError, EnumerationLimitError, GradingError, UnknownGeneratorError,
                     UnsupportedDegreeError)
from .models import (BUILTINS, GR24_COUNTING, count_subspaces_bruteforce, eval_counting_polynomial,
                     find_isomorphism, get_builtin, matrices_2x2)
from .poset_doc import PosetDocument
from .proj import basic_open, build_proj, chart
from .spectra import closed_points, generic_points, spectrum

EXIT_PARSE, EXIT_GUARD, EXIT_GRADING, EXIT_UNKNOWN_GEN, EXIT_BAD_Q = 2, 3, 4, 5, 6


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load(args):
    if args.builtin and args.file:
        raise CliError("give either --builtin or --file, not both", EXIT_PARSE)
    if args.builtin:
        try:
            return get_builtin(args.builtin)
        except KeyError as exc:
            raise CliError(exc.args[0], EXIT_PARSE) from None
    if args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc.strerror}", EXIT_PARSE) from None
        try:
            return parse_presentation(text)
        except DSLParseError as exc:
            raise CliError(f"{args.file}:{exc.line}:{exc.column}: {exc}", EXIT_PARSE) from None
    raise CliError("an input is required: --builtin NAME or --file PATH", EXIT_PARSE)


def _settings(args) -> Settings:
    if args.budget is not None:
        return Settings.from_env(budget=args.budget)
    return Settings.from_env()


def _summary(poset, noun: str) -> list[str]:
    hist = "/".join(str(c) for c in poset.rank_histogram())
    closed = closed_points(poset)
    lines = [f"{len(poset)} {noun}; ranks {hist}; {len(closed)} closed"]
    lines.append("closed: " + " ".join(p.format() for p in closed))
    lines.append("generic: " + " ".join(p.format() for p in generic_points(poset)))
    return lines


def _write_artifacts(args, poset, pres, kind):
    if not (args.dot or args.json):
        return
    doc = PosetDocument.from_poset(poset, pres.name or "B", kind, pres.generators)
    if args.dot:
        Path(args.dot).write_text(doc.to_dot())
    if args.json:
        Path(args.json).write_text(doc.to_json())


def cmd_spec(args) -> int:
    pres = _load(args)
    try:
        poset = spectrum(pres, settings=_settings(args))
    except EnumerationLimitError as exc:
        raise CliError(str(exc), EXIT_GUARD) from None
    print(f"Spec {pres.name}")
    print("\n".join(_summary(poset, "primes")))
    _write_artifacts(args, poset, pres, "spec")
    return 0


def cmd_proj(args) -> int:
    pres = _load(args)
    if not pres.is_graded:
        raise CliError(f"{pres.name or 'input'} is not graded; Proj needs degrees", EXIT_GRADING)
    try:
        proj = build_proj(pres, settings=_settings(args))
    except EnumerationLimitError as exc:
        raise CliError(str(exc), EXIT_GUARD) from None
    except GradingError as exc:
        raise CliError(str(exc), EXIT_GRADING) from None
    print(f"Proj {pres.name}")
    print("\n".join(_summary(proj.points, "points")))
    _write_artifacts(args, proj.points, pres, "proj")
    return 0


def cmd_chart(args) -> int:
    pres = _load(args)
    if not args.at:
        raise CliError("chart needs --at GEN", EXIT_PARSE)
    if args.at not in pres.generators:
        raise CliError(f"unknown generator {args.at!r}", EXIT_UNKNOWN_GEN)
    if not pres.is_graded:
        raise CliError(f"{pres.name or 'input'} is not graded; charts need degrees", EXIT_GRADING)
    try:
        proj = build_proj(pres, settings=_settings(args))
        ch = chart(proj, args.at)
    except (GradingError, UnsupportedDegreeError) as exc:
        raise CliError(str(exc), EXIT_GRADING) from None
    except EnumerationLimitError as exc:
        raise CliError(str(exc), EXIT_GUARD) from None
    sys.stdout.write(to_dsl(ch))
    n_open = len(basic_open(proj, args.at))
    n_chart = len(spectrum(ch, settings=_settings(args)))
    print(f"U_{args.at}: {n_open} points; Spec of chart: {n_chart} primes")
    for twisted in (False, True):
        model = matrices_2x2(twisted)
        iso = find_isomorphism(ch, model)
        if iso is not None:
            print(f"matches {model.name}: {model.relations[0].format(model.generators)}")
            print("  via " + ", ".join(f"{k} -> {v}" for k, v in iso.items()))
            break
    else:
        print("matches no built-in chart model")
    return 0


def cmd_count(args) -> int:
    try:
        qs = [int(x) for x in args.q.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"bad --q list {args.q!r}", EXIT_PARSE) from None
    code = 0
    print("q\tN(q)\toracle\tagree")
    for q in qs:
        value = eval_counting_polynomial(GR24_COUNTING, q)
        try:
            oracle = count_subspaces_bruteforce(2, 4, q)
        except ValueError as exc:
            print(f"{q}\t{value}\t-\t-")
            print(f"count: {exc}", file=sys.stderr)
            code = EXIT_BAD_Q
            continue
        print(f"{q}\t{value}\t{oracle}\t{'yes' if value == oracle else 'NO'}")
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--builtin", metavar="NAME", help=f"one of: {', '.join(BUILTINS)}")
    src.add_argument("--file", metavar="PATH", help="presentation in the blueprint DSL")
    common.add_argument("--budget", type=int, metavar="K",
                        help=f"saturation depth (default {DEFAULT_BUDGET}, or $BLUESCHEME_BUDGET)")
    common.add_argument("--dot", metavar="PATH", help="write the poset as Graphviz DOT")
    common.add_argument("--json", metavar="PATH", help="write the poset as JSON")

    parser = argparse.ArgumentParser(prog="bluescheme", description="Proj and Spec of monomial blueprints over F1.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spec", parents=[common], help="prime spectrum").set_defaults(func=cmd_spec)
    sub.add_parser("proj", parents=[common], help="homogeneous primes off the irrelevant locus").set_defaults(func=cmd_proj)
    p = sub.add_parser("chart", parents=[common], help="degree-zero chart at a degree-1 generator")
    p.add_argument("--at", metavar="GEN")
    p.set_defaults(func=cmd_chart)
    p = sub.add_parser("count", help="Gr(2,4) counting polynomial vs brute-force subspace count")
    p.add_argument("--q", default="2,3,5", metavar="N,...")
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"bluescheme: {exc}", file=sys.stderr)
        return exc.code
    except UnknownGeneratorError as exc:
        print(f"bluescheme: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_GEN


if __name__ == "__main__":
    sys.exit(main())
