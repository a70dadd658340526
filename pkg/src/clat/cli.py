"""Command-line front end.

Exit codes: 0 success or "yes", 1 "no", 2 "unknown" or budget exhausted,
3 precondition violation, 64 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .core import BudgetExhausted, Clause, PreconditionError
from .implication import Budget, deduce, derivation_closure
from .lattice import gsi, gsr, lgi, lgr_ground, self_saturate
from .subsumption import BOTTOM, gss_clausal, gss_horn, lgs_set, reduce, subsumes
from .syntax import ParseError, parse_clause, parse_program, print_clause

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_PRECONDITION, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read(path) -> list:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(str(e))
    return parse_program(text).clauses


def _budget(args) -> Budget:
    seconds = args.max_seconds
    if seconds is None:
        seconds = float(os.environ.get("CLAT_MAX_SECONDS", Budget.max_seconds))
    return Budget(max_derived_clauses=args.max_clauses, max_derivation_depth=args.max_depth,
                  max_seconds=seconds)


def _trace(args):
    if not args.trace:
        return None
    return lambda line: print(line, file=sys.stderr)


def _emit(*clauses):
    for c in clauses:
        print(print_clause(c))
    return EXIT_OK


def _verdict(v) -> int:
    print(str(v))
    return {"proved": EXIT_OK, "disproved": EXIT_NO}.get(v.status, EXIT_UNKNOWN)


def _background_literals(clauses):
    lits = []
    for c in clauses:
        if len(c) != 1:
            raise UsageError(f"background entries must be single literals, got {print_clause(c)}")
        lits.extend(c.literals)
    return lits


def cmd_lgs(args):
    return _emit(lgs_set(_read(args.file)))


def cmd_gss(args):
    cs = _read(args.file)
    if args.horn:
        r = gss_horn(cs)
        if r is BOTTOM:
            print("bottom")
            return EXIT_OK
        return _emit(r)
    return _emit(gss_clausal(cs))


def cmd_lgi(args):
    return _emit(lgi(_read(args.file), _budget(args), backend=args.backend))


def cmd_gsi(args):
    return _emit(gsi(_read(args.file)))


def cmd_lgr(args):
    bg = _background_literals(_read(args.bg))
    return _emit(lgr_ground(_read(args.file), bg, _budget(args), backend=args.backend))


def cmd_gsr(args):
    return _emit(gsr(_read(args.file), _read(args.bg)))


def cmd_subsumes(args):
    cs = _read(args.file)
    if len(cs) != 2:
        raise UsageError(f"subsumes needs exactly two clauses, got {len(cs)}")
    ok = subsumes(cs[0], cs[1])
    print("yes" if ok else "no")
    return EXIT_OK if ok else EXIT_NO


def cmd_implies(args):
    cs = _read(args.file)
    if not cs:
        raise UsageError("implies needs at least a goal clause")
    premises, goal = cs[:-1], cs[-1]
    if args.bg:
        premises = _read(args.bg) + premises
    return _verdict(deduce(premises, goal, _budget(args), _trace(args), args.backend))


def cmd_reduce(args):
    return _emit(*(reduce(c) for c in _read(args.file)))


def cmd_saturate(args):
    cs = _read(args.file)
    if args.target:
        goal = parse_clause(args.target)
        return _verdict(deduce(cs, goal, _budget(args), _trace(args), args.backend))
    clauses, complete = derivation_closure(cs, _budget(args))
    _emit(*clauses)
    if not complete:
        print("budget exhausted before the closure was complete", file=sys.stderr)
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_self_saturate(args):
    cs = _read(args.file)
    if len(cs) != 1:
        raise UsageError(f"self-saturate needs exactly one clause, got {len(cs)}")
    return _emit(self_saturate(cs[0], _budget(args), backend=args.backend))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-clauses", type=int, default=Budget.max_derived_clauses)
    common.add_argument("--max-depth", type=int, default=Budget.max_derivation_depth)
    common.add_argument("--max-seconds", type=float, default=None,
                        help="defaults to $CLAT_MAX_SECONDS or 30")
    common.add_argument("--backend", choices=("reference", "optimized"), default="optimized")
    common.add_argument("--trace", action="store_true", help="derivation steps to stderr")

    p = _Parser(prog="clat", description="Generalization and specialization of clause sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file")
        sp.set_defaults(fn=fn)
        return sp

    add("lgs", cmd_lgs, "least generalization under subsumption")
    add("gss", cmd_gss, "greatest specialization under subsumption").add_argument(
        "--horn", action="store_true")
    add("lgi", cmd_lgi, "least generalization under implication")
    add("gsi", cmd_gsi, "greatest specialization under implication")
    add("lgr", cmd_lgr, "least generalization relative to ground literals").add_argument(
        "--bg", required=True)
    add("gsr", cmd_gsr, "greatest specialization under relative implication").add_argument(
        "--bg", required=True)
    add("subsumes", cmd_subsumes, "does the first clause subsume the second")
    add("implies", cmd_implies, "do all but the last clause imply the last").add_argument("--bg")
    add("reduce", cmd_reduce, "reduce every clause")
    add("saturate", cmd_saturate, "resolution closure, or a deduction of --target").add_argument(
        "--target")
    add("self-saturate", cmd_self_saturate, "self-saturation of a function-free clause")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except (ParseError, UsageError) as e:
        print(f"clat: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as e:
        print(f"clat: precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExhausted as e:
        print(f"clat: {e}", file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
