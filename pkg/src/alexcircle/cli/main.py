"""Command-line front end.

Exit codes: 0 ok / true, 1 domain-negative (invalid tuple, inequivalent
pair), 2 input error (malformed document, inadmissible operand, inconsistent
plan, incompatible collapse), 3 enumeration cap exceeded, 4 internal error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import core
from ..assembly import build_plan, read_off_invariants
from ..collapse import collapse_to_invariants
from ..enumeration import CAP_ENV, Bounds, count_classes, iter_valid, random_valid
from ..errors import (
    BoundsTooLarge,
    IncompatibleCollapse,
    InconsistentPlan,
    InvalidDecomposition,
    NotAdmissible,
    ParseError,
    ReductionInconsistency,
)
from ..reduce import reduce_to_manifold
from . import documents as docs

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4


def _read(path: str, what: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(what, f"cannot read {path}: {exc.strerror}") from None
    return docs.loads(text, what)


def _load_tuple(path: str, lenient: bool) -> tuple[core.InvariantTuple, list[str]]:
    tup = docs.parse_tuple(_read(path, "tuple"))
    notes: list[str] = []
    if lenient:
        tup, notes = core.absorb_empty_sf_blocks(tup)
    return tup, notes


def _admissible(path: str, lenient: bool) -> core.InvariantTuple:
    tup, _ = _load_tuple(path, lenient)
    report = core.validate(tup)
    if not report.ok:
        raise NotAdmissible(report)
    return tup


def cmd_validate(args, out, err) -> int:
    tup, notes = _load_tuple(args.file, args.lenient)
    report = core.validate(tup)
    for note in notes:
        err.write(f"coerced: {note}\n")
    if report.ok:
        out.write("ok\n")
        return EXIT_OK
    for v in report.violations:
        out.write(f"{v}\n")
    return EXIT_NEGATIVE


def cmd_normalize(args, out, err) -> int:
    out.write(docs.serialize_tuple(core.canonicalize(_admissible(args.file, args.lenient))))
    return EXIT_OK


def cmd_eq(args, out, err) -> int:
    a = _admissible(args.file1, args.lenient)
    b = _admissible(args.file2, args.lenient)
    if core.equivalent(a, b):
        out.write("equivalent\n")
        return EXIT_OK
    out.write("inequivalent\n")
    return EXIT_NEGATIVE


def cmd_reduce(args, out, err) -> int:
    result = reduce_to_manifold(_admissible(args.file, args.lenient))
    out.write(docs.dumps(docs.reduction_document(result)))
    return EXIT_OK


def cmd_assemble(args, out, err) -> int:
    if args.inverse:
        plan = docs.parse_plan(_read(args.file, "plan"))
        out.write(docs.serialize_tuple(read_off_invariants(plan)))
    else:
        plan = build_plan(_admissible(args.file, args.lenient))
        out.write(docs.dumps(docs.plan_document(plan)))
    return EXIT_OK


def cmd_collapse(args, out, err) -> int:
    decomp = docs.parse_decomposition(_read(args.file, "decomposition"))
    out.write(docs.dumps(docs.partial_document(collapse_to_invariants(decomp))))
    return EXIT_OK


def _bounds(args) -> Bounds:
    try:
        return Bounds(
            max_g=args.max_g,
            max_f=args.max_f,
            max_t=args.max_t,
            max_s=args.max_s,
            max_n=args.max_n,
            max_alpha=args.max_alpha,
            max_singular_entry=args.max_singular_entry,
            max_abs_b=args.max_abs_b,
        )
    except ValueError as exc:
        raise ParseError("bounds", str(exc)) from None


def cmd_census(args, out, err) -> int:
    bounds = _bounds(args)
    expected = count_classes(bounds, cap=args.cap)
    written = 0
    for tup in iter_valid(bounds, cap=args.cap):
        out.write(docs.serialize_tuple(tup))
        written += 1
    assert written == expected
    err.write(f"count {written}\n")
    return EXIT_OK


def cmd_random(args, out, err) -> int:
    out.write(docs.serialize_tuple(random_valid(args.seed, _bounds(args))))
    return EXIT_OK


def _add_bounds(p: argparse.ArgumentParser) -> None:
    for flag, default in (
        ("--max-g", 0),
        ("--max-f", 0),
        ("--max-t", 0),
        ("--max-s", 0),
        ("--max-n", 0),
        ("--max-alpha", 2),
        ("--max-singular-entry", 2),
        ("--max-abs-b", 0),
    ):
        p.add_argument(flag, type=int, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alexcircle",
        description="Invariant tuples of Alexandrov 3-spaces with local circle actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def tuple_cmd(name, func, help_text, files=("file",)):
        p = sub.add_parser(name, help=help_text)
        for f in files:
            p.add_argument(f, help="TupleDocument JSON file, or - for stdin")
        p.add_argument("--lenient", action="store_true", help="absorb zero r/q entries into F-blocks")
        p.set_defaults(func=func)
        return p

    tuple_cmd("validate", cmd_validate, "check admissibility")
    tuple_cmd("normalize", cmd_normalize, "print the canonical form")
    tuple_cmd("eq", cmd_eq, "decide equivariant equivalence", files=("file1", "file2"))
    tuple_cmd("reduce", cmd_reduce, "split into a manifold and Susp(RP^2) summands")
    asm = tuple_cmd("assemble", cmd_assemble, "emit the assembly plan")
    asm.add_argument("--inverse", action="store_true", help="read a plan and print its tuple")

    col = sub.add_parser("collapse", help="read invariants off a collapse decomposition")
    col.add_argument("file")
    col.set_defaults(func=cmd_collapse)

    cen = sub.add_parser("census", help="stream the bounded census as JSON lines")
    _add_bounds(cen)
    cen.add_argument("--cap", type=int, default=None, help=f"class-count cap (env {CAP_ENV})")
    cen.set_defaults(func=cmd_census)

    rnd = sub.add_parser("random", help="print one seeded random valid tuple")
    rnd.add_argument("--seed", type=int, required=True)
    _add_bounds(rnd)
    rnd.set_defaults(func=cmd_random)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out, err)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_INPUT
    except NotAdmissible as exc:
        err.write(f"{exc}\n")
        for v in exc.report.violations:
            err.write(f"  {v}\n")
        return EXIT_INPUT
    except (InconsistentPlan, InvalidDecomposition) as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    except IncompatibleCollapse as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    except BoundsTooLarge as exc:
        err.write(f"{exc}\n")
        return EXIT_CAP
    except ReductionInconsistency as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
