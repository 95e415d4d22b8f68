"""Command line front end.

Subcommands: matrix, symmetrize, minors, verify, oeis.  Exit codes:
0 pass, 1 verification failure, 2 usage, 3 precision, 4 network, 5 parse.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import families, oeis, verify
from .array import matrix as pair_matrix
from .minors import principal_minors
from .series import InsufficientOrder
from .symmetry import NonIntegerEntries, require_integer_entries, symmetrize

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_NETWORK = 4
EXIT_PARSE = 5

PAIR_SPECS = ("R", "tildeR", "Rinv", "example1", "catalan", "pascal", "A361654")
MATRIX_SPECS = ("asm-classical", "vertex20")


class UsageError(Exception):
    pass


def _parse_family(spec):
    """Split a family spec like R:1 into (name, r); plain names get r=None."""
    if ":" in spec:
        name, _, arg = spec.partition(":")
        if name not in ("R", "tildeR", "Rinv"):
            raise UsageError(f"family {name!r} does not take a parameter")
        try:
            return name, int(arg)
        except ValueError:
            raise UsageError(f"bad family parameter {arg!r}") from None
    if spec in ("example1", "catalan", "pascal", "A361654") + MATRIX_SPECS:
        return spec, None
    raise UsageError(f"unknown family spec {spec!r}")


def _build_pair(name, r, order):
    if name == "R":
        return families.make_R(r, order)
    if name == "tildeR":
        return families.make_tilde_R(r, order)
    if name == "Rinv":
        return families.make_R_inverse_closed(r, order)
    if name == "example1":
        return families.make_example1(order)
    if name == "catalan":
        return families.catalan_pair(order)
    if name == "pascal":
        return families.pascal_pair(order)
    if name == "A361654":
        return families.make_A361654_embed(order)
    raise UsageError(f"{name!r} is not a Riordan pair spec")


def _build_matrix(name, r, N, order):
    if name == "asm-classical":
        return families.classical_asm_matrix(N)
    if name == "vertex20":
        return families.twenty_vertex_matrix(N)
    return pair_matrix(_build_pair(name, r, order), N)


def _fmt_value(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)


def _render_matrix(M, fmt):
    cells = [[_fmt_value(v) for v in row] for row in M.rows]
    if fmt == "json":
        return json.dumps(cells)
    if fmt == "csv":
        return "\n".join(",".join(row) for row in cells)
    widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(len(cells))]
    return "\n".join(
        " ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
    )


def _render_sequence(values, fmt):
    cells = [_fmt_value(v) for v in values]
    if fmt == "json":
        return json.dumps(cells)
    if fmt == "csv":
        return ",".join(cells)
    return " ".join(cells)


def _order_for(args, N, symmetrizing):
    if args.order is not None:
        return args.order
    return 2 * N + 4


def cmd_matrix(args):
    name, r = _parse_family(args.family)
    M = _build_matrix(name, r, args.N, _order_for(args, args.N, False))
    print(_render_matrix(M, args.format))
    return EXIT_PASS


def cmd_symmetrize(args):
    name, r = _parse_family(args.family)
    if name in MATRIX_SPECS:
        raise UsageError(f"{name} is already a full matrix; it has no symmetrization")
    pair = _build_pair(name, r, _order_for(args, args.N, True))
    S = symmetrize(pair, args.N)
    print(_render_matrix(S, args.format))
    return EXIT_PASS


def cmd_minors(args):
    name, r = _parse_family(args.family)
    count = args.count
    if name in MATRIX_SPECS:
        if args.symmetrize:
            raise UsageError(f"{name} is already a full matrix; --symmetrize does not apply")
        M = _build_matrix(name, r, count, None)
    else:
        pair = _build_pair(name, r, _order_for(args, count, args.symmetrize))
        if args.symmetrize:
            M = symmetrize(pair, count)
            require_integer_entries(M)
        else:
            M = pair_matrix(pair, count)
    print(_render_sequence(principal_minors(M, count), args.format))
    return EXIT_PASS


def cmd_verify(args):
    if args.suite == "all":
        results = verify.run_all(seed=args.seed)
    else:
        results = [verify.run_suite(args.suite, seed=args.seed)]
    exit_status = max(r.exit_status for r in results)
    if args.json:
        report = {
            "suites": [r.as_dict() for r in results],
            "exit_status": exit_status,
        }
        print(json.dumps(report, indent=2))
        for r in results:
            counts = r.as_dict()["counts"]
            print(
                f"suite {r.suite}: {counts['pass']} passed, {counts['fail']} failed, "
                f"{counts['reported']} reported",
                file=sys.stderr,
            )
    else:
        for r in results:
            for c in r.checks:
                line = f"{c.status.upper():8s} {c.id}"
                if c.status == "fail":
                    line += f"  expected={c.expected} actual={c.actual}"
                elif c.status == "reported":
                    line += f"  outcome={c.actual}"
                print(line)
            counts = r.as_dict()["counts"]
            print(
                f"suite {r.suite}: {counts['pass']} passed, {counts['fail']} failed, "
                f"{counts['reported']} reported"
            )
    return EXIT_FAIL if exit_status else EXIT_PASS


CHECK_SEQUENCES = ("robbins", "vertex20", "catalan", "A361654")


def _check_values(name, length):
    if name == "robbins":
        return [families.robbins(n) for n in range(length)]
    if name == "vertex20":
        return families.reference_B20()
    if name == "catalan":
        pair = families.catalan_pair(16)
        M = pair_matrix(pair, 12)
        return [int(M[n][k]) for n in range(12) for k in range(n + 1)]
    if name == "A361654":
        pair = families.make_A361654_embed(16)
        M = pair_matrix(pair, 12)
        return [int(M[n][k]) for n in range(12) for k in range(n + 1)]
    raise UsageError(f"unknown check target {name!r}")


def cmd_oeis(args):
    try:
        oeis.check_seq_id(args.sequence)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    bfile = oeis.oeis_fetch(args.sequence, cache_dir=args.cache_dir, offline=args.offline)
    if args.check is None:
        print(_render_sequence(bfile.values[: args.limit], args.format))
        return EXIT_PASS
    values = _check_values(args.check, 30)
    alignment = oeis.align(values, bfile)
    verdict = "match" if alignment.ok else "MISMATCH"
    print(
        f"{args.sequence} vs {args.check}: {verdict} "
        f"({alignment.matched}/{alignment.compared} terms, offset {alignment.offset})"
    )
    return EXIT_PASS if alignment.ok else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--order", type=int, default=None, help="series truncation override")
    common.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    common.add_argument("--offline", action="store_true")
    common.add_argument("--cache-dir", default=None)

    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact Riordan arrays, symmetrizations, and principal minors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", parents=[common], help="print an N x N family matrix")
    p.add_argument("family")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("symmetrize", parents=[common], help="print a symmetrized matrix")
    p.add_argument("family")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_symmetrize)

    p = sub.add_parser("minors", parents=[common], help="print principal minors")
    p.add_argument("family")
    p.add_argument("count", type=int)
    p.add_argument("--symmetrize", action="store_true")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITE_NAMES + ("all",))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", parents=[common], help="fetch and compare OEIS b-files")
    p.add_argument("sequence")
    p.add_argument("--check", choices=CHECK_SEQUENCES, default=None)
    p.add_argument("--limit", type=int, default=20)
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InsufficientOrder, NonIntegerEntries) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (oeis.NetworkError, oeis.CacheMiss) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    except oeis.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
