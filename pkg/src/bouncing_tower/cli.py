"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle
from .diskpile import SizeProfile, count_diskpile, diskpile_oracle, solve_diskpile, worst_case_count
from .rules import BOUNCING, HANOI, RuleSet
from .solver import CountFunction, count_closed_form, count_recurrence, solve
from .traceio import (
    TraceDocument,
    TraceFormatError,
    parse_trace,
    replay_verify,
    serialize_trace,
    sniff_format,
)

TABLE_FUNCTIONS = ("f010", "f100", "f000")
MAX_TABLE_N = 60


class UsageError(Exception):
    pass


def _alpha(text: str) -> RuleSet:
    try:
        return RuleSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _variant_rules(variant: str, alpha: RuleSet | None) -> RuleSet:
    if variant == "levitating":
        if alpha is None:
            raise UsageError("--variant levitating needs --alpha p/q")
        return alpha
    fixed = HANOI if variant == "hanoi" else BOUNCING
    if alpha is not None and alpha != fixed:
        raise UsageError(f"variant {variant} runs at alpha={fixed.label}, not {alpha.label}")
    return fixed


def _cap(args) -> int:
    cap = args.cap if args.cap is not None else oracle.oracle_cap()
    if cap > oracle.DEFAULT_CAP:
        print(f"warning: oracle cap raised to {cap}; 3**{cap} states need a lot of memory", file=sys.stderr)
    return cap


def cmd_solve(args) -> int:
    rules = _variant_rules(args.variant, args.alpha)
    n = args.n
    if args.variant == "levitating":
        try:
            g = oracle.build_graph(n, rules, cap=_cap(args))
        except oracle.ScaleCapError as exc:
            raise UsageError(str(exc)) from None
        moves = oracle.shortest_path(g, "A" * n, "C" * n)
        if moves is None:
            print(f"no path from {'A' * n} to {'C' * n} at alpha={rules.label}", file=sys.stderr)
            return 1
    else:
        moves = solve(args.variant, n)
    doc = TraceDocument(args.variant, rules.alpha, n, "A" * n, tuple(moves))
    _write(serialize_trace(doc, args.format), args.output)
    return 0


def cmd_count(args) -> int:
    fn = count_recurrence if args.method == "recurrence" else count_closed_form
    print(fn(args.function, args.n))
    return 0


def table_rows(max_n: int) -> dict[str, list[int]]:
    if not 0 <= max_n <= MAX_TABLE_N:
        raise UsageError(f"--max-n must lie in 0..{MAX_TABLE_N}")
    rows = {"n": list(range(max_n + 1))}
    for f in TABLE_FUNCTIONS:
        rows[f] = [count_recurrence(f, n) for n in range(max_n + 1)]
    rows["3^ceil(n/2)"] = [3 ** ((n + 1) // 2) for n in range(max_n + 1)]
    return rows


def format_table(rows: dict[str, list[int]], csv: bool = False) -> str:
    if csv:
        return "".join(f"{name}," + ",".join(map(str, vals)) + "\n" for name, vals in rows.items())
    cells = {name: [str(v) for v in vals] for name, vals in rows.items()}
    head = max(len(name) for name in cells)
    widths = [max(len(col[i]) for col in cells.values()) for i in range(len(cells["n"]))]
    lines = []
    for name, col in cells.items():
        lines.append(name.ljust(head) + " | " + " | ".join(v.rjust(w) for v, w in zip(col, widths)))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    sys.stdout.write(format_table(table_rows(args.max_n), csv=args.csv))
    return 0


def cmd_verify(args) -> int:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    fmt = sniff_format(text) if args.format == "auto" else args.format
    try:
        if fmt == "json":
            doc = parse_trace(text, "json")
        else:
            if args.n is None:
                raise UsageError("text traces need --n")
            alpha = args.alpha.alpha if args.alpha is not None else None
            if args.variant == "levitating" and alpha is None:
                raise UsageError("--variant levitating needs --alpha p/q")
            doc = parse_trace(text, "text", n=args.n, variant=args.variant, alpha=alpha)
    except TraceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = replay_verify(doc)
    print(report.summary())
    return 0 if report.solved and report.legal_prefix_len == len(doc.moves) else 1


def cmd_graph(args) -> int:
    try:
        g = oracle.build_graph(args.n, args.alpha, cap=_cap(args))
    except oracle.ScaleCapError as exc:
        raise UsageError(str(exc)) from None
    _write(oracle.export_graph(g, args.format), args.output)
    return 0


def cmd_oracle_check(args) -> int:
    cap = _cap(args)
    if args.n > cap:
        raise UsageError(f"n={args.n} exceeds the oracle cap of {cap}")
    if args.variant is None or args.variant == "levitating":
        if args.alpha is None:
            raise UsageError("give --variant hanoi|bouncing|alt or --alpha p/q")
        g = oracle.build_graph(args.n, args.alpha, cap=cap)
        s, t = "A" * args.n, "C" * args.n
        dist = oracle.bfs_distance(g, s, t)
        count = oracle.shortest_path_count(g, s, t)
        print(f"INFO n={args.n} alpha={args.alpha.label} bfs_len={dist} shortest_paths={count}")
        return 0 if dist is not None else 1
    _variant_rules(args.variant, args.alpha)
    report = oracle.verify_solver(args.n, args.variant, cap=cap)
    print(report.summary())
    for problem in report.problems:
        print(f"  {problem}")
    return 0 if report.ok else 1


def cmd_diskpile(args) -> int:
    try:
        profile = SizeProfile.parse(args.profile)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.action == "count":
        print(count_diskpile(profile))
    elif args.action == "worst":
        print(worst_case_count(profile.total, profile.s))
    elif args.action == "oracle":
        try:
            best = diskpile_oracle(profile, cap=args.cap or 9)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(best)
        return 0 if best == count_diskpile(profile) else 1
    else:
        sys.stdout.write("".join(f"{m}\n" for m in solve_diskpile(profile)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bouncing-tower", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="emit a move trace")
    p.add_argument("--variant", choices=("hanoi", "bouncing", "alt", "levitating"), default="bouncing")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--alpha", type=_alpha)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.add_argument("--cap", type=_nonneg)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("count", help="print a step count")
    p.add_argument("--function", choices=[f.value for f in CountFunction], required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", choices=("recurrence", "closed"), default="recurrence")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="first values of the count functions")
    p.add_argument("--max-n", type=_nonneg, default=15)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="replay a trace read from stdin or --input")
    p.add_argument("--input")
    p.add_argument("--format", choices=("auto", "text", "json"), default="auto")
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--variant", choices=("hanoi", "bouncing", "alt", "levitating"), default="bouncing")
    p.add_argument("--alpha", type=_alpha)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="export the configuration graph")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--alpha", type=_alpha, default=BOUNCING)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--output")
    p.add_argument("--cap", type=_nonneg)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("oracle-check", help="compare a solver against exhaustive BFS")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--variant", choices=("hanoi", "bouncing", "alt", "levitating"))
    p.add_argument("--alpha", type=_alpha)
    p.add_argument("--cap", type=_nonneg)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("diskpile", help="Disk Pile tools")
    p.add_argument("--profile", required=True, help="counts per size, smallest first, e.g. 3,1,2")
    p.add_argument("--action", choices=("count", "solve", "oracle", "worst"), default="count")
    p.add_argument("--cap", type=_nonneg)
    p.set_defaults(func=cmd_diskpile)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
