"""Command-line front end.

Payloads go to stdout one record per line; ``--stats`` adds a JSON metadata
line on stderr and ``--json`` replaces stdout with a single JSON document.
Exit codes: 0 ok, 1 usage or input error, 2 strict-mode crossing,
3 failed self check (oracle mismatch or violated bound).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle
from .bench import band, format_table, work_scaling
from .lyndon import lyndon_tree, tree_nodes
from .noncrossing import CrossingError, InvariantError, NonCrossingLCE
from .runs import compute_runs_report, count_square_occurrences
from .text import Order, TextError, load_text
from .words import FAMILIES

EXIT_USAGE, EXIT_CROSSING, EXIT_CHECK = 1, 2, 3


class CheckFailed(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(args):
    data = _read(args.input)
    if args.mode == "bytes" and not args.keep_newline:
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return load_text(data, args.mode)


def _emit(args, lines: list[str], payload, meta: dict) -> None:
    if args.json:
        json.dump({"result": payload, "meta": meta}, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in lines))
        if args.stats:
            sys.stderr.write(json.dumps(meta, sort_keys=True) + "\n")


def _meta(args, t, start: float, comparisons: int | None, **extra) -> dict:
    meta = {
        "n": t.n,
        "mode": args.mode,
        "seed": getattr(args, "seed", None),
        "elapsed": round(time.perf_counter() - start, 6),
        "total_comparisons": comparisons,
    }
    meta.update(extra)
    return meta


def cmd_runs(args) -> int:
    t = _load(args)
    start = time.perf_counter()
    if args.oracle:
        runs, comparisons = sorted(oracle.naive_runs(t)), None
    else:
        report = compute_runs_report(t, strict=args.strict)
        runs, comparisons = report.runs, report.total_comparisons
        if args.verify and set(runs) != oracle.naive_runs(t):
            raise CheckFailed("runs differ from the brute-force oracle")
    meta = _meta(args, t, start, comparisons, count=len(runs))
    _emit(args, [str(r) for r in runs], [list(r) for r in runs], meta)
    return 0


def cmd_lyndon(args) -> int:
    t = _load(args)
    order = Order.parse(args.order)
    start = time.perf_counter()
    if args.oracle:
        tree, comparisons = oracle.naive_lyndon_tree(t, order), None
    else:
        backend = NonCrossingLCE(t, strict=args.strict)
        tree = lyndon_tree(t, order, backend)
        comparisons = backend.counter.total_symbol_comparisons
        if args.verify and tree != oracle.naive_lyndon_tree(t, order):
            raise CheckFailed("Lyndon tree differs from the brute-force oracle")
    nodes = [(iv.lo, iv.hi) for iv in tree_nodes(tree)]
    meta = _meta(args, t, start, comparisons, order=int(order), nodes=len(nodes))
    _emit(args, [f"{a} {b}" for a, b in nodes], [list(p) for p in nodes], meta)
    return 0


def cmd_squares(args) -> int:
    t = _load(args)
    start = time.perf_counter()
    if args.oracle:
        count, comparisons = oracle.naive_square_count(t), None
    else:
        report = compute_runs_report(t, strict=args.strict)
        count = count_square_occurrences(t, report.runs)
        comparisons = report.total_comparisons
        if args.verify and count != oracle.naive_square_count(t):
            raise CheckFailed("square count differs from the brute-force oracle")
    _emit(args, [str(count)], count, _meta(args, t, start, comparisons))
    return 0


def _read_queries(path: str) -> list[tuple[int, int]]:
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise TextError(f"{path}:{lineno}: expected two positions, got {line.strip()!r}")
            out.append((int(parts[0]), int(parts[1])))
    return out


def cmd_lce(args) -> int:
    t = _load(args)
    queries = _read_queries(args.queries)
    start = time.perf_counter()
    if args.oracle:
        answers = [oracle.naive_lce(t, a, b) for a, b in queries]
        _emit(args, [str(x) for x in answers], answers, _meta(args, t, start, None))
        return 0
    s = NonCrossingLCE(t, strict=args.strict)
    answers = [s.lce(a, b) for a, b in queries]
    st = s.stats()
    if args.verify and answers != [oracle.naive_lce(t, a, b) for a, b in queries]:
        raise CheckFailed("answers differ from the brute-force oracle")
    meta = _meta(args, t, start, st.total_comparisons, queries=len(queries), levels=st.as_dict())
    _emit(args, [str(x) for x in answers], answers, meta)
    if args.check_bounds:
        bad = st.bound_violations()
        if bad or st.forward_violations:
            raise CheckFailed(
                "; ".join(f"level {i}: {c} queries > 24n/2^i = {b:g}" for i, c, b in bad)
                or f"{st.forward_violations} forwarded-call violations"
            )
    return 0


def cmd_bench(args) -> int:
    families = args.family or list(FAMILIES)
    exps = range(args.min_exp, args.max_exp + 1)
    rows = work_scaling(families, exps, args.seed, args.workload)
    sys.stdout.write(format_table(rows, timing=args.timing))
    bad = [r for r in rows if r.runs is not None and not r.runs < r.n]
    if bad:
        raise CheckFailed(f"runs count not below n for {bad[0].family} n={bad[0].n}")
    if args.max_band is not None:
        wide = [f for f in families if band(rows, f) > args.max_band]
        if wide:
            raise CheckFailed(f"ratio band above {args.max_band} for {', '.join(wide)}")
    return 0


def cmd_gen(args) -> int:
    for a, b in oracle.gen_noncrossing_queries(args.n, args.q, args.seed):
        sys.stdout.write(f"{a} {b}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nclce", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def text_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", help="input file, or - for stdin")
        p.add_argument("--mode", choices=("bytes", "tokens"), default="bytes")
        p.add_argument("--keep-newline", action="store_true",
                       help="in bytes mode, keep a trailing newline as a symbol")
        p.add_argument("--strict", action="store_true", help="reject crossing queries")
        p.add_argument("--stats", action="store_true", help="JSON metadata line on stderr")
        p.add_argument("--json", action="store_true", help="single JSON document on stdout")
        p.add_argument("--oracle", action="store_true", help="use the brute-force reference")
        p.add_argument("--verify", action="store_true",
                       help="also run the brute-force reference and fail on mismatch")
        p.add_argument("--seed", type=int, default=None)
        p.set_defaults(func=func)
        return p

    text_command("runs", cmd_runs, "list all runs as 'start end period'")
    p = text_command("lyndon", cmd_lyndon, "Lyndon tree of $w in pre-order")
    p.add_argument("--order", choices=("0", "1"), default="0")
    text_command("squares", cmd_squares, "count square occurrences")
    p = text_command("lce", cmd_lce, "answer a batch of LCE queries")
    p.add_argument("--queries", required=True, help="file with one 'a b' query per line")
    p.add_argument("--check-bounds", action="store_true",
                   help="fail (exit 3) if a per-level query count exceeds 24n/2^i")

    p = sub.add_parser("bench", help="comparisons per n log n across word families")
    p.add_argument("--family", action="append", choices=FAMILIES)
    p.add_argument("--min-exp", type=int, default=10)
    p.add_argument("--max-exp", type=int, default=16)
    p.add_argument("--workload", choices=("runs", "lyndon"), default="runs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="add a wall-clock column")
    p.add_argument("--max-band", type=float, default=None,
                   help="fail if max/min ratio of a family exceeds this")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="random non-crossing query workload")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CrossingError as exc:
        print(f"nclce: crossing queries {exc.pair} and {exc.witness}", file=sys.stderr)
        return EXIT_CROSSING
    except (CheckFailed, InvariantError) as exc:
        print(f"nclce: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (TextError, ValueError, OSError) as exc:
        print(f"nclce: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
