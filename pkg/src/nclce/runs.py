"""All runs of a text from its two Lyndon trees, and square occurrences.

Each node [a, b] of either tree is a Lyndon factor with period p = b - a + 1.
Its periodicity is extended right by LCE(a, b + 1) and left by the same
query on the reversed text; a candidate reaching length 2p is a run. Six
independent query structures are used, one per non-crossing query group:
tree construction, right extension and left extension, for each order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .lyndon import LyndonTree, lyndon_tree, tree_nodes
from .noncrossing import NonCrossingLCE
from .text import Order, Text, reverse


class Run(NamedTuple):
    start: int
    end: int
    period: int

    def __str__(self) -> str:
        return f"{self.start} {self.end} {self.period}"


@dataclass
class RunsReport:
    runs: list[Run]
    trees: dict[Order, LyndonTree] = field(default_factory=dict)
    backends: dict[str, NonCrossingLCE] = field(default_factory=dict)

    @property
    def total_comparisons(self) -> int:
        return sum(b.counter.total_symbol_comparisons for b in self.backends.values())


def _new_backend(t: Text, strict: bool, debug: bool) -> NonCrossingLCE:
    return NonCrossingLCE(t, strict=strict, debug=debug)


def compute_runs_report(t: Text, strict: bool = False, debug: bool = False) -> RunsReport:
    """Runs plus the trees and backends used, for instrumentation."""
    n = t.n
    report = RunsReport(runs=[])
    if n < 2:
        return report
    rt = reverse(t)
    best: dict[tuple[int, int], int] = {}
    for order in (Order.ORDER0, Order.ORDER1):
        tag = f"order{int(order)}"
        build = report.backends[f"{tag}-tree"] = _new_backend(t, strict, debug)
        tree = report.trees[order] = lyndon_tree(t, order, build)
        right = report.backends[f"{tag}-right"] = _new_backend(t, strict, debug)
        left = report.backends[f"{tag}-left"] = _new_backend(rt, strict, debug)
        for node in tree_nodes(tree):
            a, b = node.lo, node.hi
            if a < 1:
                continue
            p = b - a + 1
            rho = right.lce(a, b + 1) if b < n else 0
            # common suffix of w[1, a-1] and w[1, b] in reversed coordinates
            lam = left.lce(n + 1 - b, n + 2 - a) if a > 1 else 0
            s, e = a - lam, b + rho
            if e - s + 1 >= 2 * p:
                cur = best.get((s, e))
                if cur is None or p < cur:
                    best[(s, e)] = p
    report.runs = sorted(Run(s, e, p) for (s, e), p in best.items())
    return report


def compute_runs(t: Text, strict: bool = False) -> set[Run]:
    return set(compute_runs_report(t, strict=strict).runs)


def squares_in_run(run: Run) -> int:
    length = run.end - run.start + 1
    total = 0
    k = 1
    while 2 * k * run.period <= length:
        total += length - 2 * k * run.period + 1
        k += 1
    return total


def count_square_occurrences(t: Text, runs=None) -> int:
    """Number of (position, length) pairs at which a square occurs.

    A square occurrence has a primitive root and sits in exactly one run
    with that root's length as period, so summing per run over multiples of
    the period counts each occurrence once.
    """
    if runs is None:
        runs = compute_runs(t)
    return sum(squares_in_run(r) for r in runs)
