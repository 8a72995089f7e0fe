"""Work-scaling measurements: symbol comparisons per n log2 n."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .lyndon import lyndon_tree
from .noncrossing import NonCrossingLCE
from .runs import compute_runs_report
from .text import Order
from .words import FAMILIES, make_word


@dataclass
class BenchRow:
    family: str
    n: int
    comparisons: int
    runs: int | None
    seconds: float

    @property
    def ratio(self) -> float:
        return self.comparisons / (self.n * math.log2(self.n))


def measure(family: str, n: int, seed: int = 0, workload: str = "runs") -> BenchRow:
    t = make_word(family, n, seed)
    start = time.perf_counter()
    if workload == "runs":
        report = compute_runs_report(t)
        comparisons, runs = report.total_comparisons, len(report.runs)
    elif workload == "lyndon":
        comparisons = 0
        for order in (Order.ORDER0, Order.ORDER1):
            backend = NonCrossingLCE(t)
            lyndon_tree(t, order, backend)
            comparisons += backend.counter.total_symbol_comparisons
        runs = None
    else:
        raise ValueError(f"unknown workload {workload!r}")
    return BenchRow(family, n, comparisons, runs, time.perf_counter() - start)


def work_scaling(families=FAMILIES, exponents=range(10, 17), seed: int = 0, workload: str = "runs"):
    return [measure(f, 2 ** e, seed, workload) for f in families for e in exponents]


def band(rows: list[BenchRow], family: str) -> float:
    """max / min of the comparison ratio over the sizes measured for ``family``."""
    ratios = [r.ratio for r in rows if r.family == family]
    return max(ratios) / min(ratios)


def format_table(rows: list[BenchRow], timing: bool = False) -> str:
    head = f"{'family':<11} {'n':>7} {'comparisons':>12} {'cmp/(n lg n)':>13} {'runs':>7}"
    if timing:
        head += f" {'seconds':>8}"
    lines = [head]
    for r in rows:
        runs = "-" if r.runs is None else str(r.runs)
        line = f"{r.family:<11} {r.n:>7} {r.comparisons:>12} {r.ratio:>13.4f} {runs:>7}"
        if timing:
            line += f" {r.seconds:>8.2f}"
        lines.append(line)
    for fam in dict.fromkeys(r.family for r in rows):
        lines.append(f"# {fam}: ratio band max/min = {band(rows, fam):.4f}")
    return "\n".join(lines) + "\n"
