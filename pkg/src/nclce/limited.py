"""Capped LCE queries answered by direct scanning.

The counter records how many symbol comparisons a left-to-right scan makes:
``min(LCE, cap)`` matches plus one for the mismatch when the scan stops on a
pair of real, different symbols. Long matches are verified with slice
comparisons, which does not change the count.
"""

from __future__ import annotations

from .text import Text

_GALLOP_START = 8


class ComparisonCounter:
    __slots__ = ("total_symbol_comparisons",)

    def __init__(self) -> None:
        self.total_symbol_comparisons = 0

    def __repr__(self) -> str:
        return f"ComparisonCounter({self.total_symbol_comparisons})"


def lcp_scan(data, i: int, j: int, m: int) -> int:
    """Length of the common prefix of ``data[i:i+m]`` and ``data[j:j+m]``."""
    k = 0
    while k < m and k < _GALLOP_START:
        if data[i + k] != data[j + k]:
            return k
        k += 1
    step = _GALLOP_START
    while k < m:
        s = min(step, m - k)
        if data[i + k:i + k + s] == data[j + k:j + k + s]:
            k += s
            step *= 2
            continue
        # mismatch inside the chunk: binary search for it
        lo, hi = k, k + s - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if data[i + lo:i + mid + 1] == data[j + lo:j + mid + 1]:
                lo = mid + 1
            else:
                hi = mid
        return lo
    return k


def limited_lce(t: Text, i: int, j: int, cap: int, ctr: ComparisonCounter | None = None) -> int:
    """Return ``min(LCE(i, j), cap)``."""
    t.check_position(i)
    t.check_position(j)
    if cap < 0:
        raise ValueError("cap must be non-negative")
    return _limited(t.data, t.n, i, j, cap, ctr)


def _limited(data, n: int, i: int, j: int, cap: int, ctr: ComparisonCounter | None) -> int:
    # unchecked variant used on hot paths
    if i == j:
        return min(cap, n - i + 1)
    room = n + 1 - (i if i > j else j)
    m = cap if cap < room else room
    if m <= 0:
        return 0
    k = lcp_scan(data, i, j, m)
    if ctr is not None:
        ctr.total_symbol_comparisons += k + 1 if k < m else k
    return k
