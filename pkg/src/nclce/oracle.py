"""Brute-force references and workload generators.

Nothing here calls into the query structure, the Lyndon stack algorithm or
the runs pipeline; the fast modules are checked against these functions.
"""

from __future__ import annotations

import random
from typing import Iterable

import numpy as np

from .lyndon import LyndonTree
from .runs import Run
from .text import Order, Text, TextError

Pair = tuple[int, int]


def naive_lce(t: Text, i: int, j: int) -> int:
    t.check_position(i)
    t.check_position(j)
    w, n = t.data, t.n
    if i == j:
        return n - i + 1
    k = 0
    while i + k <= n and j + k <= n and w[i + k] == w[j + k]:
        k += 1
    return k


# -- periods and runs -------------------------------------------------------

def shortest_period(s) -> int:
    """Smallest p >= 1 with s[x] == s[x + p] for all valid x."""
    for p in range(1, len(s)):
        if all(s[x] == s[x + p] for x in range(len(s) - p)):
            return p
    return len(s)


def _is_run(w, n: int, a: int, b: int, p: int) -> bool:
    if 2 * p > b - a + 1:
        return False
    if a > 1 and w[a - 1] == w[a - 1 + p]:
        return False
    if b < n and w[b + 1] == w[b + 1 - p]:
        return False
    return True


def naive_runs(t: Text) -> set[Run]:
    """All runs, by taking every interval and its shortest period.

    Shortest periods of all intervals starting at ``a`` come from the border
    (failure) function of ``w[a:]``; O(n^2) overall.
    """
    w, n = t.data, t.n
    out = set()
    for a in range(1, n + 1):
        border = [0] * (n - a + 1)
        k = 0
        for m in range(1, n - a + 1):
            c = w[a + m]
            while k and w[a + k] != c:
                k = border[k - 1]
            if w[a + k] == c:
                k += 1
            border[m] = k
            length = m + 1
            p = length - k
            b = a + m
            if _is_run(w, n, a, b, p):
                out.add(Run(a, b, p))
    return out


def naive_runs_by_period(t: Text) -> set[Run]:
    """All runs, found as maximal stretches with ``w[x] == w[x + p]`` for each p.

    A stretch of ``L >= p`` agreeing positions gives a factor of length
    ``L + p`` with period p that cannot be extended. It is a run iff no
    proper divisor of p is also a period (any shorter period must divide p
    once the factor is at least 2p long).
    """
    n = t.n
    w = np.asarray(t.symbols, dtype=np.int64)
    out = set()
    for p in range(1, n // 2 + 1):
        eq = np.concatenate(([False], w[:-p] == w[p:], [False]))
        edges = np.flatnonzero(eq[1:] != eq[:-1])
        starts, stops = edges[0::2], edges[1::2]  # 0-based [start, stop)
        for s0, s1 in zip(starts.tolist(), stops.tolist()):
            if s1 - s0 < p:
                continue
            a, b = s0 + 1, s1 + p
            seg = w[a - 1:b]
            if any(p % q == 0 and np.array_equal(seg[:-q], seg[q:]) for q in range(1, p)):
                continue
            out.add(Run(a, b, p))
    return out


def naive_square_count(t: Text) -> int:
    """Number of pairs (i, m) with w[i, i+m-1] == w[i+m, i+2m-1]."""
    w = np.asarray(t.symbols, dtype=np.int64)
    n = t.n
    total = 0
    for m in range(1, n // 2 + 1):
        eq = (w[:-m] == w[m:]).astype(np.int64)
        # a square of half-length m at i needs eq[i .. i+m-1] all true
        csum = np.concatenate(([0], np.cumsum(eq)))
        windows = csum[m:] - csum[:-m]
        total += int(np.count_nonzero(windows[: n - 2 * m + 1] == m))
    return total


def naive_square_count_slices(t: Text) -> int:
    s = t.symbols
    n = len(s)
    return sum(
        1
        for m in range(1, n // 2 + 1)
        for i in range(n - 2 * m + 1)
        if s[i:i + m] == s[i + m:i + 2 * m]
    )


# -- Lyndon words and trees -------------------------------------------------

def _keys(t: Text, order: Order) -> list:
    """Order keys for $w: position 0 holds the sentinel, smallest of all."""
    sign = 1 if Order.parse(order) == Order.ORDER0 else -1
    return [float("-inf")] + [sign * c for c in t.symbols]


def is_lyndon(t: Text, lo: int, hi: int, order: Order = Order.ORDER0) -> bool:
    """Is w[lo, hi] strictly smaller than each of its proper suffixes?

    Position 0 denotes the sentinel of ``order``.
    """
    if not 0 <= lo <= hi <= t.n:
        raise TextError(f"bad interval [{lo}, {hi}]")
    keys = _keys(t, order)
    return _is_lyndon_keys(keys, lo, hi)


def _is_lyndon_keys(keys, lo: int, hi: int) -> bool:
    word = keys[lo:hi + 1]
    return all(word < keys[k:hi + 1] for k in range(lo + 1, hi + 1))


def naive_lyndon_tree(t: Text, order: Order = Order.ORDER0) -> LyndonTree:
    """Recursive standard factorization of $w."""
    order = Order.parse(order)
    keys = _keys(t, order)
    split = {}
    todo = [(0, t.n)]
    while todo:
        lo, hi = todo.pop()
        if lo == hi:
            continue
        m = next(m for m in range(lo + 1, hi + 1) if _is_lyndon_keys(keys, m, hi))
        split[(lo, hi)] = m - 1
        todo.append((lo, m - 1))
        todo.append((m, hi))
    return LyndonTree(order, t.n, split)


# -- pair sets --------------------------------------------------------------

def crosses(p: Pair, q: Pair) -> bool:
    (a, b), (c, d) = p, q
    return a < c < b < d or c < a < d < b


def is_noncrossing(pairs: Iterable[Pair]):
    """True if no two pairs cross, else the first crossing witness found."""
    ps = sorted(set(pairs))
    if len(ps) < 2:
        return True
    arr = np.asarray(ps, dtype=np.int64)
    a, b = arr[:, 0], arr[:, 1]
    # crossing[x, y]: a_x < a_y < b_x < b_y
    crossing = (a[:, None] < a[None, :]) & (a[None, :] < b[:, None]) & (b[:, None] < b[None, :])
    hits = np.argwhere(crossing)
    if len(hits) == 0:
        return True
    x, y = hits[0]
    return ps[x], ps[y]


def is_noncrossing_slow(pairs: Iterable[Pair]):
    ps = sorted(set(pairs))
    for x in range(len(ps)):
        for y in range(len(ps)):
            if ps[x][0] < ps[y][0] and crosses(ps[x], ps[y]):
                return ps[x], ps[y]
    return True


def shrink_pairs(pairs: Iterable[Pair], t: int) -> set[Pair]:
    if t < 1:
        raise ValueError("t must be positive")
    return {(-(-a // t), -(-b // t)) for a, b in pairs}


def _laminar_family(n: int, rng: random.Random) -> set[Pair]:
    out = set()
    todo = [(1, n)]
    while todo:
        lo, hi = todo.pop()
        if hi <= lo:
            continue
        out.add((lo, hi))
        k = min(hi - lo, rng.randint(1, 3))
        cuts = sorted(rng.sample(range(lo, hi), k))
        start = lo
        for c in cuts + [hi]:
            x, y = start, c
            if y - x >= 2 and rng.random() < 0.3:
                x += rng.randint(0, 1)
                y -= rng.randint(0, 1)
            if rng.random() < 0.9:
                todo.append((x, y))
            start = c + 1
    return out


def gen_noncrossing_queries(n: int, q: int, seed: int = 0) -> list[Pair]:
    """Random on-line order of ``q`` pairs drawn from a non-crossing pool.

    The pool is a random laminar interval family plus every ``(a, a)`` and
    ``(a, a + 1)``. When ``q`` exceeds the pool (which has fewer than 3n
    pairs), pairs repeat.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    pool = _laminar_family(n, rng)
    pool.update((a, a) for a in range(1, n + 1))
    pool.update((a, a + 1) for a in range(1, n))
    pool = sorted(pool)
    if q <= len(pool):
        out = rng.sample(pool, q)
    else:
        out = pool + [rng.choice(pool) for _ in range(q - len(pool))]
        rng.shuffle(out)
    return out
