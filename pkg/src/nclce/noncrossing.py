"""On-line LCE queries for non-crossing sequences of position pairs.

A query (a, b) enters level 0. At level i it is first checked with a scan
capped at 3 * 2**i; a shorter answer is final. Otherwise the query is
*relevant* and goes to the block-pair owning it, i.e. the pair of aligned
blocks of size 2**i holding a and b. A block-pair moves through four states
and asks at most four queries one level up over its lifetime:

    initial  -> visited(a0, b0, L)        forwards the query itself
    visited  -> full(dA, dB)              two queries (x, x + p), p <= 2**(i+1)
    full     -> fullplus(dA, dB, L2)      forwards the query itself

In ``full``/``fullplus`` the factors from the right ends of both blocks up to
dA - 1 and dB - 1 share a period p; an answer then follows from where the
query sits relative to dA and dB.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .limited import ComparisonCounter, lcp_scan
from .text import Text, TextError


class State(enum.IntEnum):
    INITIAL = 0
    VISITED = 1
    FULL = 2
    FULLPLUS = 3


class CrossingError(Exception):
    """A strict-mode query crosses an earlier one."""

    def __init__(self, pair, witness):
        self.pair = pair
        self.witness = witness
        super().__init__(f"query {pair} crosses earlier query {witness}")


class InvariantError(AssertionError):
    """A debug-mode self check failed."""


def block_of(level: int, pos: int) -> int:
    """Index of the size-2**level block holding ``pos`` (ceil(pos / 2**level))."""
    if pos < 1:
        raise TextError(f"position {pos} must be positive")
    return ((pos - 1) >> level) + 1


class BlockPair:
    __slots__ = ("state", "x", "y", "z", "forwarded", "period", "ends")

    def __init__(self):
        self.state = State.INITIAL
        # visited: x=a0, y=b0, z=L; full: x=dA, y=dB; fullplus: z=L2
        self.x = self.y = self.z = 0
        self.forwarded = 0
        # debug builds only: witness period and (max A, max B)
        self.period = 0
        self.ends = (0, 0)

    def data(self) -> tuple:
        if self.state == State.VISITED:
            return (self.x, self.y, self.z)
        if self.state == State.FULL:
            return (self.x, self.y)
        if self.state == State.FULLPLUS:
            return (self.x, self.y, self.z)
        return ()

    def __repr__(self) -> str:
        return f"{self.state.name.lower()}{self.data()}"


@dataclass
class LevelStats:
    n: int
    queries_asked: list[int] = field(default_factory=list)
    block_pairs_created: list[int] = field(default_factory=list)
    forwarded_calls: list[int] = field(default_factory=list)
    max_forwarded_per_pair: list[int] = field(default_factory=list)
    transitions: dict[str, int] = field(default_factory=dict)
    total_comparisons: int = 0
    top_level_queries: int = 0
    forward_violations: int = 0
    working_sequence: list | None = None

    @property
    def levels(self) -> int:
        return len(self.queries_asked)

    def level_bound(self, i: int) -> float:
        return 24 * self.n / 2 ** i

    def bound_violations(self) -> list[tuple[int, int, float]]:
        """Levels i >= 1 whose query count exceeds 24n / 2**i."""
        return [
            (i, c, self.level_bound(i))
            for i, c in enumerate(self.queries_asked)
            if i >= 1 and c > self.level_bound(i)
        ]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "levels": self.levels,
            "queries_asked": list(self.queries_asked),
            "block_pairs_created": list(self.block_pairs_created),
            "forwarded_calls": list(self.forwarded_calls),
            "max_forwarded_per_pair": list(self.max_forwarded_per_pair),
            "transitions": dict(self.transitions),
            "total_comparisons": self.total_comparisons,
            "top_level_queries": self.top_level_queries,
            "forward_violations": self.forward_violations,
            "bound_violations": [list(v) for v in self.bound_violations()],
        }


class _MaxTree:
    """Point-update / range-argmax over 1..size (min via negated values)."""

    def __init__(self, size: int, empty: int):
        m = 1
        while m < size + 1:
            m *= 2
        self.m = m
        self.empty = empty
        self.val = [empty] * (2 * m)
        self.arg = [0] * (2 * m)

    def raise_to(self, pos: int, value: int) -> None:
        i = pos + self.m
        if value <= self.val[i]:
            return
        self.val[i], self.arg[i] = value, pos
        i //= 2
        while i:
            l, r = 2 * i, 2 * i + 1
            j = l if self.val[l] >= self.val[r] else r
            if self.val[i] == self.val[j] and self.arg[i] == self.arg[j]:
                break
            self.val[i], self.arg[i] = self.val[j], self.arg[j]
            i //= 2

    def query(self, lo: int, hi: int) -> tuple[int, int]:
        """(max value, position) over [lo, hi]; (empty, 0) if the range is empty."""
        best, where = self.empty, 0
        lo += self.m
        hi += self.m + 1
        while lo < hi:
            if lo & 1:
                if self.val[lo] > best:
                    best, where = self.val[lo], self.arg[lo]
                lo += 1
            if hi & 1:
                hi -= 1
                if self.val[hi] > best:
                    best, where = self.val[hi], self.arg[hi]
            lo //= 2
            hi //= 2
        return best, where


class CrossingLog:
    """Set of asked pairs with an O(log n) crossing test for a new pair."""

    def __init__(self, n: int):
        self.pairs: set[tuple[int, int]] = set()
        self._right = _MaxTree(n, 0)     # left end a' -> max right end b'
        self._left = _MaxTree(n, -(n + 2))  # right end b' -> -(min left end a')

    def find_crossing(self, a: int, b: int):
        if b - a < 2:
            return None
        # some (a', b') with a < a' < b < b'
        best, pos = self._right.query(a + 1, b - 1)
        if best > b:
            return (pos, best)
        # some (a', b') with a' < a < b' < b
        best, pos = self._left.query(a + 1, b - 1)
        if -best < a:
            return (-best, pos)
        return None

    def add(self, a: int, b: int) -> None:
        if (a, b) in self.pairs:
            return
        self.pairs.add((a, b))
        self._right.raise_to(a, b)
        self._left.raise_to(b, -a)


class NonCrossingLCE:
    """LCE structure for an on-line sequence of non-crossing queries.

    ``strict`` rejects a query crossing an earlier one with
    :class:`CrossingError` (the state is left untouched). ``debug`` records the
    per-level query sets and re-verifies stored witness data by brute force.
    ``trace`` keeps the block-pairs touched by the most recent query.
    """

    def __init__(self, text: Text, strict: bool = False, debug: bool = False, trace: bool = False):
        self.text = text
        self.n = text.n
        self.strict = strict
        self.debug = debug
        self.trace = trace
        self.counter = ComparisonCounter()
        self.levels: list[dict[int, BlockPair]] = []
        self._calls: list[int] = []
        self._forwarded: list[int] = []
        self._max_forwarded: list[int] = []
        self._transitions = {s.name.lower(): 0 for s in State if s != State.INITIAL}
        self._forward_violations = 0
        self._top_queries = 0
        self._stride = self.n + 2
        self.log = CrossingLog(self.n) if strict else None
        self.level_sets: list[set[tuple[int, int]]] = []
        self.working_sequence: list = []

    # -- public API ----------------------------------------------------

    def lce(self, a: int, b: int) -> int:
        n = self.n
        if not (1 <= a <= n and 1 <= b <= n):
            raise TextError(f"query ({a}, {b}) outside 1..{n}")
        if a > b:
            a, b = b, a
        if self.log is not None:
            witness = self.log.find_crossing(a, b)
            if witness is not None:
                raise CrossingError((a, b), witness)
            self.log.add(a, b)
        self._top_queries += 1
        if self.trace:
            self.working_sequence = []
        if a == b:
            return n - a + 1
        return self._level(0, a, b)

    __call__ = lce

    def stats(self) -> LevelStats:
        return LevelStats(
            n=self.n,
            queries_asked=list(self._calls),
            block_pairs_created=[len(lv) for lv in self.levels],
            forwarded_calls=list(self._forwarded),
            max_forwarded_per_pair=list(self._max_forwarded),
            transitions=dict(self._transitions),
            total_comparisons=self.counter.total_symbol_comparisons,
            top_level_queries=self._top_queries,
            forward_violations=self._forward_violations,
            working_sequence=list(self.working_sequence) if self.trace else None,
        )

    def state_of(self, level: int, a: int, b: int) -> BlockPair | None:
        if level >= len(self.levels):
            return None
        return self.levels[level].get(self._key(level, a, b))

    # -- level dispatch ----------------------------------------------------

    def _key(self, i: int, a: int, b: int) -> int:
        return (((a - 1) >> i) + 1) * self._stride + ((b - 1) >> i) + 1

    def _grow(self, i: int) -> None:
        while len(self._calls) <= i:
            self._calls.append(0)
            self._forwarded.append(0)
            self._max_forwarded.append(0)
            self.levels.append({})
            self.level_sets.append(set())

    def _level(self, i: int, a: int, b: int) -> int:
        """LCE(a, b) for a < b, asked at level i."""
        if i >= len(self._calls):
            self._grow(i)
        self._calls[i] += 1
        if self.debug:
            self.level_sets[i].add((a, b))
        cap = 3 << i
        n = self.n
        room = n + 1 - b
        m = cap if cap < room else room
        if m <= 0:
            return 0
        k = lcp_scan(self.text.data, a, b, m)
        self.counter.total_symbol_comparisons += k + 1 if k < m else k
        if k < cap:
            return k
        key = self._key(i, a, b)
        bp = self.levels[i].get(key)
        if bp is None:
            bp = self.levels[i][key] = BlockPair()
        if self.trace:
            self.working_sequence.append((i, ((a - 1) >> i) + 1, ((b - 1) >> i) + 1, repr(bp)))
        st = bp.state
        if st == State.INITIAL:
            return self._initial(i, bp, a, b)
        if st == State.VISITED:
            return self._visited(i, bp, a, b)
        return self._full(i, bp, a, b)

    def _forward(self, i: int, bp: BlockPair, x: int, y: int, query: tuple[int, int]) -> int:
        bp.forwarded += 1
        self._forwarded[i] += 1
        if bp.forwarded > self._max_forwarded[i]:
            self._max_forwarded[i] = bp.forwarded
        if bp.forwarded > 4 or not ((x, y) == query or x < y <= x + (2 << i)):
            self._forward_violations += 1
        return self._level(i + 1, x, y)

    def _set_state(self, bp: BlockPair, state: State) -> None:
        if state <= bp.state:
            raise InvariantError(f"state would move backwards: {bp.state!r} -> {state!r}")
        bp.state = state
        self._transitions[state.name.lower()] += 1

    # -- block-pair handlers ----------------------------------------------------

    def _initial(self, i: int, bp: BlockPair, a: int, b: int) -> int:
        L = self._forward(i, bp, a, b, (a, b))
        bp.x, bp.y, bp.z = a, b, L
        self._set_state(bp, State.VISITED)
        if self.debug:
            self._verify(i, bp)
        return L

    def _visited(self, i: int, bp: BlockPair, a: int, b: int) -> int:
        a0, b0, L = bp.x, bp.y, bp.z
        if a - a0 == b - b0:
            # same diagonal: both suffixes start a - a0 later (or earlier)
            return L - (a - a0)
        p = abs((a - a0) - (b - b0))
        a1 = (((a - 1) >> i) + 1) << i  # max A
        b1 = (((b - 1) >> i) + 1) << i  # max B
        dA = a1 + p + self._forward(i, bp, a1, a1 + p, (a, b))
        dB = b1 + p + self._forward(i, bp, b1, b1 + p, (a, b))
        bp.x, bp.y, bp.z = dA, dB, 0
        if self.debug:
            bp.period, bp.ends = p, (a1, b1)
        self._set_state(bp, State.FULL)
        if self.debug:
            self._verify(i, bp)
        return self._full(i, bp, a, b)

    def _full(self, i: int, bp: BlockPair, a: int, b: int) -> int:
        dA, dB = bp.x, bp.y
        if dA - a != dB - b:
            return min(dA - a, dB - b)
        if bp.state == State.FULL:
            bp.z = self._forward(i, bp, a, b, (a, b)) - (dA - a)
            self._set_state(bp, State.FULLPLUS)
            if self.debug:
                self._verify(i, bp)
        return dA - a + bp.z

    # -- debug checks ------------------------------------------------------

    def _verify(self, i: int, bp: BlockPair) -> None:
        from .oracle import naive_lce

        t = self.text
        if bp.state == State.VISITED:
            a0, b0, L = bp.x, bp.y, bp.z
            if L != naive_lce(t, a0, b0) or L < 3 << i:
                raise InvariantError(f"level {i}: bad visited witness {bp!r}")
            return
        dA, dB, p = bp.x, bp.y, bp.period
        if not 1 <= p <= 2 << i:
            raise InvariantError(f"level {i}: witness period {p} out of range")
        w, n = t.data, t.n
        for end, d in ((bp.ends[0], dA), (bp.ends[1], dB)):
            if d > n + 1 or d - end < p + (1 << i):
                raise InvariantError(f"level {i}: witness {d} too short or beyond n + 1")
            if any(w[x] != w[x + p] for x in range(end, d - p)):
                raise InvariantError(f"level {i}: w[{end}, {d - 1}] lacks period {p}")
            if d <= n and w[d] == w[d - p]:
                raise InvariantError(f"level {i}: period {p} does not break at {d}")
        if bp.state == State.FULLPLUS and bp.z != naive_lce(t, dA, dB):
            raise InvariantError(f"level {i}: bad stored LCE in {bp!r}")
