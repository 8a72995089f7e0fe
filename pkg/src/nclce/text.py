"""Text storage over a general ordered alphabet.

Positions are 1-based. Position ``n + 1`` stands for the end of the text: it
never equals a real symbol and sorts below every real symbol under both
orders, so that a proper prefix is lexicographically smaller.
"""

from __future__ import annotations

import enum
from typing import Iterable, NamedTuple


class TextError(ValueError):
    """Malformed input or an out-of-range position."""


class Order(enum.IntEnum):
    ORDER0 = 0  # the natural order of symbol codes
    ORDER1 = 1  # its exact reverse

    @classmethod
    def parse(cls, value) -> "Order":
        if isinstance(value, Order):
            return value
        try:
            return cls(int(value))
        except (TypeError, ValueError):
            raise TextError(f"unknown order {value!r}; expected 0 or 1") from None


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Interval(NamedTuple):
    """Closed interval [lo, hi] of positions."""

    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1


class Text:
    """Immutable symbol sequence.

    ``symbols`` keeps the codes as given; ``data`` is the same sequence with
    a dummy slot in front so that ``data[i]`` is the symbol at position ``i``.
    """

    __slots__ = ("symbols", "data", "n")

    def __init__(self, symbols: Iterable[int]):
        symbols = tuple(int(c) for c in symbols)
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "data", (None,) + symbols)
        object.__setattr__(self, "n", len(symbols))

    def __setattr__(self, name, value):
        raise AttributeError("Text is immutable")

    @classmethod
    def from_string(cls, s: str | bytes) -> "Text":
        if isinstance(s, str):
            s = s.encode("latin-1")
        return cls(s)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, pos: int) -> int:
        if not 1 <= pos <= self.n:
            raise TextError(f"position {pos} outside 1..{self.n}")
        return self.data[pos]

    def __eq__(self, other) -> bool:
        return isinstance(other, Text) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        if all(32 <= c < 127 for c in self.symbols):
            return f"Text({bytes(self.symbols).decode()!r})"
        return f"Text({list(self.symbols)!r})"

    def check_position(self, pos: int) -> None:
        if not 1 <= pos <= self.n + 1:
            raise TextError(f"position {pos} outside 1..{self.n + 1}")


def load_text(data: bytes | str, mode: str = "bytes") -> Text:
    """Build a Text from raw bytes or from whitespace-separated integer tokens."""
    if mode == "bytes":
        if isinstance(data, str):
            data = data.encode("latin-1")
        return Text(data)
    if mode != "tokens":
        raise TextError(f"unknown input mode {mode!r}")
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    symbols = []
    for idx, tok in enumerate(data.split()):
        if not tok.isdigit():
            raise TextError(f"token {idx} is not a non-negative integer: {tok!r}")
        symbols.append(int(tok))
    return Text(symbols)


def compare_at(t: Text, i: int, j: int, order: Order = Order.ORDER0) -> Cmp:
    """Compare the symbols at positions ``i`` and ``j`` under ``order``."""
    t.check_position(i)
    t.check_position(j)
    end = t.n + 1
    if i == j:
        return Cmp.EQUAL
    if i == end:
        return Cmp.LESS
    if j == end:
        return Cmp.GREATER
    x, y = t.data[i], t.data[j]
    if x == y:
        return Cmp.EQUAL
    less = x < y
    if order == Order.ORDER1:
        less = not less
    return Cmp.LESS if less else Cmp.GREATER


def reverse(t: Text) -> Text:
    return Text(t.symbols[::-1])


def symbol_key(order: Order):
    """Sort key mapping a symbol code to its rank under ``order``."""
    if order == Order.ORDER0:
        return lambda c: c
    return lambda c: -c

