"""Test-word families for benchmarks: unary, Fibonacci, Thue-Morse, random."""

from __future__ import annotations

import random

from .text import Text

FAMILIES = ("unary", "fibonacci", "thue-morse", "random")


def fibonacci_word(n: int) -> list[int]:
    """Prefix of length n of the infinite Fibonacci word over {0, 1} ("abaab...")."""
    a, b = [0], [0, 1]
    while len(b) < n:
        a, b = b, b + a
    return b[:n] if n > 1 else a[:n]


def thue_morse_word(n: int) -> list[int]:
    return [bin(i).count("1") & 1 for i in range(n)]


def random_word(n: int, sigma: int = 2, seed: int = 0) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(sigma) for _ in range(n)]


def make_word(family: str, n: int, seed: int = 0) -> Text:
    if family == "unary":
        return Text([0] * n)
    if family == "fibonacci":
        return Text(fibonacci_word(n))
    if family == "thue-morse":
        return Text(thue_morse_word(n))
    if family == "random":
        return Text(random_word(n, 2, seed))
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
