import itertools
import random

import pytest

from nclce import Text

APPENDIX = "ababaabaabbbaa"
LYNDON_EXAMPLE = "aaababaabbabb"


def binary_texts(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        for tup in itertools.product(b"ab", repeat=n):
            yield Text(tup)


def random_text(rng: random.Random, n: int, sigma: int) -> Text:
    return Text([rng.randrange(sigma) for _ in range(n)])


def periodic_text(rng: random.Random, n: int, sigma: int = 2, max_root: int = 6, flips: int = 3) -> Text:
    """A random root repeated to length n with a few point mutations."""
    root = [rng.randrange(sigma) for _ in range(rng.randint(1, max_root))]
    w = [root[i % len(root)] for i in range(n)]
    for _ in range(rng.randint(0, flips)):
        w[rng.randrange(n)] = rng.randrange(sigma)
    return Text(w)


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_report():
    """Collects one pass/fail line per acceptance criterion."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
