"""Non-crossing LCE queries and their use for Lyndon trees and runs."""

from .limited import ComparisonCounter, limited_lce
from .lyndon import LyndonTree, lyndon_tree, tree_nodes
from .noncrossing import CrossingError, LevelStats, NonCrossingLCE, State, block_of
from .runs import Run, compute_runs, count_square_occurrences
from .text import Cmp, Interval, Order, Text, TextError, compare_at, load_text, reverse

__all__ = [
    "Cmp",
    "ComparisonCounter",
    "CrossingError",
    "Interval",
    "LevelStats",
    "LyndonTree",
    "NonCrossingLCE",
    "Order",
    "Run",
    "State",
    "Text",
    "TextError",
    "block_of",
    "compare_at",
    "compute_runs",
    "count_square_occurrences",
    "limited_lce",
    "load_text",
    "lyndon_tree",
    "reverse",
    "tree_nodes",
]
