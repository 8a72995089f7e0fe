"""Lyndon trees of $w built right to left with a stack of subtree roots."""

from __future__ import annotations

from dataclasses import dataclass, field

from .text import Interval, Order, Text


@dataclass
class LyndonTree:
    """Full binary tree over positions 0..n, position 0 being the sentinel.

    ``split[(a, b)] = m`` for every internal node [a, b], whose children are
    [a, m] and [m + 1, b].
    """

    order: Order
    n: int
    split: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def root(self) -> Interval:
        return Interval(0, self.n)

    def children(self, a: int, b: int):
        m = self.split.get((a, b))
        if m is None:
            return None
        return Interval(a, m), Interval(m + 1, b)

    def nodes(self) -> list[Interval]:
        return tree_nodes(self)

    def dump(self) -> str:
        return "".join(f"{iv.lo} {iv.hi}\n" for iv in self.nodes())


def tree_nodes(tree: LyndonTree) -> list[Interval]:
    """All node intervals in pre-order (parents before children)."""
    out = []
    todo = [(0, tree.n)]
    split = tree.split
    while todo:
        a, b = todo.pop()
        out.append(Interval(a, b))
        m = split.get((a, b))
        if m is not None:
            todo.append((m + 1, b))
            todo.append((a, m))
    return out


def lyndon_tree(t: Text, order: Order = Order.ORDER0, backend=None, observer=None) -> LyndonTree:
    """Build LTree_order($w) with one LCE(k, a) query per merge test.

    ``backend`` answers ``lce(a, b)``; the queries issued are non-crossing,
    so a strict-mode :class:`~nclce.noncrossing.NonCrossingLCE` can be used
    to check that. A fresh default backend is created when omitted.
    ``observer(k, stack)`` is called after step k with the stack roots,
    bottom first.
    """
    from .noncrossing import NonCrossingLCE

    order = Order.parse(order)
    if backend is None:
        backend = NonCrossingLCE(t)
    w, n = t.data, t.n
    flip = order == Order.ORDER1
    split = {}
    # stack of (lo, hi) roots; top covers [k, l], the next one starts at l + 1
    stack: list[tuple[int, int]] = []
    for k in range(n, 0, -1):
        lo, hi = k, k
        while stack:
            a, b = stack[-1]
            c = backend.lce(k, a)
            if a + c > n:
                # w[a..] is a prefix of w[k..], hence smaller
                break
            x, y = w[k + c], w[a + c]
            if (x > y) if flip else (x < y):
                stack.pop()
                split[(lo, b)] = hi
                hi = b
            else:
                break
        stack.append((lo, hi))
        if observer is not None:
            observer(k, list(stack))
    # the sentinel at 0 is smaller than everything, so it absorbs the stack
    hi = 0
    while stack:
        _, b = stack.pop()
        split[(0, b)] = hi
        hi = b
    return LyndonTree(order, n, split)
