"""Finite binary relations stored as frozensets of pairs.

The closure routines map the ground set onto bit positions and work on
integer rows; callers only ever see pair sets.
"""
from __future__ import annotations

from typing import Hashable, Iterable

Pair = tuple
Relation = frozenset


def sort_key(x):
    """Total, deterministic ordering for ground elements of any kind we use
    (event names, occurrences, integers, and frozensets of those)."""
    if isinstance(x, (frozenset, set)):
        return (2, len(x), tuple(sorted(sort_key(y) for y in x)))
    if isinstance(x, tuple):
        return (1, x)
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        return (3, repr(x))
    if isinstance(x, int):
        return (0, "", x)
    return (0, x, 0)


def ordered(xs: Iterable) -> list:
    return sorted(xs, key=sort_key)


def ordered_pairs(rel: Iterable[Pair]) -> list:
    return sorted(rel, key=lambda p: (sort_key(p[0]), sort_key(p[1])))


def identity(ground: Iterable[Hashable]) -> Relation:
    return frozenset((x, x) for x in ground)


def inverse(rel: Iterable[Pair]) -> Relation:
    return frozenset((y, x) for x, y in rel)


def compose(r: Iterable[Pair], s: Iterable[Pair]) -> Relation:
    """``r ∘ s`` read left to right: x r y s z gives (x, z)."""
    succ: dict = {}
    for y, z in s:
        succ.setdefault(y, set()).add(z)
    return frozenset((x, z) for x, y in r for z in succ.get(y, ()))


def is_irreflexive(rel: Iterable[Pair]) -> bool:
    return all(x != y for x, y in rel)


def is_transitive(rel: Iterable[Pair]) -> bool:
    rel = frozenset(rel)
    return compose(rel, rel) <= rel


def is_partial_order(rel: Iterable[Pair]) -> bool:
    rel = frozenset(rel)
    return is_irreflexive(rel) and is_transitive(rel)


class Indexed:
    """A ground set with a fixed element <-> bit position mapping."""

    def __init__(self, ground: Iterable[Hashable]):
        self.elems = ordered(ground)
        self.pos = {x: i for i, x in enumerate(self.elems)}
        self.n = len(self.elems)

    def rows(self, rel: Iterable[Pair]) -> list[int]:
        rows = [0] * self.n
        pos = self.pos
        for x, y in rel:
            rows[pos[x]] |= 1 << pos[y]
        return rows

    def relation(self, rows: list[int]) -> Relation:
        elems = self.elems
        out = []
        for i, row in enumerate(rows):
            j = 0
            while row:
                if row & 1:
                    out.append((elems[i], elems[j]))
                row >>= 1
                j += 1
        return frozenset(out)

    def members(self, mask: int) -> list:
        return [self.elems[j] for j in range(self.n) if mask >> j & 1]


def closure_rows(rows: list[int], reflexive: bool = True) -> list[int]:
    """Warshall's algorithm on bit rows."""
    rows = list(rows)
    n = len(rows)
    if reflexive:
        for i in range(n):
            rows[i] |= 1 << i
    for k in range(n):
        bit = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return rows


def transitive_closure(ground: Iterable[Hashable], rel: Iterable[Pair]) -> Relation:
    ix = Indexed(ground)
    return ix.relation(closure_rows(ix.rows(rel), reflexive=False))


def reflexive_transitive_closure(ground: Iterable[Hashable], rel: Iterable[Pair]) -> Relation:
    ix = Indexed(ground)
    return ix.relation(closure_rows(ix.rows(rel), reflexive=True))


def covering(rel: Iterable[Pair]) -> Relation:
    """Pairs of ``rel`` with no intermediate element: x R y and no z with
    x R z R y.  For a partial order this is its Hasse diagram."""
    rel = frozenset(rel)
    succ: dict = {}
    for x, y in rel:
        succ.setdefault(x, set()).add(y)
    out = []
    for x, y in rel:
        if not any(y in succ.get(z, ()) for z in succ[x]):
            out.append((x, y))
    return frozenset(out)


def restrict(rel: Iterable[Pair], subset) -> Relation:
    return frozenset((x, y) for x, y in rel if x in subset and y in subset)
