"""Relational structures, stratified order structures and their algebra.

A relational structure is ``(X, prec, wk)``; when it satisfies S1-S4 it is
an so-structure with causality ``prec`` (≺) and weak causality ``wk`` (⊏).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import NamedTuple

import networkx as nx

from .errors import GroundTooLarge, InvalidStructure, NotCovering
from .relations import Indexed, closure_rows, covering, ordered, ordered_pairs, sort_key
from .stepseq import StratifiedOrder

MAX_GROUND = 10


@dataclass(frozen=True)
class RelationalStructure:
    ground: frozenset
    prec: frozenset
    wk: frozenset

    def __post_init__(self):
        ground = frozenset(self.ground)
        prec = frozenset(tuple(p) for p in self.prec)
        wk = frozenset(tuple(p) for p in self.wk)
        for x, y in prec | wk:
            if x not in ground or y not in ground:
                raise InvalidStructure(f"pair ({x}, {y}) leaves the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "wk", wk)

    def __le__(self, other: RelationalStructure) -> bool:
        """Extension order: same ground, both relations included."""
        return (self.ground == other.ground and self.prec <= other.prec
                and self.wk <= other.wk)

    def __str__(self):
        def show(rel):
            return " ".join(f"{x}->{y}" for x, y in ordered_pairs(rel))
        return (f"ground: {' '.join(str(x) for x in ordered(self.ground))}\n"
                f"prec: {show(self.prec)}\nwk: {show(self.wk)}")


SoStructure = RelationalStructure


class Violation(NamedTuple):
    rule: str
    witness: tuple

    def __str__(self):
        return f"{self.rule}: " + ", ".join(str(w) for w in self.witness)


class Report(NamedTuple):
    """Outcome of a rule check; truthy iff no rule is violated."""

    ok: bool
    violations: tuple

    def __bool__(self):
        return self.ok

    @classmethod
    def of(cls, violations) -> Report:
        violations = tuple(violations)
        return cls(not violations, violations)


def check_so_axioms(rs: RelationalStructure) -> Report:
    """S1-S4, first witness per axiom in canonical element order."""
    xs = ordered(rs.ground)
    prec, wk = rs.prec, rs.wk
    found = {}
    for a in xs:
        if (a, a) in wk:
            found["S1"] = (a,)
            break
    for a, b in ordered_pairs(prec):
        if (a, b) not in wk:
            found["S2"] = (a, b)
            break
    for a, b, c in product(xs, repeat=3):
        if len(found) == 4:
            break
        ab_wk = (a, b) in wk
        if "S3" not in found and ab_wk and (b, c) in wk and a != c and (a, c) not in wk:
            found["S3"] = (a, b, c)
        if "S4" not in found and (a, c) not in prec:
            if (ab_wk and (b, c) in prec) or ((a, b) in prec and (b, c) in wk):
                found["S4"] = (a, b, c)
    return Report.of(Violation(rule, found[rule]) for rule in ("S1", "S2", "S3", "S4")
                     if rule in found)


def is_so_structure(rs: RelationalStructure) -> bool:
    return check_so_axioms(rs).ok


def so_from_stratified(order: StratifiedOrder) -> SoStructure:
    """(X, ⊲, ⊲⌢)."""
    return RelationalStructure(order.ground, order.relation(), order.not_greater())


def _diamond_rows(rs: RelationalStructure):
    ix = Indexed(rs.ground)
    r1 = ix.rows(rs.prec)
    both = [a | b for a, b in zip(r1, ix.rows(rs.wk))]
    reach = closure_rows(both, reflexive=True)
    strong = []
    for i in range(ix.n):
        row = 0
        mid = reach[i]
        j = 0
        while mid:
            if mid & 1:
                succ = r1[j]
                k = 0
                while succ:
                    if succ & 1:
                        row |= reach[k]
                    succ >>= 1
                    k += 1
            mid >>= 1
            j += 1
        strong.append(row)
    return ix, strong, reach


def diamond_closure(rs: RelationalStructure) -> RelationalStructure:
    """(X, (R1∪R2)* ∘ R1 ∘ (R1∪R2)*, (R1∪R2)* minus identity)."""
    ix, strong, reach = _diamond_rows(rs)
    weak = [row & ~(1 << i) for i, row in enumerate(reach)]
    return RelationalStructure(rs.ground, ix.relation(strong), ix.relation(weak))


def is_diamond_valid(rs: RelationalStructure) -> bool:
    """True iff the ◊-closure is an so-structure."""
    _, strong, _ = _diamond_rows(rs)
    return not any(row >> i & 1 for i, row in enumerate(strong))


def _check_ground(rs: RelationalStructure, max_ground: int) -> None:
    if len(rs.ground) > max_ground:
        raise GroundTooLarge(f"{len(rs.ground)} elements exceeds the extension bound {max_ground}")


def _partition_masks(n: int):
    """Ordered set partitions of range(n) as tuples of bitmasks."""
    def rec(remaining: int):
        if not remaining:
            yield ()
            return
        sub = remaining
        while sub:
            for rest in rec(remaining & ~sub):
                yield (sub,) + rest
            sub = (sub - 1) & remaining
    yield from rec((1 << n) - 1)


def ordered_partitions(items: list):
    """Every ordered set partition of ``items`` (Fubini-many)."""
    for masks in _partition_masks(len(items)):
        yield tuple(frozenset(items[j] for j in range(len(items)) if m >> j & 1) for m in masks)


def brute_force_extensions(S: SoStructure, max_ground: int = MAX_GROUND) -> list:
    """Stratified extensions by filtering every ordered partition of X.

    A partition B_1 ... B_k passes when no element of B_i has a
    ≺-predecessor in B_i or later, nor a ⊏-predecessor later.
    """
    _check_ground(S, max_ground)
    ix = Indexed(S.ground)
    prec_pred = ix.rows(frozenset((b, a) for a, b in S.prec))
    wk_pred = ix.rows(frozenset((b, a) for a, b in S.wk))
    found = []
    for masks in _partition_masks(ix.n):
        later = 0
        ok = True
        for m in reversed(masks):
            here = m | later
            j = 0
            mm = m
            while mm:
                if mm & 1 and (prec_pred[j] & here or wk_pred[j] & later):
                    ok = False
                    break
                mm >>= 1
                j += 1
            if not ok:
                break
            later = here
        if ok:
            found.append(StratifiedOrder(tuple(frozenset(ix.members(m)) for m in masks)))
    return sorted(found, key=_order_key(S.ground))


def _order_key(ground):
    """Sort key for orders on ``ground``: block by block, as sort_key orders
    frozensets, but through precomputed element ranks."""
    rank = {x: i for i, x in enumerate(ordered(ground))}

    def key(order: StratifiedOrder):
        return tuple((len(b), sorted(rank[x] for x in b)) for b in order.blocks)
    return key


def stratified_extensions(S: SoStructure, max_ground: int = MAX_GROUND) -> list:
    """All stratified orders ⊲ on X with ≺ ⊆ ⊲ and ⊏ ⊆ ⊲⌢.

    Ordered partitions are built block by block; a block may only take
    elements whose ≺-predecessors are all placed already and whose
    remaining ⊏-predecessors join the same block.  Prefixes violating
    that are never extended, so the result equals the unpruned filter in
    :func:`brute_force_extensions`.
    """
    _check_ground(S, max_ground)
    ix = Indexed(S.ground)
    n = ix.n
    prec_pred = [0] * n
    wk_pred = [0] * n
    for a, b in S.prec:
        prec_pred[ix.pos[b]] |= 1 << ix.pos[a]
    for a, b in S.wk:
        wk_pred[ix.pos[b]] |= 1 << ix.pos[a]
    found = []

    def rec(remaining: int, prefix: list):
        if not remaining:
            found.append(StratifiedOrder(tuple(frozenset(ix.members(m)) for m in prefix)))
            return
        avail = 0
        for j in range(n):
            if remaining >> j & 1 and not prec_pred[j] & remaining:
                avail |= 1 << j
        sub = avail
        while sub:
            ok = True
            m = sub
            j = 0
            while m:
                if m & 1 and wk_pred[j] & remaining & ~sub:
                    ok = False
                    break
                m >>= 1
                j += 1
            if ok:
                prefix.append(sub)
                rec(remaining & ~sub, prefix)
                prefix.pop()
            sub = (sub - 1) & avail

    rec((1 << n) - 1, [])
    return sorted(found, key=_order_key(S.ground))


def intersect_extensions(S: SoStructure, max_ground: int = MAX_GROUND) -> SoStructure:
    """(X, ⋂ ⊲, ⋂ ⊲⌢) over ext(S); equals S for every so-structure."""
    exts = stratified_extensions(S, max_ground)
    if not exts:
        raise InvalidStructure("structure has no stratified extension")
    prec = exts[0].relation()
    wk = exts[0].not_greater()
    for order in exts[1:]:
        prec &= order.relation()
        wk &= order.not_greater()
    return RelationalStructure(S.ground, prec, wk)


def _sccs(ground, rel) -> list:
    g = nx.DiGraph()
    g.add_nodes_from(ground)
    g.add_edges_from(rel)
    return sorted((frozenset(c) for c in nx.strongly_connected_components(g)), key=sort_key)


def cycle_classes(S: SoStructure) -> list:
    """Classes of α ≡ β iff α = β or α ⊏ β ⊏ α, i.e. SCCs of (X, ⊏)."""
    return _sccs(S.ground, S.wk)


@dataclass(frozen=True)
class QuotientStructure:
    """(X/≡, ≺̂, ⊏̂), with optional set-valued block labels."""

    blocks: tuple
    prec: frozenset
    wk: frozenset
    block_labels: tuple | None = None

    def block_of(self, x) -> frozenset:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def label_of(self, block) -> frozenset:
        return self.block_labels[self.blocks.index(block)]

    def as_structure(self) -> RelationalStructure:
        return RelationalStructure(frozenset(self.blocks), self.prec, self.wk)


def _quotient_relation(rel, owner) -> frozenset:
    return frozenset((owner[a], owner[b]) for a, b in rel if owner[a] != owner[b])


@lru_cache(maxsize=4096)
def _quotient_core(S: SoStructure):
    blocks = tuple(cycle_classes(S))
    owner = {x: b for b in blocks for x in b}
    return blocks, _quotient_relation(S.prec, owner), _quotient_relation(S.wk, owner)


def quotient(S: SoStructure, labels=None) -> QuotientStructure:
    """Collapse ⊏-cycle classes.  With ``labels`` (a mapping) each block
    also gets the label set λ[A]."""
    blocks, qprec, qwk = _quotient_core(S)
    block_labels = None
    if labels is not None:
        block_labels = tuple(frozenset(labels[x] for x in b) for b in blocks)
    return QuotientStructure(blocks, qprec, qwk, block_labels)


def synchronous_step_witness(S: SoStructure, first=None, second=None) -> StratifiedOrder:
    """An extension whose blocks are exactly the cycle classes.

    With ``first`` and ``second`` (two classes, or elements naming them)
    the classes are placed consecutively; this needs ``first`` to be
    covered by ``second`` under ⊏̂.
    """
    q = quotient(S)
    if (first is None) != (second is None):
        raise ValueError("give both classes or neither")
    g = nx.DiGraph()
    g.add_nodes_from(q.blocks)
    g.add_edges_from(q.wk)
    key = sort_key
    if first is None:
        return StratifiedOrder(tuple(nx.lexicographical_topological_sort(g, key=key)))
    first = _as_block(q, first)
    second = _as_block(q, second)
    if (first, second) not in covering(q.wk):
        raise NotCovering("the first class is not covered by the second under the quotient weak causality")
    below = (nx.ancestors(g, second) | nx.ancestors(g, first)) - {first}
    before = nx.lexicographical_topological_sort(g.subgraph(below), key=key)
    rest = g.subgraph(set(q.blocks) - below - {first, second})
    after = nx.lexicographical_topological_sort(rest, key=key)
    return StratifiedOrder(tuple(before) + (first, second) + tuple(after))


def _as_block(q: QuotientStructure, x) -> frozenset:
    if isinstance(x, frozenset) and x in q.blocks:
        return x
    return q.block_of(x)
