"""Mappings between comtraces, lsos-comtraces and cd-graphs, and the
composition operators that make all three monoids."""
from __future__ import annotations

from .alphabet import Alphabet
from .cdgraph import CdGraph
from .congruence import Comtrace
from .errors import AlphabetMismatch
from .lsos import LabeledStructure, LsosComtrace, _enum, canonicalize
from .sostruct import MAX_GROUND, RelationalStructure, diamond_closure, stratified_extensions
from .stepseq import Occ, enumerate_occurrences, from_stratified_order, render


def invariant_relations(alphabet: Alphabet, u) -> RelationalStructure:
    """(Σ_u, ≺_u, ⊏_u): α ≺_u β iff α is in an earlier step and
    (ℓα, ℓβ) ∉ ser; α ⊏_u β iff α is not later, α ≠ β and (ℓβ, ℓα) ∉ ser."""
    blocks = enumerate_occurrences(u)
    ser = alphabet.ser
    ground = [x for b in blocks for x in b]
    level = {x: i for i, b in enumerate(blocks) for x in b}
    prec, wk = [], []
    for a in ground:
        for b in ground:
            if a == b or level[a] > level[b]:
                continue
            if level[a] < level[b] and (a.event, b.event) not in ser:
                prec.append((a, b))
            if (b.event, a.event) not in ser:
                wk.append((a, b))
    return RelationalStructure(frozenset(ground), frozenset(prec), frozenset(wk))


def lsos_of(alphabet: Alphabet, u) -> LsosComtrace:
    """S_[u], the ◊-closure of the invariant relations of ``u``."""
    S = diamond_closure(invariant_relations(alphabet, u))
    return LsosComtrace(alphabet, S.ground, S.prec, S.wk)


def cdgraph_of(alphabet: Alphabet, u) -> CdGraph:
    rs = invariant_relations(alphabet, u)
    return CdGraph(alphabet, rs.ground, rs.prec, rs.wk)


def _another_member(ct: Comtrace, chosen):
    for m in ct.members:
        if m != chosen:
            return m
    return None


def ct2lct(ct: Comtrace) -> LsosComtrace:
    u = ct.representative
    T = lsos_of(ct.alphabet, u)
    other = _another_member(ct, u)
    assert other is None or lsos_of(ct.alphabet, other) == T, \
        f"ct2lct depends on the member of {ct}"
    return T


def lct2ct(T: LsosComtrace, max_ground: int = MAX_GROUND) -> Comtrace:
    """The labels of every stratified extension."""
    members = frozenset(from_stratified_order(order)
                        for order in stratified_extensions(T.so, max_ground))
    return Comtrace(T.alphabet, members)


def ct2dep(ct: Comtrace) -> CdGraph:
    u = ct.representative
    D = cdgraph_of(ct.alphabet, u)
    other = _another_member(ct, u)
    assert other is None or cdgraph_of(ct.alphabet, other) == D, \
        f"ct2dep depends on the member of {ct}: {render(u)} vs {render(other)}"
    return D


def dep2lct(D: CdGraph) -> LsosComtrace:
    S = diamond_closure(D.structure)
    labels = D.labels
    if _enum(S, labels) == {x: x for x in S.ground}:
        return LsosComtrace(D.alphabet, S.ground, S.prec, S.wk)
    return canonicalize(D.alphabet, LabeledStructure(S, labels))


def lct2dep(T: LsosComtrace, max_ground: int = MAX_GROUND) -> CdGraph:
    return ct2dep(lct2ct(T, max_ground))


def canonical_cdgraph(D: CdGraph) -> CdGraph:
    """Rename occurrences by causal rank in the closure, as for lsos-comtraces."""
    rename = _enum(diamond_closure(D.structure), D.labels)
    return CdGraph(D.alphabet, frozenset(rename.values()),
                   frozenset((rename[a], rename[b]) for a, b in D.solid),
                   frozenset((rename[a], rename[b]) for a, b in D.dashed))


def identity_lsos(alphabet: Alphabet) -> LsosComtrace:
    return LsosComtrace(alphabet, frozenset(), frozenset(), frozenset())


def identity_cdg(alphabet: Alphabet) -> CdGraph:
    return CdGraph(alphabet, frozenset(), frozenset(), frozenset())


def _glue(alphabet, left_ground, right_ground, left_rels, right_rels):
    """Shift right-hand occurrence indices past the left-hand counts, then
    add the cross pairs demanded by non-serializability."""
    shift: dict = {}
    for x in left_ground:
        shift[x.event] = shift.get(x.event, 0) + 1
    moved = {x: Occ(x.event, x.index + shift.get(x.event, 0)) for x in right_ground}
    ser = alphabet.ser
    right_new = frozenset(moved.values())
    strong = [(a, b) for a in left_ground for b in right_new if (a.event, b.event) not in ser]
    weak = [(a, b) for a in left_ground for b in right_new if (b.event, a.event) not in ser]
    r1 = left_rels[0] | {(moved[a], moved[b]) for a, b in right_rels[0]} | frozenset(strong)
    r2 = left_rels[1] | {(moved[a], moved[b]) for a, b in right_rels[1]} | frozenset(weak)
    return RelationalStructure(frozenset(left_ground) | right_new, r1, r2)


def compose_lsos(T1: LsosComtrace, T2: LsosComtrace) -> LsosComtrace:
    """T1 ⊙ T2."""
    if T1.alphabet != T2.alphabet:
        raise AlphabetMismatch("cannot compose lsos-comtraces over different alphabets")
    glued = _glue(T1.alphabet, T1.ground, T2.ground, (T1.prec, T1.wk), (T2.prec, T2.wk))
    S = diamond_closure(glued)
    return LsosComtrace(T1.alphabet, S.ground, S.prec, S.wk)


def compose_cdg(D1: CdGraph, D2: CdGraph) -> CdGraph:
    """D1 ⊚ D2; no closure is taken."""
    if D1.alphabet != D2.alphabet:
        raise AlphabetMismatch("cannot compose cd-graphs over different alphabets")
    glued = _glue(D1.alphabet, D1.ground, D2.ground, (D1.solid, D1.dashed), (D2.solid, D2.dashed))
    return CdGraph(D1.alphabet, glued.ground, glued.prec, glued.wk)
