"""Combined dependency graphs (X, →, ⇢, λ) and their CD1-CD4 check."""
from __future__ import annotations

from dataclasses import dataclass

from .alphabet import Alphabet
from .errors import AlphabetMismatch, InvalidStructure
from .relations import ordered, ordered_pairs
from .sostruct import RelationalStructure, Report, Violation, _sccs, check_so_axioms, diamond_closure
from .stepseq import Occ


@dataclass(frozen=True)
class CdGraph:
    """Ground elements are occurrences; the label of ``e#i`` is ``e``."""

    alphabet: Alphabet
    ground: frozenset
    solid: frozenset
    dashed: frozenset

    def __post_init__(self):
        rs = RelationalStructure(self.ground, self.solid, self.dashed)
        object.__setattr__(self, "ground", rs.ground)
        object.__setattr__(self, "solid", rs.prec)
        object.__setattr__(self, "dashed", rs.wk)
        for x in rs.ground:
            if not isinstance(x, Occ):
                raise InvalidStructure(f"ground element {x!r} is not an event occurrence")

    @property
    def structure(self) -> RelationalStructure:
        return RelationalStructure(self.ground, self.solid, self.dashed)

    @property
    def labels(self) -> dict:
        return {x: x.event for x in self.ground}

    def __len__(self):
        return len(self.ground)

    def __str__(self):
        def show(rel):
            return " ".join(f"{x}->{y}" for x, y in ordered_pairs(rel))
        return (f"ground: {' '.join(str(x) for x in ordered(self.ground))}\n"
                f"solid: {show(self.solid)}\ndashed: {show(self.dashed)}")


def check_cdgraph(alphabet: Alphabet, D: CdGraph) -> Report:
    """Irreflexivity, closure to an so-structure, and CD1-CD4."""
    for x in ordered(D.ground):
        if x.event not in alphabet.events:
            raise AlphabetMismatch(f"label {x.event!r} of {x} is not an event of the alphabet")
    found: dict = {}
    for rule, rel in (("irreflexive-solid", D.solid), ("irreflexive-dashed", D.dashed)):
        for x, y in ordered_pairs(rel):
            if x == y:
                found[rule] = (x,)
                break
    closed = check_so_axioms(diamond_closure(D.structure))
    if not closed:
        found["closure"] = (closed.violations[0],)
    ser = alphabet.ser
    solid, dashed = D.solid, D.dashed
    xs = ordered(D.ground)
    for a in xs:
        for b in xs:
            if a == b:
                continue
            la, lb = a.event, b.event
            if "CD1" not in found and not alphabet.simultaneous(la, lb) \
                    and (a, b) not in solid and (b, a) not in solid:
                found["CD1"] = (a, b)
            if "CD2" not in found and (la, lb) not in ser \
                    and (a, b) not in solid and (b, a) not in dashed:
                found["CD2"] = (a, b)
            if "CD3" not in found and (a, b) in solid and (la, lb) in ser:
                found["CD3"] = (a, b)
            if "CD4" not in found and (a, b) in dashed and (lb, la) in ser:
                found["CD4"] = (a, b)
    rules = ("irreflexive-solid", "irreflexive-dashed", "closure", "CD1", "CD2", "CD3", "CD4")
    return Report.of(Violation(r, found[r]) for r in rules if r in found)


def nonserializable_components(D: CdGraph) -> list:
    """Strongly connected components of (X, ⇢)."""
    return _sccs(D.ground, D.dashed)
