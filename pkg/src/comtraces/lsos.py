"""Labeled so-structures and the lsos-comtrace conditions LC1-LC5.

Lsos-comtraces are lp-isomorphism classes; an :class:`LsosComtrace` always
holds the canonical member, whose elements are occurrences ``e#i`` numbered
by causal rank among same-labeled elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from .alphabet import Alphabet
from .errors import AlphabetMismatch, BoundExceeded, InvalidStructure, NotAnLsosComtrace
from .relations import covering, ordered, ordered_pairs
from .sostruct import RelationalStructure, Report, Violation, quotient
from .stepseq import Occ

MAX_CLASS_SIZE = 12


@dataclass(frozen=True)
class LabeledStructure:
    so: RelationalStructure
    labels: Mapping

    def __post_init__(self):
        labels = dict(self.labels)
        if set(labels) != set(self.so.ground):
            raise InvalidStructure("labelling must be total on the ground set")
        object.__setattr__(self, "labels", labels)

    def __hash__(self):
        return hash((self.so, frozenset(self.labels.items())))


@dataclass(frozen=True)
class LsosComtrace:
    """Canonical lsos-comtrace: ground made of occurrences, label = event."""

    alphabet: Alphabet
    ground: frozenset
    prec: frozenset
    wk: frozenset

    def __post_init__(self):
        so = RelationalStructure(self.ground, self.prec, self.wk)
        object.__setattr__(self, "ground", so.ground)
        object.__setattr__(self, "prec", so.prec)
        object.__setattr__(self, "wk", so.wk)
        for x in so.ground:
            if not isinstance(x, Occ):
                raise InvalidStructure(f"ground element {x!r} is not an event occurrence")
            if x.event not in self.alphabet.events:
                raise AlphabetMismatch(f"label {x.event!r} is not an event of the alphabet")
        if _enum(so, _occ_labels(so.ground)) != {x: x for x in so.ground}:
            raise InvalidStructure("occurrence indices do not follow causality (not canonical)")

    @property
    def so(self) -> RelationalStructure:
        return RelationalStructure(self.ground, self.prec, self.wk)

    @property
    def labels(self) -> dict:
        return _occ_labels(self.ground)

    def labeled(self) -> LabeledStructure:
        return LabeledStructure(self.so, self.labels)

    def __len__(self):
        return len(self.ground)

    def __str__(self):
        return str(self.so)


def _occ_labels(ground) -> dict:
    return {x: x.event for x in ground}


def as_labeled(T) -> LabeledStructure:
    if isinstance(T, LabeledStructure):
        return T
    return T.labeled()


@lru_cache(maxsize=4096)
def _cover(S: RelationalStructure) -> frozenset:
    return covering(quotient(S).wk)


def _all_ser(alphabet: Alphabet, left, right) -> bool:
    ser = alphabet.ser
    return all((a, b) in ser for a in left for b in right)


def _all_sim(alphabet: Alphabet, left, right) -> bool:
    return all(alphabet.simultaneous(a, b) for a in left for b in right)


def _lsos_report(alphabet: Alphabet, T, primed: bool, max_class_size: int) -> Report:
    T = as_labeled(T)
    lab = T.labels
    for x in ordered(lab):
        if lab[x] not in alphabet.events:
            raise AlphabetMismatch(f"label {lab[x]!r} of {x} is not an event of the alphabet")
    S = T.so
    q = quotient(S)
    blab = {b: frozenset(lab[x] for x in b) for b in q.blocks}
    found: dict = {}

    for a, b in ordered_pairs(_cover(S)):
        if (a, b) in q.prec:
            if "LC1" not in found and _all_ser(alphabet, blab[a], blab[b]):
                found["LC1"] = (a, b)
        elif "LC2" not in found and _all_ser(alphabet, blab[b], blab[a]):
            found["LC2"] = (a, b)

    for block in q.blocks:
        if "LC3" in found:
            break
        if len(block) > max_class_size:
            raise BoundExceeded(f"cycle class of size {len(block)} exceeds bound {max_class_size}")
        # A and B overlapping share a label pair (x, x), never in ser, so
        # only disjoint covers can violate LC3
        members = ordered(block)
        for size in range(1, len(members)):
            for chosen in combinations(members, size):
                left = frozenset(chosen)
                right = block - left
                if _all_ser(alphabet, {lab[x] for x in left}, {lab[x] for x in right}):
                    found["LC3"] = (block, left, right)
                    break
            if "LC3" in found:
                break

    if primed:
        blocks = ordered(q.blocks)
        for a in blocks:
            for b in blocks:
                if a == b:
                    continue
                if "LC4'" not in found and not _all_ser(alphabet, blab[a], blab[b]) \
                        and (a, b) not in q.prec and (b, a) not in q.wk:
                    found["LC4'"] = (a, b)
                if "LC5'" not in found and not _all_sim(alphabet, blab[a], blab[b]) \
                        and (a, b) not in q.prec and (b, a) not in q.prec:
                    found["LC5'"] = (a, b)
        rules = ("LC1", "LC2", "LC3", "LC4'", "LC5'")
    else:
        xs = ordered(S.ground)
        prec, wk = S.prec, S.wk
        for a in xs:
            for b in xs:
                if a == b:
                    continue
                la, lb = lab[a], lab[b]
                if "LC4" not in found and (la, lb) not in alphabet.ser \
                        and (a, b) not in prec and (b, a) not in wk:
                    found["LC4"] = (a, b)
                if "LC5" not in found and not alphabet.simultaneous(la, lb) \
                        and (a, b) not in prec and (b, a) not in prec:
                    found["LC5"] = (a, b)
        rules = ("LC1", "LC2", "LC3", "LC4", "LC5")
    return Report.of(Violation(r, found[r]) for r in rules if r in found)


def check_lsos(alphabet: Alphabet, T, max_class_size: int = MAX_CLASS_SIZE) -> Report:
    """LC1-LC5 on a labeled so-structure."""
    return _lsos_report(alphabet, T, False, max_class_size)


def check_lsos_prime(alphabet: Alphabet, T, max_class_size: int = MAX_CLASS_SIZE) -> Report:
    """LC1-LC3 with the class-level LC4'/LC5' in place of LC4/LC5."""
    return _lsos_report(alphabet, T, True, max_class_size)


def _enum(S: RelationalStructure, labels: Mapping) -> dict:
    """x -> λ(x)#i, i - 1 being the number of same-labeled ≺-predecessors."""
    earlier: dict = {x: 0 for x in S.ground}
    for a, b in S.prec:
        if labels[a] == labels[b]:
            earlier[b] += 1
    return {x: Occ(labels[x], earlier[x] + 1) for x in S.ground}


def canonicalize(alphabet: Alphabet, T) -> LsosComtrace:
    """Rename every element to its occurrence name λ(x)#i."""
    T = as_labeled(T)
    report = check_lsos(alphabet, T)
    if not report:
        for v in report.violations:
            if v.rule == "LC5" and T.labels[v.witness[0]] == T.labels[v.witness[1]]:
                raise NotAnLsosComtrace(
                    f"same-labeled elements {v.witness[0]} and {v.witness[1]} are not causally ordered")
        raise NotAnLsosComtrace("; ".join(str(v) for v in report.violations))
    rename = _enum(T.so, T.labels)
    if len(set(rename.values())) != len(rename):
        raise NotAnLsosComtrace("occurrence numbering is not injective")
    return LsosComtrace(alphabet, frozenset(rename.values()),
                        frozenset((rename[a], rename[b]) for a, b in T.so.prec),
                        frozenset((rename[a], rename[b]) for a, b in T.so.wk))


def lp_isomorphic(alphabet: Alphabet, T1, T2) -> bool:
    """Decided by equality of canonical forms."""
    return canonicalize(alphabet, T1) == canonicalize(alphabet, T2)


def relabel(T, mapping: Mapping) -> LabeledStructure:
    """Rename ground elements through an injective ``mapping``."""
    T = as_labeled(T)
    so = T.so
    return LabeledStructure(
        RelationalStructure(frozenset(mapping[x] for x in so.ground),
                            frozenset((mapping[a], mapping[b]) for a, b in so.prec),
                            frozenset((mapping[a], mapping[b]) for a, b in so.wk)),
        {mapping[x]: l for x, l in T.labels.items()})
