"""Step sequences, event occurrences and stratified orders.

A step sequence is a plain tuple of frozensets of event names; the empty
tuple is the empty sequence.  Occurrences are ``Occ(event, index)``
pairs, rendered ``e#i``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple

from .alphabet import Alphabet
from .errors import InvalidStep, LabelCollision, NotAnOccurrence, ParseError, UnknownEvent
from .relations import ordered

EPSILON = "ε"


class Occ(NamedTuple):
    event: str
    index: int

    def __str__(self):
        return f"{self.event}#{self.index}"


def label(occ: Occ) -> str:
    """The labelling function: drop the occurrence index."""
    return occ.event


def make_stepseq(steps: Iterable[Iterable[str]]) -> tuple:
    return tuple(frozenset(s) for s in steps)


def validate(alphabet: Alphabet, t) -> None:
    """Raise unless every step of ``t`` is a step of the alphabet."""
    for step in t:
        if not step:
            raise InvalidStep("empty step")
        alphabet.check_events(step)
        members = sorted(step)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if not alphabet.simultaneous(a, b):
                    raise InvalidStep(f"{render_step(step)} is not a step: ({a},{b}) not in sim")


def occ_count(t, e: str, alphabet: Alphabet | None = None) -> int:
    if alphabet is not None and e not in alphabet.events:
        raise UnknownEvent(f"unknown event {e!r}")
    return sum(1 for step in t if e in step)


def counts(t) -> dict:
    out: dict = {}
    for step in t:
        for e in step:
            out[e] = out.get(e, 0) + 1
    return out


def enumerate_occurrences(t) -> tuple:
    seen: dict = {}
    blocks = []
    for step in t:
        block = []
        for e in step:
            seen[e] = seen.get(e, 0) + 1
            block.append(Occ(e, seen[e]))
        blocks.append(frozenset(block))
    return tuple(blocks)


def occurrences(t) -> frozenset:
    """Σ_t, the set of all event occurrences of ``t``."""
    return frozenset(o for block in enumerate_occurrences(t) for o in block)


def position(t, occ: Occ) -> int:
    """1-based index of the step holding ``occ``."""
    for i, block in enumerate(enumerate_occurrences(t), start=1):
        if occ in block:
            return i
    raise NotAnOccurrence(f"{occ} does not occur in {render(t)}")


@dataclass(frozen=True)
class StratifiedOrder:
    """A stratified order kept as its ordered partition B_1 ... B_k.

    The order itself is the union of B_i x B_j for i < j; elements of one
    block are incomparable.
    """

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        seen: set = set()
        for b in blocks:
            if not b:
                raise ValueError("blocks of a stratified order are nonempty")
            if seen & b:
                raise ValueError("blocks of a stratified order are disjoint")
            seen |= b
        object.__setattr__(self, "blocks", blocks)

    @property
    def ground(self) -> frozenset:
        return frozenset().union(*self.blocks)

    def level(self) -> dict:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def relation(self) -> frozenset:
        """The order ⊲ as a pair set."""
        out = []
        for i, b in enumerate(self.blocks):
            later = [y for c in self.blocks[i + 1:] for y in c]
            out.extend((x, y) for x in b for y in later)
        return frozenset(out)

    def not_greater(self) -> frozenset:
        """⊲⌢: strictly before, or distinct in the same block."""
        same = frozenset((x, y) for b in self.blocks for x in b for y in b if x != y)
        return self.relation() | same

    def precedes(self, x, y) -> bool:
        lv = self.level()
        return lv[x] < lv[y]

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __str__(self):
        if not self.blocks:
            return EPSILON
        return "".join("{" + ",".join(str(x) for x in ordered(b)) + "}" for b in self.blocks)


def to_stratified_order(t) -> StratifiedOrder:
    return StratifiedOrder(enumerate_occurrences(t))


def imap(f: Callable | Mapping, blocks: Iterable[Iterable]) -> tuple:
    """Blockwise image f[B_1] ... f[B_m]."""
    get = f.__getitem__ if isinstance(f, Mapping) else f
    return tuple(frozenset(get(x) for x in b) for b in blocks)


def from_stratified_order(order: StratifiedOrder | Iterable, label_fn: Callable | Mapping = label,
                          alphabet: Alphabet | None = None) -> tuple:
    """Label image of an ordered partition; inverse of
    :func:`to_stratified_order` when ``label_fn`` is occurrence labelling."""
    blocks = order.blocks if isinstance(order, StratifiedOrder) else tuple(order)
    t = imap(label_fn, blocks)
    for b, step in zip(blocks, t):
        if len(step) != len(b):
            raise LabelCollision(f"two members of one block share a label in {render(t)}")
    if alphabet is not None:
        validate(alphabet, t)
    return t


def render_step(step) -> str:
    return "{" + ",".join(sorted(step)) + "}"


def render(t) -> str:
    if not t:
        return EPSILON
    return "".join(render_step(s) for s in t)


_TOKEN = re.compile(r"\s*(?:(\{)|(\})|(,)|([a-zA-Z][a-zA-Z0-9_]*)|(\S))")


def parse(text: str, alphabet: Alphabet | None = None) -> tuple:
    """Parse ``{a,b}{c}`` style text.  The empty string (or ``ε``) is the
    empty sequence; ``{}`` is rejected."""
    stripped = text.strip()
    if stripped in ("", EPSILON):
        return ()
    steps = []
    current: list | None = None
    expect_name = False
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        lbrace, rbrace, comma, name, junk = m.groups()
        if junk is not None:
            raise ParseError(f"unexpected character {junk!r} at offset {m.start(5)}")
        if lbrace:
            if current is not None:
                raise ParseError("nested '{'")
            current, expect_name = [], True
        elif rbrace:
            if current is None:
                raise ParseError("unbalanced '}'")
            if not current:
                raise ParseError("empty step '{}'")
            if expect_name:
                raise ParseError("trailing ',' in step")
            if len(set(current)) != len(current):
                raise ParseError(f"repeated event in step {{{','.join(current)}}}")
            steps.append(frozenset(current))
            current = None
        elif comma:
            if current is None or expect_name:
                raise ParseError("misplaced ','")
            expect_name = True
        else:
            if current is None:
                raise ParseError(f"event {name!r} outside a step")
            if not expect_name:
                raise ParseError("missing ',' between events")
            current.append(name)
            expect_name = False
    if current is not None:
        raise ParseError("unterminated step")
    t = tuple(steps)
    if alphabet is not None:
        validate(alphabet, t)
    return t
