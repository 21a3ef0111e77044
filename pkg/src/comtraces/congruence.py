"""The comtrace congruence and the comtrace monoid.

Two step sequences are congruent when one can be turned into the other by
repeatedly splitting a step A into B C (with B x C inside ser) or joining
such a pair back.  A comtrace is a congruence class, enumerated here by a
breadth-first closure over single split/join moves.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .alphabet import Alphabet
from .errors import AlphabetMismatch, ClassSizeExceeded
from .stepseq import counts, render, validate

MAX_CLASS = 10 ** 6


@dataclass(frozen=True)
class Comtrace:
    alphabet: Alphabet
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted_members())

    def __contains__(self, t):
        return tuple(t) in self.members

    def sorted_members(self) -> list:
        return sorted(self.members, key=render)

    @property
    def representative(self) -> tuple:
        """The member with the least text rendering."""
        return min(self.members, key=render)

    def __str__(self):
        return "[" + render(self.representative) + "]"


def _serializable(alphabet: Alphabet, left, right) -> bool:
    ser = alphabet.ser
    return all((b, c) in ser for b in left for c in right)


def split_neighbors(alphabet: Alphabet, t) -> set:
    """All sequences one split or one join away from ``t``."""
    t = tuple(t)
    out = set()
    for i, step in enumerate(t):
        members = sorted(step)
        head, tail = t[:i], t[i + 1:]
        for size in range(1, len(members)):
            for chosen in combinations(members, size):
                left = frozenset(chosen)
                right = step - left
                if _serializable(alphabet, left, right):
                    out.add(head + (left, right) + tail)
    for i in range(len(t) - 1):
        left, right = t[i], t[i + 1]
        if _serializable(alphabet, left, right):
            joined = left | right
            # ser is irreflexive and inside sim, so this is automatic
            assert len(joined) == len(left) + len(right)
            assert all(alphabet.simultaneous(a, b) for a in left for b in right)
            out.add(t[:i] + (joined,) + t[i + 2:])
    return out


def comtrace(alphabet: Alphabet, t, max_class: int = MAX_CLASS) -> Comtrace:
    """The congruence class [t]."""
    t = tuple(t)
    validate(alphabet, t)
    if max_class < 1:
        raise ClassSizeExceeded(f"class of {render(t)} has more than {max_class} members")
    seen = {t}
    frontier = deque([t])
    while frontier:
        u = frontier.popleft()
        for w in split_neighbors(alphabet, u):
            if w not in seen:
                seen.add(w)
                if len(seen) > max_class:
                    raise ClassSizeExceeded(
                        f"class of {render(t)} has more than {max_class} members")
                frontier.append(w)
    return Comtrace(alphabet, frozenset(seen))


def equivalent(alphabet: Alphabet, t, u, max_class: int = MAX_CLASS) -> bool:
    t, u = tuple(t), tuple(u)
    validate(alphabet, u)
    if counts(t) != counts(u):
        validate(alphabet, t)
        return False
    return u in comtrace(alphabet, t, max_class).members


def identity(alphabet: Alphabet) -> Comtrace:
    return Comtrace(alphabet, frozenset({()}))


def concat(left: Comtrace, right: Comtrace, max_class: int = MAX_CLASS) -> Comtrace:
    """[r] ⊛ [t] = [r t]."""
    if left.alphabet != right.alphabet:
        raise AlphabetMismatch("cannot concatenate comtraces over different alphabets")
    return comtrace(left.alphabet, left.representative + right.representative, max_class)
