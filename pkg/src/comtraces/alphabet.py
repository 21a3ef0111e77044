"""Comtrace alphabets (E, sim, ser) and the step set they induce."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import (AlphabetTooLarge, DuplicateEvent, InvalidEventName, InvalidStep,
                     ReflexivePair, SerNotInSim, UnknownEvent)

EVENT_NAME = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")

MAX_EVENTS = 20

Step = frozenset


@dataclass(frozen=True)
class Alphabet:
    """A validated comtrace alphabet.

    ``sim`` is kept as a set of unordered pairs (2-element frozensets),
    ``ser`` as ordered ``(from, to)`` pairs.  Events are sorted.  Build
    instances with :func:`build_alphabet` when the input is not already
    in this canonical shape.
    """

    events: tuple
    sim: frozenset
    ser: frozenset
    _sim_pairs: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if tuple(sorted(self.events)) != tuple(self.events):
            object.__setattr__(self, "events", tuple(sorted(self.events)))
        names = set(self.events)
        for e in self.events:
            if not isinstance(e, str) or not EVENT_NAME.match(e):
                raise InvalidEventName(f"invalid event name {e!r}")
        if len(names) != len(self.events):
            raise DuplicateEvent("duplicate event names in alphabet")
        ordered_sim = set()
        for pair in self.sim:
            pair = tuple(pair)
            if len(pair) != 2:
                raise ReflexivePair(f"reflexive sim pair {pair!r}")
            a, b = pair
            for e in pair:
                if e not in names:
                    raise UnknownEvent(f"sim mentions unknown event {e!r}")
            ordered_sim.add((a, b))
            ordered_sim.add((b, a))
        for a, b in self.ser:
            for e in (a, b):
                if e not in names:
                    raise UnknownEvent(f"ser mentions unknown event {e!r}")
            if a == b:
                raise ReflexivePair(f"reflexive ser pair ({a}, {b})")
            if (a, b) not in ordered_sim:
                raise SerNotInSim(f"ser pair ({a}, {b}) is not in sim")
        object.__setattr__(self, "_sim_pairs", frozenset(ordered_sim))

    def simultaneous(self, a, b) -> bool:
        return (a, b) in self._sim_pairs

    def serializable(self, a, b) -> bool:
        return (a, b) in self.ser

    def check_events(self, events: Iterable) -> None:
        for e in events:
            if e not in self.events:
                raise UnknownEvent(f"unknown event {e!r}")

    def __str__(self):
        sim = ", ".join("{" + ",".join(sorted(p)) + "}" for p in sorted(self.sim, key=sorted))
        ser = ", ".join(f"({a},{b})" for a, b in sorted(self.ser))
        return f"E={{{','.join(self.events)}}} sim={{{sim}}} ser={{{ser}}}"


def build_alphabet(events: Iterable[str], sim_pairs: Iterable = (), ser_pairs: Iterable = ()) -> Alphabet:
    """Validate raw input and return the canonical alphabet.

    ``sim_pairs`` may list each pair once (either orientation) or both
    orientations; the result is the symmetric closure.
    """
    events = list(events)
    if len(set(events)) != len(events):
        raise DuplicateEvent("duplicate event names in alphabet")
    names = set(events)
    sim = set()
    for pair in sim_pairs:
        a, b = pair
        for e in (a, b):
            if e not in names:
                raise UnknownEvent(f"sim mentions unknown event {e!r}")
        if a == b:
            raise ReflexivePair(f"reflexive sim pair ({a}, {b})")
        sim.add(frozenset((a, b)))
    ser = set()
    for pair in ser_pairs:
        a, b = pair
        ser.add((a, b))
    return Alphabet(tuple(sorted(events)), frozenset(sim), frozenset(ser))


def step_key(step) -> tuple:
    """Steps order by size, then by their sorted member list."""
    return (len(step), sorted(step))


def all_steps(alphabet: Alphabet, max_events: int = MAX_EVENTS) -> list:
    """Every nonempty clique of (E, sim), smallest first."""
    if len(alphabet.events) > max_events:
        raise AlphabetTooLarge(
            f"{len(alphabet.events)} events exceeds the step enumeration bound {max_events}")
    events = alphabet.events
    steps = []

    def grow(clique: tuple, start: int):
        for i in range(start, len(events)):
            e = events[i]
            if all(alphabet.simultaneous(e, x) for x in clique):
                bigger = clique + (e,)
                steps.append(frozenset(bigger))
                grow(bigger, i + 1)

    grow((), 0)
    steps.sort(key=step_key)
    return steps


def is_step(alphabet: Alphabet, members: Iterable) -> bool:
    members = list(members)
    if not members:
        raise InvalidStep("steps are nonempty")
    alphabet.check_events(members)
    return all(alphabet.simultaneous(a, b)
               for i, a in enumerate(members) for b in members[i + 1:])
