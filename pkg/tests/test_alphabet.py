import pytest
from hypothesis import given

from comtraces import all_steps, build_alphabet, is_step
from comtraces.errors import (AlphabetTooLarge, DuplicateEvent, InvalidEventName, InvalidStep,
                              ReflexivePair, SerNotInSim, UnknownEvent)

import oracles
from strategies import alphabets


def names(steps):
    return ["".join(sorted(s)) for s in steps]


def test_steps_of_reader_writer_alphabet(rw_alphabet):
    assert names(all_steps(rw_alphabet)) == ["a", "b", "c", "ab", "bc"]


def test_steps_of_full_sim(abc_alphabet):
    assert names(all_steps(abc_alphabet)) == ["a", "b", "c", "ab", "ac", "bc", "abc"]


def test_no_sim_gives_singletons():
    assert names(all_steps(build_alphabet("abcd"))) == ["a", "b", "c", "d"]


def test_is_step(rw_alphabet, abc_alphabet):
    assert is_step(abc_alphabet, "abc")
    assert not is_step(rw_alphabet, "ac")
    with pytest.raises(InvalidStep):
        is_step(rw_alphabet, [])
    with pytest.raises(UnknownEvent):
        is_step(rw_alphabet, "z")


@pytest.mark.parametrize("events, sim, ser, err", [
    ("aa", [], [], DuplicateEvent),
    ("ab", [("a", "a")], [], ReflexivePair),
    ("ab", [], [("a", "b")], SerNotInSim),
    ("ab", [("a", "z")], [], UnknownEvent),
    (["a", "1x"], [], [], InvalidEventName),
])
def test_invalid_alphabets(events, sim, ser, err):
    with pytest.raises(err):
        build_alphabet(events, sim, ser)


def test_sim_orientation_is_irrelevant():
    one = build_alphabet("ab", [("a", "b")])
    both = build_alphabet("ab", [("a", "b"), ("b", "a")])
    assert one == both and one.simultaneous("b", "a")


def test_event_count_guard():
    many = build_alphabet([f"e{i}" for i in range(21)])
    with pytest.raises(AlphabetTooLarge):
        all_steps(many)
    assert len(all_steps(many, max_events=21)) == 21


@given(alphabets)
def test_steps_are_exactly_the_cliques(alphabet):
    assert set(all_steps(alphabet)) == set(oracles.steps(alphabet.events, alphabet.sim))


@given(alphabets)
def test_steps_closed_under_nonempty_subsets(alphabet):
    steps = set(all_steps(alphabet))
    for s in steps:
        for x in s:
            assert len(s) == 1 or s - {x} in steps


@given(alphabets)
def test_rebuild_is_idempotent(alphabet):
    again = build_alphabet(alphabet.events, [tuple(p) for p in alphabet.sim], alphabet.ser)
    assert again == alphabet
