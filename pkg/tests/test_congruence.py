import pytest
from hypothesis import given

from comtraces import build_alphabet, comtrace, concat, equivalent, parse, render
from comtraces.congruence import identity, split_neighbors
from comtraces.errors import AlphabetMismatch, ClassSizeExceeded, InvalidStep

import oracles
from strategies import alphabet_and_comtraces, alphabet_and_stepseq


def members(ct):
    return [render(m) for m in ct]


def test_reader_writer_class(rw_alphabet):
    ct = comtrace(rw_alphabet, parse("{a}{a,b}{b,c}"))
    assert members(ct) == ["{a}{a,b}{b,c}", "{a}{a,b}{b}{c}"]
    assert parse("{a}{a,b}{c}{b}") not in ct
    assert not equivalent(rw_alphabet, parse("{a}{a,b}{b,c}"), parse("{a}{a,b}{c}{b}"))


def test_four_member_class(abc_alphabet):
    ct = comtrace(abc_alphabet, parse("{a,b}{c}{b,c}"))
    assert sorted(members(ct)) == sorted(
        ["{a,b}{c}{b,c}", "{a}{b}{c}{b,c}", "{b}{a,c}{b,c}", "{b}{a}{c}{b,c}"])


def test_empty_and_identity(rw_alphabet):
    assert comtrace(rw_alphabet, ()) == identity(rw_alphabet)
    assert members(identity(rw_alphabet)) == ["ε"]


def test_moves_are_symmetric(abc_alphabet):
    t = parse("{a,b}{c}{b,c}")
    for u in split_neighbors(abc_alphabet, t):
        assert t in split_neighbors(abc_alphabet, u)


def test_bounds_and_errors(rw_alphabet, abc_alphabet):
    with pytest.raises(ClassSizeExceeded):
        comtrace(abc_alphabet, parse("{a,b}{c}{b,c}"), max_class=3)
    with pytest.raises(InvalidStep):
        comtrace(rw_alphabet, parse("{a,c}"))
    with pytest.raises(AlphabetMismatch):
        concat(identity(rw_alphabet), identity(abc_alphabet))


def test_equivalent_short_circuits_on_counts(rw_alphabet):
    assert not equivalent(rw_alphabet, parse("{a}"), parse("{a}{a}"))
    with pytest.raises(InvalidStep):
        equivalent(rw_alphabet, parse("{a}"), parse("{a,c}"))


@given(alphabet_and_stepseq())
def test_class_matches_invariant_oracle(pair):
    alphabet, t = pair
    expected = oracles.comtrace_class(alphabet.events, alphabet.sim, alphabet.ser, t)
    assert comtrace(alphabet, t).members == expected


@given(alphabet_and_stepseq())
def test_class_is_closed_and_count_preserving(pair):
    alphabet, t = pair
    ct = comtrace(alphabet, t)
    for u in ct.members:
        assert split_neighbors(alphabet, u) <= ct.members
        assert comtrace(alphabet, u) == ct


@given(alphabet_and_comtraces(k=3, max_len=2))
def test_concat_is_a_monoid(triple):
    alphabet, x, y, z = triple
    e = identity(alphabet)
    assert concat(concat(x, y), z) == concat(x, concat(y, z))
    assert concat(e, x) == x == concat(x, e)


@given(alphabet_and_comtraces(k=2, max_len=2))
def test_concat_does_not_depend_on_members(triple):
    alphabet, x, y = triple
    expected = concat(x, y)
    for r in x.members:
        for t in y.members:
            assert comtrace(alphabet, r + t) == expected


def test_trace_case_when_ser_equals_sim():
    theta = build_alphabet("ab", [("a", "b")], [("a", "b"), ("b", "a")])
    assert len(comtrace(theta, parse("{a}{b}"))) == 3
