import json
from pathlib import Path

import pytest
from hypothesis import settings

from comtraces import build_alphabet
from comtraces.stepseq import Occ

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repro")

# filled by test_acceptance; printed after the run
ACCEPTANCE_LINES: dict = {}


def golden(name):
    return json.loads((GOLDEN / name).read_text(encoding="utf-8"))


def occ(name):
    """'b2' -> b#2."""
    return Occ(name[0], int(name[1:]))


def rel(*names):
    return frozenset((occ(x), occ(y)) for x, y in (n.split("-") for n in names))


@pytest.fixture
def rw_alphabet():
    # simultaneous reading allowed, simultaneous writing not
    return build_alphabet("abc", [("a", "b"), ("b", "c")], [("b", "c")])


@pytest.fixture
def abc_alphabet():
    return build_alphabet("abc", [("a", "b"), ("a", "c"), ("b", "c")],
                          [("a", "b"), ("b", "a"), ("a", "c")])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
