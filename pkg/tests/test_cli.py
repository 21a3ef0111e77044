import io as stdio
import json
import subprocess
import sys

import pytest

from comtraces.cli import run


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, data in {
        "rw_alphabet": {"events": ["a", "b", "c"], "sim": [["a", "b"], ["b", "c"]], "ser": [["b", "c"]]},
        "abc_alphabet": {"events": ["a", "b", "c"], "sim": [["a", "b"], ["a", "c"], ["b", "c"]],
                    "ser": [["a", "b"], ["b", "a"], ["a", "c"]]},
        "broken": {"events": ["a"], "sim": [["a", "a"]], "ser": []},
    }.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(data))
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def call(*argv, stdin=""):
    out, err = stdio.StringIO(), stdio.StringIO()
    code = run(list(argv), stdin=stdio.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_comtrace_lists_members(files):
    code, out, _ = call("--alphabet", files["rw_alphabet"], "comtrace", "{a}{a,b}{b,c}")
    assert code == 0
    assert out.splitlines() == ["{a}{a,b}{b,c}", "{a}{a,b}{b}{c}"]


def test_equiv(files):
    code, out, _ = call("--alphabet", files["rw_alphabet"], "equiv", "{a}{a,b}{b,c}", "{a}{a,b}{c}{b}")
    assert (code, out) == (0, "false\n")
    assert call("--alphabet", files["rw_alphabet"], "equiv", "{a}{a,b}{b,c}", "{a}{a,b}{b}{c}")[1] == "true\n"


def test_empty_sequence(files):
    assert call("--alphabet", files["rw_alphabet"], "comtrace", "") == (0, "ε\n", "")


def test_flags_after_the_subcommand(files):
    code, out, _ = call("steps", "--alphabet", files["rw_alphabet"], "--format", "json")
    assert code == 0 and json.loads(out) == [["a"], ["b"], ["c"], ["a", "b"], ["b", "c"]]


def test_validate(files):
    assert call("--alphabet", files["abc_alphabet"], "validate")[0] == 0
    code, _, err = call("--alphabet", files["broken"], "validate")
    assert code == 2 and "ReflexivePair" in err


@pytest.mark.parametrize("argv, code", [
    (["comtrace", "{a"], 1),
    (["comtrace", "{a,c}"], 2),
    (["comtrace", "{a}{b}{c}", "--max-class", "1"], 3),
    (["comtrace"], 1),
    (["frobnicate"], 1),
])
def test_exit_codes(files, argv, code):
    got, out, err = call("--alphabet", files["rw_alphabet"], *argv)
    assert got == code and out == "" and err


def test_missing_or_unreadable_alphabet(files):
    assert call("steps")[0] == 1
    assert call("--alphabet", str(files["dir"] / "nope.json"), "steps")[0] == 1
    bad = files["dir"] / "bad.json"
    bad.write_text("{not json")
    assert call("--alphabet", str(bad), "steps")[0] == 1


def _save(files, name, text):
    p = files["dir"] / name
    p.write_text(text)
    return str(p)


def test_json_outputs_feed_the_consumers(files):
    a = ["--alphabet", files["abc_alphabet"]]
    code, lsos, _ = call(*a, "--format", "json", "to-lsos", "{a,b}{c}{b,c}")
    assert code == 0
    code, cdg, _ = call(*a, "--format", "json", "to-cdg", "{a,b}{c}{b,c}")
    assert code == 0
    lp, dp = _save(files, "l.json", lsos), _save(files, "d.json", cdg)

    members = call(*a, "lsos-to-ct", lp)[1].splitlines()
    assert sorted(members) == ["{a,b}{c}{b,c}", "{a}{b}{c}{b,c}", "{b}{a,c}{b,c}", "{b}{a}{c}{b,c}"]
    back = call(*a, "--format", "json", "cdg-to-lsos", dp)[1]
    assert json.loads(back) == json.loads(lsos)
    assert call(*a, "lsos-to-ct", _save(files, "b.json", back))[1].splitlines() == members

    exts = call(*a, "extensions", "-", stdin=lsos)[1].splitlines()
    assert len(exts) == 4 and "{a#1}{b#1}{c#1}{b#2,c#2}" in exts
    assert call(*a, "extensions", dp)[1].splitlines() == exts

    q = json.loads(call(*a, "--format", "json", "quotient", lp)[1])
    assert q["labels"] == [["a"], ["b"], ["c"], ["b", "c"]]
    assert call(*a, "quotient", lp)[1] == call(*a, "quotient", dp)[1]

    double = call(*a, "--format", "json", "compose", lp, lp)[1]
    assert json.loads(double) == json.loads(call(*a, "--format", "json", "to-lsos", "{a,b}{c}{b,c}{a,b}{c}{b,c}")[1])
    double_g = call(*a, "--format", "json", "compose", dp, dp)[1]
    assert json.loads(double_g) == json.loads(call(*a, "--format", "json", "to-cdg", "{a,b}{c}{b,c}{a,b}{c}{b,c}")[1])
    assert call(*a, "compose", lp, dp)[0] == 2
    assert call(*a, "lsos-to-ct", dp)[0] == 2
    assert call(*a, "cdg-to-lsos", lp)[0] == 2
    assert call(*a, "extensions", lp, "--max-ground", "2")[0] == 3


def test_dot_exports(files):
    a = ["--alphabet", files["abc_alphabet"]]
    lp = _save(files, "l.json", call(*a, "--format", "json", "to-lsos", "{a,b}{c}{b,c}")[1])
    dot = call(*a, "dot", lp)[1]
    assert dot.startswith("digraph lsos {") and dot.count("style=dashed") == 3
    assert call(*a, "--format", "dot", "to-lsos", "{a,b}{c}{b,c}")[1] == dot
    qdot = call(*a, "--format", "dot", "quotient", lp)[1]
    assert "shape=box" in qdot and qdot.count("style=dashed") == 1
    gdot = call(*a, "--format", "dot", "to-cdg", "{a,b}{c}{b,c}")[1]
    assert gdot.startswith("digraph cdgraph {")


def test_concat(files):
    code, out, _ = call("--alphabet", files["abc_alphabet"], "concat", "{a}", "{b,c}")
    assert code == 0 and out.splitlines() == ["{a,b,c}", "{a}{b,c}"]


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "comtraces", "--alphabet", files["rw_alphabet"],
                           "comtrace", "{a}{a,b}{b,c}"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "{a}{a,b}{b,c}\n{a}{a,b}{b}{c}\n"
