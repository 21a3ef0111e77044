"""Command-line front end.

Exit status: 0 success, 1 parse error, 2 semantic error, 3 bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import serialize as io
from .alphabet import all_steps
from .congruence import MAX_CLASS, comtrace, concat, equivalent
from .errors import ComtraceError, ParseError, SemanticError
from .sostruct import MAX_GROUND, quotient, stratified_extensions
from .stepseq import parse, render_step
from .transform import compose_cdg, compose_lsos, ct2dep, ct2lct, dep2lct, lct2ct


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{message}\n{self.format_usage().rstrip()}")


def _common(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--alphabet", metavar="PATH", default=d(None), help="alphabet JSON file")
    p.add_argument("--format", choices=("text", "json", "dot"), default=d("text"))
    p.add_argument("--max-class", type=int, default=d(MAX_CLASS), help="largest comtrace to enumerate")
    p.add_argument("--max-ground", type=int, default=d(MAX_GROUND),
                   help="largest ground set for extension enumeration")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="comtraces", parents=[_common(True)],
                     description="Comtraces, lsos-comtraces and cd-graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    shared = [_common(False)]

    def cmd(name, help_, *args):
        p = sub.add_parser(name, help=help_, parents=shared)
        for a in args:
            p.add_argument(a)
        return p

    cmd("validate", "check the alphabet")
    cmd("steps", "list every step")
    cmd("comtrace", "enumerate the comtrace of a step sequence", "stepseq")
    cmd("equiv", "are two step sequences congruent", "left", "right")
    cmd("to-lsos", "lsos-comtrace of a step sequence", "stepseq")
    cmd("to-cdg", "cd-graph of a step sequence", "stepseq")
    cmd("lsos-to-ct", "comtrace of an lsos-comtrace JSON file", "structure")
    cmd("cdg-to-lsos", "lsos-comtrace of a cd-graph JSON file", "structure")
    cmd("quotient", "quotient of an lsos-comtrace or cd-graph", "structure")
    cmd("extensions", "stratified extensions of an lsos-comtrace or cd-graph", "structure")
    cmd("compose", "compose two lsos-comtraces or two cd-graphs", "left", "right")
    cmd("concat", "concatenate two comtraces", "left", "right")
    cmd("dot", "DOT export of an lsos-comtrace or cd-graph", "structure")
    return parser


def _read_json(path: str, stdin):
    try:
        if path == "-":
            text = stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _load_structure(alphabet, path, stdin):
    """Returns ("lsos", T) or ("cdg", D)."""
    data = _read_json(path, stdin)
    kind = io.structure_kind(data)
    if kind == "lsos":
        return kind, io.lsos_from_json(alphabet, data)
    return kind, io.cdg_from_json(alphabet, data)


def _as_lsos(kind, obj):
    return obj if kind == "lsos" else dep2lct(obj)


def _show_lsos(T, fmt):
    if fmt == "json":
        return io.dumps(io.lsos_to_json(T))
    if fmt == "dot":
        return io.lsos_to_dot(T)
    return str(T)


def _show_cdg(D, fmt):
    if fmt == "json":
        return io.dumps(io.cdg_to_json(D))
    if fmt == "dot":
        return io.cdg_to_dot(D)
    return str(D)


def _show_comtrace(ct, fmt):
    if fmt == "json":
        return io.dumps(io.comtrace_to_json(ct))
    return io.comtrace_to_text(ct)


def _execute(args, stdin) -> str:
    fmt = args.format
    if args.alphabet is None:
        raise ParseError("--alphabet is required")
    alphabet = io.alphabet_from_json(_read_json(args.alphabet, stdin))
    c = args.command

    def ss(text):
        return parse(text, alphabet)

    if c == "validate":
        if fmt == "json":
            return io.dumps({"valid": True, "alphabet": io.alphabet_to_json(alphabet)})
        return f"valid: {alphabet}"
    if c == "steps":
        steps = all_steps(alphabet)
        if fmt == "json":
            return io.dumps([sorted(s) for s in steps])
        return "\n".join(render_step(s) for s in steps)
    if c == "comtrace":
        return _show_comtrace(comtrace(alphabet, ss(args.stepseq), args.max_class), fmt)
    if c == "equiv":
        same = equivalent(alphabet, ss(args.left), ss(args.right), args.max_class)
        return json.dumps(same)
    if c == "concat":
        left = comtrace(alphabet, ss(args.left), args.max_class)
        right = comtrace(alphabet, ss(args.right), args.max_class)
        return _show_comtrace(concat(left, right, args.max_class), fmt)
    if c == "to-lsos":
        return _show_lsos(ct2lct(comtrace(alphabet, ss(args.stepseq), args.max_class)), fmt)
    if c == "to-cdg":
        return _show_cdg(ct2dep(comtrace(alphabet, ss(args.stepseq), args.max_class)), fmt)
    if c == "lsos-to-ct":
        kind, obj = _load_structure(alphabet, args.structure, stdin)
        if kind != "lsos":
            raise SemanticError("expected an lsos-comtrace (prec/wk), got a cd-graph")
        return _show_comtrace(lct2ct(obj, args.max_ground), fmt)
    if c == "cdg-to-lsos":
        kind, obj = _load_structure(alphabet, args.structure, stdin)
        if kind != "cdg":
            raise SemanticError("expected a cd-graph (solid/dashed), got an lsos-comtrace")
        return _show_lsos(dep2lct(obj), fmt)
    if c == "quotient":
        T = _as_lsos(*_load_structure(alphabet, args.structure, stdin))
        q = quotient(T.so, T.labels)
        if fmt == "json":
            return io.dumps(io.quotient_to_json(q))
        if fmt == "dot":
            return io.quotient_to_dot(q)
        return io.quotient_to_text(q)
    if c == "extensions":
        T = _as_lsos(*_load_structure(alphabet, args.structure, stdin))
        exts = stratified_extensions(T.so, args.max_ground)
        if fmt == "json":
            return io.dumps([io.order_to_json(o) for o in exts])
        return "\n".join(str(o) for o in exts)
    if c == "compose":
        k1, left = _load_structure(alphabet, args.left, stdin)
        k2, right = _load_structure(alphabet, args.right, stdin)
        if k1 != k2:
            raise SemanticError("compose needs two lsos-comtraces or two cd-graphs")
        if k1 == "lsos":
            return _show_lsos(compose_lsos(left, right), fmt)
        return _show_cdg(compose_cdg(left, right), fmt)
    if c == "dot":
        kind, obj = _load_structure(alphabet, args.structure, stdin)
        return io.lsos_to_dot(obj) if kind == "lsos" else io.cdg_to_dot(obj)
    raise AssertionError(c)


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out = _execute(args, stdin)
    except ComtraceError as exc:
        stderr.write(f"comtraces: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def main() -> None:
    sys.exit(run())
