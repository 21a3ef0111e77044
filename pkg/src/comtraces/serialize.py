"""JSON, DOT and text renderings of every object the CLI reads or writes."""
from __future__ import annotations

import json

from .alphabet import Alphabet, build_alphabet
from .cdgraph import CdGraph, check_cdgraph
from .congruence import Comtrace
from .errors import InvalidStructure, NotACdGraph, NotAnLsosComtrace, ParseError
from .lsos import LabeledStructure, LsosComtrace, _enum, canonicalize, check_lsos
from .relations import ordered, ordered_pairs
from .sostruct import QuotientStructure, RelationalStructure, check_so_axioms
from .stepseq import Occ, StratifiedOrder, render


def dumps(data) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def _need(data, key, kind):
    if not isinstance(data, dict) or key not in data:
        raise ParseError(f"{kind} JSON needs a {key!r} field")
    return data[key]


# alphabets

def alphabet_to_json(alphabet: Alphabet) -> dict:
    return {
        "events": list(alphabet.events),
        "sim": sorted(sorted(p) for p in alphabet.sim),
        "ser": sorted([a, b] for a, b in alphabet.ser),
    }


def alphabet_from_json(data) -> Alphabet:
    events = _need(data, "events", "alphabet")
    sim = data.get("sim", [])
    ser = data.get("ser", [])
    for pair in list(sim) + list(ser):
        if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(e, str) for e in pair):
            raise ParseError(f"relation entries are [event, event] pairs, got {pair!r}")
    if not isinstance(events, list) or not all(isinstance(e, str) for e in events):
        raise ParseError("'events' must be a list of names")
    return build_alphabet(events, [tuple(p) for p in sim], [tuple(p) for p in ser])


# occurrences and relations

def occ_to_json(x: Occ) -> dict:
    return {"event": x.event, "index": x.index}


def occ_from_json(data) -> Occ:
    if not isinstance(data, dict) or set(data) != {"event", "index"} \
            or not isinstance(data["event"], str) or not isinstance(data["index"], int) \
            or isinstance(data["index"], bool) or data["index"] < 1:
        raise ParseError(f"occurrences look like {{\"event\": \"a\", \"index\": 1}}, got {data!r}")
    return Occ(data["event"], data["index"])


def _pairs_to_json(rel) -> list:
    return [[occ_to_json(a), occ_to_json(b)] for a, b in ordered_pairs(rel)]


def _pairs_from_json(data, key) -> frozenset:
    rel = data.get(key, [])
    if not isinstance(rel, list):
        raise ParseError(f"{key!r} must be a list of pairs")
    out = []
    for pair in rel:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"{key!r} entries are [occurrence, occurrence] pairs")
        out.append((occ_from_json(pair[0]), occ_from_json(pair[1])))
    return frozenset(out)


def _ground_from_json(data, kind) -> frozenset:
    ground = _need(data, "ground", kind)
    if not isinstance(ground, list):
        raise ParseError("'ground' must be a list of occurrences")
    return frozenset(occ_from_json(x) for x in ground)


# lsos-comtraces

def lsos_to_json(T: LsosComtrace) -> dict:
    return {
        "ground": [occ_to_json(x) for x in ordered(T.ground)],
        "prec": _pairs_to_json(T.prec),
        "wk": _pairs_to_json(T.wk),
    }


def lsos_from_json(alphabet: Alphabet, data) -> LsosComtrace:
    """Load, validate (S1-S4, LC1-LC5) and canonicalize."""
    so = RelationalStructure(_ground_from_json(data, "lsos"), _pairs_from_json(data, "prec"),
                             _pairs_from_json(data, "wk"))
    axioms = check_so_axioms(so)
    if not axioms:
        raise InvalidStructure("not an so-structure: " + "; ".join(map(str, axioms.violations)))
    T = LabeledStructure(so, {x: x.event for x in so.ground})
    report = check_lsos(alphabet, T)
    if not report:
        raise NotAnLsosComtrace("; ".join(map(str, report.violations)))
    return canonicalize(alphabet, T)


# cd-graphs

def cdg_to_json(D: CdGraph) -> dict:
    return {
        "ground": [occ_to_json(x) for x in ordered(D.ground)],
        "solid": _pairs_to_json(D.solid),
        "dashed": _pairs_to_json(D.dashed),
    }


def cdg_from_json(alphabet: Alphabet, data) -> CdGraph:
    D = CdGraph(alphabet, _ground_from_json(data, "cd-graph"), _pairs_from_json(data, "solid"),
                _pairs_from_json(data, "dashed"))
    report = check_cdgraph(alphabet, D)
    if not report:
        raise NotACdGraph("; ".join(map(str, report.violations)))
    from .sostruct import diamond_closure
    rename = _enum(diamond_closure(D.structure), D.labels)
    if any(rename[x] != x for x in D.ground):
        D = CdGraph(alphabet, frozenset(rename.values()),
                    frozenset((rename[a], rename[b]) for a, b in D.solid),
                    frozenset((rename[a], rename[b]) for a, b in D.dashed))
    return D


def structure_kind(data) -> str:
    if isinstance(data, dict) and "prec" in data and "wk" in data:
        return "lsos"
    if isinstance(data, dict) and "solid" in data and "dashed" in data:
        return "cdg"
    raise ParseError("JSON is neither an lsos-comtrace (prec/wk) nor a cd-graph (solid/dashed)")


# comtraces, orders, quotients

def stepseq_to_json(t) -> list:
    return [sorted(step) for step in t]


def comtrace_to_json(ct: Comtrace) -> dict:
    return {"members": [stepseq_to_json(m) for m in ct]}


def comtrace_to_text(ct: Comtrace) -> str:
    return "\n".join(render(m) for m in ct)


def order_to_json(order: StratifiedOrder) -> list:
    return [[occ_to_json(x) for x in ordered(b)] for b in order.blocks]


def quotient_to_json(q: QuotientStructure) -> dict:
    index = {b: i for i, b in enumerate(q.blocks)}
    out = {
        "blocks": [[occ_to_json(x) for x in ordered(b)] for b in q.blocks],
        "prec": sorted([index[a], index[b]] for a, b in q.prec),
        "wk": sorted([index[a], index[b]] for a, b in q.wk),
    }
    if q.block_labels is not None:
        out["labels"] = [sorted(ls) for ls in q.block_labels]
    return out


def _block_name(b) -> str:
    return "{" + ",".join(str(x) for x in ordered(b)) + "}"


def quotient_to_text(q: QuotientStructure) -> str:
    def show(rel):
        return " ".join(f"{_block_name(a)}->{_block_name(b)}" for a, b in ordered_pairs(rel))
    lines = ["blocks: " + " ".join(_block_name(b) for b in q.blocks)]
    if q.block_labels is not None:
        lines.append("labels: " + " ".join("{" + ",".join(sorted(ls)) + "}" for ls in q.block_labels))
    lines.append("prec: " + show(q.prec))
    lines.append("wk: " + show(q.wk))
    return "\n".join(lines)


# DOT

def _dot(name: str, nodes: list, strong, weak, shape: str, node_label=str) -> str:
    ids = {x: f"n{i}" for i, x in enumerate(nodes)}
    lines = [f"digraph {name} {{", f"  node [shape={shape}];"]
    for x in nodes:
        lines.append(f'  {ids[x]} [label="{node_label(x)}"];')
    for a, b in ordered_pairs(strong):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    for a, b in ordered_pairs(frozenset(weak) - frozenset(strong)):
        lines.append(f"  {ids[a]} -> {ids[b]} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lsos_to_dot(T: LsosComtrace) -> str:
    """Solid edges for ≺, dashed for ⊏ pairs outside ≺."""
    return _dot("lsos", ordered(T.ground), T.prec, T.wk, "circle")


def cdg_to_dot(D: CdGraph) -> str:
    """Solid edges for →, dashed for ⇢ pairs not already drawn solid."""
    return _dot("cdgraph", ordered(D.ground), D.solid, D.dashed, "circle")


def quotient_to_dot(q: QuotientStructure) -> str:
    return _dot("quotient", list(q.blocks), q.prec, q.wk, "box", _block_name)
