"""Naive reference implementations used to cross-check the library.

Everything here works on plain Python sets and tuples, iterates to a
fixpoint or filters brute-force enumerations, and imports nothing from the
package's algorithms.
"""
from itertools import product


def compose(r, s):
    return {(a, c) for a, b in r for b2, c in s if b == b2}


def rt_closure(ground, rel):
    """Reflexive-transitive closure by repeated composition."""
    out = set(rel) | {(x, x) for x in ground}
    while True:
        bigger = out | compose(out, out)
        if bigger == out:
            return out
        out = bigger


def diamond(ground, r1, r2):
    star = rt_closure(ground, set(r1) | set(r2))
    strong = compose(compose(star, r1), star)
    weak = {(a, b) for a, b in star if a != b}
    return frozenset(strong), frozenset(weak)


def so_axioms(ground, prec, wk):
    if any((x, x) in wk for x in ground):
        return False
    if not set(prec) <= set(wk):
        return False
    for a, b, c in product(ground, repeat=3):
        if (a, b) in wk and (b, c) in wk and a != c and (a, c) not in wk:
            return False
        if ((a, b) in wk and (b, c) in prec) or ((a, b) in prec and (b, c) in wk):
            if (a, c) not in prec:
                return False
    return True


def ordered_partitions(items):
    """Ordered set partitions via block-index assignments."""
    items = list(items)
    n = len(items)
    seen = set()
    for assign in product(range(n), repeat=n):
        used = sorted(set(assign))
        if used != list(range(len(used))):
            continue
        blocks = tuple(frozenset(x for x, i in zip(items, assign) if i == k) for k in used)
        if blocks not in seen:
            seen.add(blocks)
            yield blocks


def extensions(ground, prec, wk):
    """Every ordered partition whose level map respects ≺ strictly, ⊏ weakly."""
    out = set()
    for blocks in ordered_partitions(sorted(ground, key=repr)):
        level = {x: i for i, b in enumerate(blocks) for x in b}
        if all(level[a] < level[b] for a, b in prec) and all(level[a] <= level[b] for a, b in wk):
            out.add(blocks)
    return out


def occurrences(u):
    seen = {}
    out = []
    for step in u:
        block = []
        for e in sorted(step):
            seen[e] = seen.get(e, 0) + 1
            block.append((e, seen[e]))
        out.append(frozenset(block))
    return out


def invariants(ser, u):
    """Ground set plus the closed causality/weak causality of a step sequence."""
    blocks = occurrences(u)
    level = {x: i for i, b in enumerate(blocks) for x in b}
    ground = set(level)
    r1 = {(a, b) for a in ground for b in ground
          if level[a] < level[b] and (a[0], b[0]) not in ser}
    r2 = {(a, b) for a in ground for b in ground
          if a != b and level[a] <= level[b] and (b[0], a[0]) not in ser}
    return frozenset(ground), diamond(ground, r1, r2)


def steps(events, sim):
    """Nonempty sim-cliques."""
    out = []
    events = sorted(events)
    for mask in range(1, 1 << len(events)):
        chosen = [e for i, e in enumerate(events) if mask >> i & 1]
        if all(frozenset((a, b)) in sim for a in chosen for b in chosen if a < b):
            out.append(frozenset(chosen))
    return out


def step_sequences_with_counts(all_steps, counts):
    """Every sequence over ``all_steps`` using each event ``counts[e]`` times."""
    total = sum(counts.values())

    def rec(left, acc):
        if not any(left.values()):
            yield tuple(acc)
            return
        for s in all_steps:
            if all(left.get(e, 0) > 0 for e in s):
                for e in s:
                    left[e] -= 1
                acc.append(s)
                yield from rec(left, acc)
                acc.pop()
                for e in s:
                    left[e] += 1

    if total == 0:
        yield ()
        return
    yield from rec(dict(counts), [])


def comtrace_class(events, sim, ser, t):
    """[t] as every step sequence with the same invariants as ``t``."""
    counts = {}
    for s in t:
        for e in s:
            counts[e] = counts.get(e, 0) + 1
    target = invariants(ser, t)
    return {u for u in step_sequences_with_counts(steps(events, sim), counts)
            if invariants(ser, u) == target}


def cycle_classes(ground, wk):
    classes = []
    for x in ground:
        cls = frozenset({x} | {y for y in ground if (x, y) in wk and (y, x) in wk})
        if cls not in classes:
            classes.append(cls)
    return classes
