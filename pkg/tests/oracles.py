"""Brute-force reference implementations, independent of the numpy tables.

Partial maps are frozensets of (x, y) pairs; products apply the right factor
first.  Everything here is deliberately naive.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb, factorial

Graph = frozenset


def graph(images) -> Graph:
    return frozenset((i + 1, y) for i, y in enumerate(images) if y)


def compose(f: Graph, g: Graph) -> Graph:
    """f after g."""
    fd = dict(f)
    return frozenset((x, fd[y]) for x, y in g if y in fd)


def inverse(f: Graph) -> Graph:
    return frozenset((y, x) for x, y in f)


def domain(f: Graph) -> frozenset:
    return frozenset(x for x, _ in f)


def image(f: Graph) -> frozenset:
    return frozenset(y for _, y in f)


def below(f: Graph, g: Graph) -> bool:
    return f <= g


def symmetric_inverse_monoid_size(n: int) -> int:
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def all_graphs(n: int) -> list[Graph]:
    pts = range(1, n + 1)
    out = []
    for k in range(n + 1):
        for d in combinations(pts, k):
            for im in permutations(pts, k):
                out.append(frozenset(zip(d, im)))
    return out


def closure(gens) -> frozenset:
    """Inverse subsemigroup generated by gens, by repeated products."""
    S = set(gens) | {inverse(g) for g in gens}
    while True:
        new = {compose(a, b) for a in S for b in S} | {inverse(a) for a in S}
        if new <= S:
            return frozenset(S)
        S |= new


def is_idempotent(f: Graph) -> bool:
    return all(x == y for x, y in f)


def trace_sandwich_below(N, s: Graph, t: Graph) -> bool:
    """exists a, b in N with a.s.b a trace product and a s b <= t."""
    for a in N:
        if domain(a) != image(s):
            continue
        for b in N:
            if image(b) == domain(s) and below(compose(a, compose(s, b)), t):
                return True
    return False


def leq_N(S, N, s, t) -> bool:
    return trace_sandwich_below(N, s, t)


def normal_subsemigroups(S) -> list[frozenset]:
    """Every full inverse subsemigroup closed under conjugation, by subset scan."""
    S = list(S)
    E = [x for x in S if is_idempotent(x)]
    rest = [x for x in S if not is_idempotent(x)]
    out = []
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            N = set(E) | set(extra)
            if any(inverse(x) not in N for x in N):
                continue
            if any(compose(x, y) not in N for x in N for y in N):
                continue
            if any(compose(inverse(s), compose(n, s)) not in N for s in S for n in N):
                continue
            out.append(frozenset(N))
    return out


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1 :]
        yield [[first]] + p


def congruences_table(mul) -> list[frozenset]:
    """All congruences of a small table, as sets of frozenset classes."""
    n = len(mul)
    out = []
    for p in set_partitions(range(n)):
        lab = {x: i for i, c in enumerate(p) for x in c}
        ok = all(
            lab[mul[a][c]] == lab[mul[b][c]] and lab[mul[c][a]] == lab[mul[c][b]]
            for cls in p
            for a in cls
            for b in cls
            for c in range(n)
        )
        if ok:
            out.append(frozenset(frozenset(c) for c in p))
    return out


def j_classes_by_ideals(S) -> set[frozenset]:
    S = list(S)

    def ideal(x):
        return frozenset(compose(a, compose(x, b)) for a in S for b in S) | {x}

    ids = {x: ideal(x) for x in S}
    classes: dict[frozenset, set] = {}
    for x in S:
        classes.setdefault(ids[x], set()).add(x)
    return {frozenset(c) for c in classes.values()}
