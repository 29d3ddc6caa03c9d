"""The polycyclic monoid P_n and its gauge submonoid G_n, symbolically.

Non-zero elements are pairs of words ``(s, t)`` over the first n lowercase
letters; the zero is ``None``.  Both monoids are infinite, so every claim
about them is checked over words of bounded length.  Bounded searches return
``True``/``False`` when the bound provably covers every candidate witness and
``None`` (inconclusive) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from string import ascii_lowercase
from typing import Callable, Iterator, Optional

import numpy as np

from .builders import brandt_index, brandt_semigroup
from .errors import InputError

PolyElement = Optional[tuple[str, str]]
ZERO: PolyElement = None


def alphabet(n: int) -> str:
    if not 1 <= n <= len(ascii_lowercase):
        raise InputError(f"alphabet size must be in 1..26, got {n}")
    return ascii_lowercase[:n]


def _check(n: int, x: PolyElement) -> None:
    if x is None:
        return
    letters = set(alphabet(n))
    if not (isinstance(x, tuple) and len(x) == 2 and set(x[0]) <= letters and set(x[1]) <= letters):
        raise InputError(f"{x!r} is not an element of P_{n}")


def poly_mul(n: int, x: PolyElement, y: PolyElement) -> PolyElement:
    _check(n, x)
    _check(n, y)
    return _mul(x, y)


def _mul(x: PolyElement, y: PolyElement) -> PolyElement:
    if x is None or y is None:
        return None
    s, t = x
    u, v = y
    if t.endswith(u):
        return (s, t[: len(t) - len(u)] + v)
    if u.endswith(t):
        return (u[: len(u) - len(t)] + s, v)
    return None


def poly_inv(x: PolyElement) -> PolyElement:
    return None if x is None else (x[1], x[0])


def is_idempotent(x: PolyElement) -> bool:
    return x is None or x[0] == x[1]


def poly_leq(x: PolyElement, y: PolyElement) -> bool:
    """Natural order: (u, v) <= (s, t) iff u = ps and v = pt."""
    if x is None:
        return True
    if y is None:
        return False
    (u, v), (s, t) = x, y
    if not (u.endswith(s) and v.endswith(t)):
        return False
    return u[: len(u) - len(s)] == v[: len(v) - len(t)]


def words(n: int, maxlen: int) -> list[str]:
    letters = alphabet(n)
    return ["".join(w) for k in range(maxlen + 1) for w in product(letters, repeat=k)]


def bounded_elements(n: int, maxlen: int, *, zero: bool = True) -> list[PolyElement]:
    ws = words(n, maxlen)
    out: list[PolyElement] = [ZERO] if zero else []
    out.extend((s, t) for s in ws for t in ws)
    return out


def gauge_membership(x: PolyElement) -> bool:
    return x is None or len(x[0]) == len(x[1])


def bounded_gauge(n: int, maxlen: int) -> list[PolyElement]:
    return [x for x in bounded_elements(n, maxlen) if gauge_membership(x)]


def normality_violations(
    n: int, member: Callable[[PolyElement], bool], maxlen: int, limit: int = 10
) -> list[str]:
    """Bounded check that {x : member(x)} is a normal inverse submonoid of P_n."""
    out: list[str] = []
    everything = bounded_elements(n, maxlen)
    inside = [x for x in everything if member(x)]
    for p in words(n, maxlen):
        if not member((p, p)):
            out.append(f"idempotent ({p},{p}) missing: not full")
    for x in inside:
        if not member(poly_inv(x)):
            out.append(f"not closed under inverse at {x}")
    for x, y in product(inside, repeat=2):
        if not member(_mul(x, y)):
            out.append(f"not closed under product at {x}, {y}")
            if len(out) >= limit:
                return out
    for s in everything:
        si = poly_inv(s)
        for m in inside:
            c = _mul(_mul(si, m), s)
            if not member(c):
                out.append(f"conjugate of {m} by {s} is {c}, outside")
                if len(out) >= limit:
                    return out
    return out


def gauge_is_normal(n: int, maxlen: int) -> bool:
    return not normality_violations(n, gauge_membership, maxlen)


def gauge_leq(x: PolyElement, y: PolyElement) -> bool:
    """Closed form of <=_{G_n}: |u| - |s| = |v| - |t| >= 0."""
    if x is None or y is None:
        raise InputError("gauge_leq is defined on non-zero elements")
    (u, v), (s, t) = x, y
    d = len(u) - len(s)
    return d >= 0 and d == len(v) - len(t)


@dataclass
class GaugeWitnessSearch:
    """Bounded witness search for a.x.b <= y with a, b in G_n (words of length <= maxlen)."""

    n: int
    maxlen: int
    _by_ran: dict = field(default_factory=dict, init=False, repr=False)
    _by_dom: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        for a in bounded_gauge(self.n, self.maxlen):
            if a is None:
                continue
            self._by_ran.setdefault(_mul(poly_inv(a), a), []).append(a)
            self._by_dom.setdefault(_mul(a, poly_inv(a)), []).append(a)

    def conclusive(self, x: PolyElement) -> bool:
        # Admissible witnesses for x = (u, v) are (h, u) and (v, k) with |h| = |u|,
        # |k| = |v|; the bound covers them all exactly when it covers u and v.
        return x is not None and len(x[0]) <= self.maxlen and len(x[1]) <= self.maxlen

    def sandwiches(self, x: PolyElement) -> set[PolyElement]:
        xd = _mul(x, poly_inv(x))
        out = set()
        for a in self._by_ran.get(xd, ()):
            ax = _mul(a, x)
            for b in self._by_dom.get(_mul(poly_inv(ax), ax), ()):
                out.add(_mul(ax, b))
        return out

    def upper_set(self, x: PolyElement) -> set[PolyElement]:
        """Every y >= some a.x.b in the natural order."""
        ups: set[PolyElement] = set()
        for w in self.sandwiches(x):
            if w is None:
                continue
            h, k = w
            i = 0
            while True:
                ups.add((h[i:], k[i:]))
                if i < len(h) and i < len(k) and h[i] == k[i]:
                    i += 1
                else:
                    break
        return ups

    def leq(self, x: PolyElement, y: PolyElement) -> bool | None:
        if y in self.upper_set(x):
            return True
        return False if self.conclusive(x) else None


def gauge_leq_search(n: int, x: PolyElement, y: PolyElement, maxlen: int) -> bool | None:
    return GaugeWitnessSearch(n, maxlen).leq(x, y)


@dataclass(frozen=True)
class GaugeAgreement:
    pairs: int
    conclusive: int
    contradictions: list[tuple[PolyElement, PolyElement]]
    simeq_contradictions: list[tuple[PolyElement, PolyElement]]


def gauge_leq_agreement(n: int, maxlen: int) -> GaugeAgreement:
    """Closed form vs. witness search over all non-zero pairs with words of length <= maxlen."""
    search = GaugeWitnessSearch(n, maxlen)
    elems = bounded_elements(n, maxlen, zero=False)
    index = {x: i for i, x in enumerate(elems)}
    m = len(elems)
    found = np.zeros((m, m), dtype=bool)
    conclusive = np.zeros(m, dtype=bool)
    for i, x in enumerate(elems):
        conclusive[i] = search.conclusive(x)
        for y in search.upper_set(x):
            j = index.get(y)
            if j is not None:
                found[i, j] = True
    lu = np.array([len(x[0]) for x in elems])
    lv = np.array([len(x[1]) for x in elems])
    du = lu[:, None] - lu[None, :]
    dv = lv[:, None] - lv[None, :]
    closed = (du >= 0) & (du == dv)
    # search says True -> must agree; search says False only where conclusive
    contra = (found & ~closed) | (~found & closed & conclusive[:, None])
    pairs = [(elems[i], elems[j]) for i, j in np.argwhere(contra)]
    both = conclusive[:, None] & conclusive[None, :]
    sym = found & found.T
    same_lengths = (lu[:, None] == lu[None, :]) & (lv[:, None] == lv[None, :])
    simeq_bad = [(elems[i], elems[j]) for i, j in np.argwhere(both & (sym != same_lengths))]
    return GaugeAgreement(m * m, int(conclusive.sum()) * m, pairs, simeq_bad)


def class_of(x: PolyElement) -> tuple[int, int] | None:
    """The ~_{G_n} class of x: (|u|, |v|), or None for the zero."""
    return None if x is None else (len(x[0]), len(x[1]))


def quotient_class_compose(
    c1: tuple[int, int], c2: tuple[int, int], *, n: int = 1, maxlen: int | None = None
) -> tuple[int, int] | None:
    """Compose two classes of P_n//G_n through representatives and a G_n witness.

    Defined iff the range class of c1 equals the domain class of c2.  The
    witness a satisfies a a^-1 <= ran(rep1) and a^-1 a = dom(rep2).
    """
    (i, j), (k, l) = c1, c2
    letter = alphabet(n)[0]
    x, y = (letter * i, letter * j), (letter * k, letter * l)
    if class_of(_mul(poly_inv(x), x)) != class_of(_mul(y, poly_inv(y))):
        return None
    bound = max(i, j, k, l) if maxlen is None else maxlen
    target = _mul(y, poly_inv(y))
    ran_x = _mul(poly_inv(x), x)
    for a in bounded_gauge(n, bound):
        if a is None:
            continue
        if _mul(poly_inv(a), a) == target and poly_leq(_mul(a, poly_inv(a)), ran_x):
            return class_of(_mul(_mul(x, a), y))
    raise AssertionError(f"no composition witness for {c1}, {c2} within length {bound}")


def brandt_comparison(k: int, n: int = 1) -> bool:
    """Class composition on indices 0..k (undefined -> 0) equals the Brandt table B({0..k})."""
    B = brandt_semigroup(k + 1)
    classes = [(i, j) for i in range(k + 1) for j in range(k + 1)]
    ids = {c: brandt_index(B, *c) for c in classes}
    for c1, c2 in product(classes, repeat=2):
        r = quotient_class_compose(c1, c2, n=n)
        expect = int(B.mul[ids[c1], ids[c2]])
        got = 0 if r is None else ids[r]
        if got != expect:
            return False
    return len(ids) + 1 == len(B)


def iter_gauge_identity_order(maxlen: int, n: int = 1) -> Iterator[tuple[int, int, bool]]:
    """(j, k, e_j <=_G e_k) for identity classes indexed by word length."""
    letter = alphabet(n)[0]
    for j in range(maxlen + 1):
        for k in range(maxlen + 1):
            yield j, k, gauge_leq((letter * j, letter * j), (letter * k, letter * k))
