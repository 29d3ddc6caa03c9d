"""Ordered groupoids, the ESN correspondence and star-injective functors."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from .core import FiniteInvSemigroup
from .errors import InputError, NoRestrictionError, NotInductiveError


def _transitive_closure(m: np.ndarray) -> np.ndarray:
    m = m.copy()
    np.fill_diagonal(m, True)
    for k in range(len(m)):
        m |= m[:, k : k + 1] & m[k : k + 1, :]
    return m


@dataclass(frozen=True, eq=False)
class OrderedGroupoid:
    """Elements are ``0..n-1``; ``comp`` maps composable pairs (ran g = dom h) to gh.

    ``leq`` is normalised to its reflexive-transitive closure on construction.
    ``names`` carries external ids (e.g. least class members of a quotient).
    """

    identities: tuple[int, ...]
    dom: tuple[int, ...]
    ran: tuple[int, ...]
    inv: tuple[int, ...]
    comp: Mapping[tuple[int, int], int]
    leq: np.ndarray
    names: tuple[int, ...] = ()
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.dom)
        if not (len(self.ran) == len(self.inv) == n) or self.leq.shape != (n, n):
            raise InputError("inconsistent groupoid table sizes")
        closed = _transitive_closure(np.asarray(self.leq, dtype=bool))
        closed.setflags(write=False)
        object.__setattr__(self, "leq", closed)
        object.__setattr__(self, "identities", tuple(sorted(self.identities)))
        if not self.names:
            object.__setattr__(self, "names", tuple(range(n)))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(map(str, self.names)))

    def __len__(self) -> int:
        return len(self.dom)

    @cached_property
    def identity_set(self) -> frozenset[int]:
        return frozenset(self.identities)

    def compose(self, g: int, h: int) -> int | None:
        return self.comp.get((g, h))

    def star(self, e: int) -> tuple[int, ...]:
        return tuple(g for g in range(len(self)) if self.dom[g] == e)

    @cached_property
    def is_inductive(self) -> bool:
        return all(meet(self, x, y) is not None for x, y in product(self.identities, repeat=2))


def verify_axioms(G: OrderedGroupoid) -> list[str]:
    """Violations of the groupoid laws and OG1-OG3; empty iff G is an ordered groupoid."""
    out: list[str] = []
    n = len(G)
    ids = G.identity_set
    for x in G.identities:
        if G.dom[x] != x or G.ran[x] != x or G.inv[x] != x:
            out.append(f"identity {x} has dom/ran/inv {G.dom[x]}/{G.ran[x]}/{G.inv[x]}")
    for g in range(n):
        if G.dom[g] not in ids or G.ran[g] not in ids:
            out.append(f"dom or ran of {g} is not an identity")
        if G.inv[G.inv[g]] != g:
            out.append(f"inverse is not an involution at {g}")
        if G.dom[G.inv[g]] != G.ran[g]:
            out.append(f"dom(g^-1) != ran(g) at {g}")
        if G.comp.get((g, G.inv[g])) != G.dom[g] or G.comp.get((G.inv[g], g)) != G.ran[g]:
            out.append(f"g g^-1 or g^-1 g wrong at {g}")
        if G.comp.get((G.dom[g], g)) != g or G.comp.get((g, G.ran[g])) != g:
            out.append(f"identity law fails at {g}")
    for g, h in product(range(n), repeat=2):
        defined = (g, h) in G.comp
        if defined != (G.ran[g] == G.dom[h]):
            out.append(f"composition of ({g},{h}) defined={defined} but ran/dom {G.ran[g]}/{G.dom[h]}")
        elif defined:
            gh = G.comp[(g, h)]
            if G.dom[gh] != G.dom[g] or G.ran[gh] != G.ran[h]:
                out.append(f"dom/ran of composite ({g},{h}) wrong")
    for (g, h), gh in G.comp.items():
        for k in G.star(G.ran[h]):
            left = G.comp.get((gh, k))
            hk = G.comp.get((h, k))
            right = G.comp.get((g, hk)) if hk is not None else None
            if left != right:
                out.append(f"associativity fails at ({g},{h},{k})")
    le = G.leq
    both = le & le.T
    np.fill_diagonal(both, False)
    if both.any():
        g, h = np.argwhere(both)[0]
        out.append(f"order not antisymmetric at ({g},{h})")
    inv = np.asarray(G.inv)
    for g, h in np.argwhere(le):
        if not le[inv[g], inv[h]]:
            out.append(f"OG1 fails at ({g},{h})")
    pairs = list(G.comp.items())
    for (g1, h1), c1 in pairs:
        for (g2, h2), c2 in pairs:
            if le[g1, g2] and le[h1, h2] and not le[c1, c2]:
                out.append(f"OG2 fails at ({g1},{h1}) <= ({g2},{h2})")
    for g in range(n):
        for x in G.identities:
            if le[x, G.dom[g]]:
                cands = [h for h in range(n) if G.dom[h] == x and le[h, g]]
                if len(cands) != 1:
                    out.append(f"OG3: {len(cands)} restrictions of {g} to {x}")
    return out


def restriction(G: OrderedGroupoid, x: int, g: int) -> int:
    """The unique (x|g) with domain x lying below g."""
    if x not in G.identity_set or not G.leq[x, G.dom[g]]:
        raise NoRestrictionError(f"no restriction: {x} is not an identity below dom({g})")
    cands = [h for h in range(len(G)) if G.dom[h] == x and G.leq[h, g]]
    if len(cands) != 1:
        raise NoRestrictionError(f"{len(cands)} candidate restrictions of {g} to {x}")
    return cands[0]


def corestriction(G: OrderedGroupoid, g: int, y: int) -> int:
    return G.inv[restriction(G, y, G.inv[g])]


def meet(G: OrderedGroupoid, x: int, y: int) -> int | None:
    """Greatest lower bound of two identities, or None."""
    lower = [z for z in G.identities if G.leq[z, x] and G.leq[z, y]]
    for z in lower:
        if all(G.leq[w, z] for w in lower):
            return z
    return None


def pseudoproduct(G: OrderedGroupoid, a: int, b: int) -> int | None:
    ell = meet(G, G.ran[a], G.dom[b])
    if ell is None:
        return None
    return G.comp[(corestriction(G, a, ell), restriction(G, ell, b))]


def esn_from(S: FiniteInvSemigroup) -> OrderedGroupoid:
    """The inductive groupoid of S: trace products and the natural order."""
    n = len(S)
    comp = {}
    for s in range(n):
        for t in np.flatnonzero(S.dom == S.ran[s]):
            comp[(s, int(t))] = int(S.mul[s, t])
    return OrderedGroupoid(
        identities=S.idempotents,
        dom=tuple(S.dom.tolist()),
        ran=tuple(S.ran.tolist()),
        inv=tuple(S.inv.tolist()),
        comp=comp,
        leq=np.array(S.leq),
        labels=S.labels,
    )


def esn_to(G: OrderedGroupoid) -> FiniteInvSemigroup:
    """The inverse semigroup (G, pseudoproduct) of an inductive groupoid."""
    if not G.is_inductive:
        raise NotInductiveError("not inductive: identities do not form a meet-semilattice")
    n = len(G)
    mul = np.empty((n, n), dtype=np.int64)
    for a, b in product(range(n), repeat=2):
        mul[a, b] = pseudoproduct(G, a, b)
    return FiniteInvSemigroup.from_table(mul, list(G.inv), labels=G.labels)


@dataclass(frozen=True, eq=False)
class OGFunctor:
    source: OrderedGroupoid
    target: OrderedGroupoid
    map: tuple[int, ...]
    checked: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))
        if self.checked:
            problems = functor_violations(self.source, self.target, self.map)
            if problems:
                raise InputError("not an ordered functor: " + "; ".join(problems[:3]))

    def __call__(self, g: int) -> int:
        return self.map[g]


def functor_violations(G: OrderedGroupoid, H: OrderedGroupoid, f: Sequence[int]) -> list[str]:
    out = []
    if len(f) != len(G) or any(not 0 <= y < len(H) for y in f):
        return ["map must send every source element into the target"]
    for x in G.identities:
        if f[x] not in H.identity_set:
            out.append(f"identity {x} not sent to an identity")
    for g in range(len(G)):
        if f[G.dom[g]] != H.dom[f[g]] or f[G.ran[g]] != H.ran[f[g]]:
            out.append(f"dom/ran not preserved at {g}")
    for (g, h), gh in G.comp.items():
        if H.comp.get((f[g], f[h])) != f[gh]:
            out.append(f"composition not preserved at ({g},{h})")
    for g, h in np.argwhere(G.leq):
        if not H.leq[f[g], f[h]]:
            out.append(f"order not preserved at ({g},{h})")
    return out


def is_functor(G: OrderedGroupoid, H: OrderedGroupoid, f: Sequence[int]) -> bool:
    return not functor_violations(G, H, f)


def is_star_injective(F: OGFunctor) -> bool:
    G = F.source
    for e in G.identities:
        images = [F.map[g] for g in G.star(e)]
        if len(set(images)) != len(images):
            return False
    return True


def identity_functor(G: OrderedGroupoid) -> OGFunctor:
    return OGFunctor(G, G, tuple(range(len(G))))


def is_isomorphism(G: OrderedGroupoid, H: OrderedGroupoid, f: Sequence[int]) -> bool:
    """f is a bijective ordered functor whose inverse is also an ordered functor."""
    if len(G) != len(H) or sorted(f) != list(range(len(H))):
        return False
    back = [0] * len(f)
    for g, h in enumerate(f):
        back[h] = g
    return is_functor(G, H, f) and is_functor(H, G, back)


def poset_groupoid(leq: np.ndarray, labels: Sequence[str] = ()) -> OrderedGroupoid:
    """A poset viewed as an ordered groupoid with only identities."""
    n = len(leq)
    ids = tuple(range(n))
    return OrderedGroupoid(ids, ids, ids, ids, {(i, i): i for i in ids}, np.asarray(leq, dtype=bool), labels=tuple(labels))


def group_groupoid(S: FiniteInvSemigroup) -> OrderedGroupoid:
    """A group as a one-object groupoid with the trivial order."""
    if not S.is_group:
        raise InputError("not a group")
    e = S.idempotents[0]
    n = len(S)
    comp = {(g, h): int(S.mul[g, h]) for g, h in product(range(n), repeat=2)}
    return OrderedGroupoid((e,), (e,) * n, (e,) * n, tuple(S.inv.tolist()), comp, np.eye(n, dtype=bool), labels=S.labels)


def product_groupoid(A: OrderedGroupoid, B: OrderedGroupoid) -> OrderedGroupoid:
    """Componentwise product; (a, b) has index a * |B| + b."""
    nb = len(B)
    n = len(A) * nb

    def idx(a: int, b: int) -> int:
        return a * nb + b

    pairs = [(a, b) for a in range(len(A)) for b in range(nb)]
    comp = {}
    for (a1, a2), a in A.comp.items():
        for (b1, b2), b in B.comp.items():
            comp[(idx(a1, b1), idx(a2, b2))] = idx(a, b)
    leq = np.zeros((n, n), dtype=bool)
    for i, (a, b) in enumerate(pairs):
        for j, (c, d) in enumerate(pairs):
            leq[i, j] = A.leq[a, c] and B.leq[b, d]
    return OrderedGroupoid(
        identities=tuple(idx(x, y) for x in A.identities for y in B.identities),
        dom=tuple(idx(A.dom[a], B.dom[b]) for a, b in pairs),
        ran=tuple(idx(A.ran[a], B.ran[b]) for a, b in pairs),
        inv=tuple(idx(A.inv[a], B.inv[b]) for a, b in pairs),
        comp=comp,
        leq=leq,
        labels=tuple(f"({A.labels[a]},{B.labels[b]})" for a, b in pairs),
    )
