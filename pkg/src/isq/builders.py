"""Constructors for the concrete semigroups used throughout the package."""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Sequence

import numpy as np

from .core import FiniteInvSemigroup, PartialBijection, generated_subsemigroup
from .errors import InputError

MAX_SYMMETRIC_DEGREE = 5


def all_partial_bijections(n: int) -> list[PartialBijection]:
    out = []
    points = range(1, n + 1)
    for k in range(n + 1):
        for dom in combinations(points, k):
            for img in permutations(points, k):
                out.append(PartialBijection.from_dict(n, dict(zip(dom, img))))
    return out


def symmetric_inverse_monoid(n: int) -> FiniteInvSemigroup:
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise InputError(f"symmetric inverse monoid degree must be in 1..{MAX_SYMMETRIC_DEGREE}, got {n}")
    return FiniteInvSemigroup.from_pbij(all_partial_bijections(n))


def _pb(n: int, mapping: dict[int, int]) -> PartialBijection:
    return PartialBijection.from_dict(n, mapping)


def example_S6() -> FiniteInvSemigroup:
    """{id_{1,3}, id_1, id_2, f, f^-1, 0} inside I_4, with f: 1 -> 2."""
    return FiniteInvSemigroup.from_pbij(
        [
            _pb(4, {1: 1, 3: 3}),
            _pb(4, {1: 1}),
            _pb(4, {2: 2}),
            _pb(4, {1: 2}),
            _pb(4, {2: 1}),
            _pb(4, {}),
        ]
    )


def example_T() -> FiniteInvSemigroup:
    """Inverse subsemigroup of I_4 generated by id_{1,3}, id_{2,4}, f: 1->2, g: 3->4."""
    I4 = symmetric_inverse_monoid(4)
    gens = [_pb(4, {1: 1, 3: 3}), _pb(4, {2: 2, 4: 4}), _pb(4, {1: 2}), _pb(4, {3: 4})]
    members = generated_subsemigroup(I4, [I4.index(g) for g in gens])
    return I4.restrict(members)


def cyclic_group(n: int) -> FiniteInvSemigroup:
    if n < 1:
        raise InputError("group order must be positive")
    ar = np.arange(n)
    return FiniteInvSemigroup.from_table((ar[:, None] + ar[None, :]) % n, (-ar) % n, labels=[f"g{i}" for i in ar])


def symmetric_group(n: int) -> FiniteInvSemigroup:
    return FiniteInvSemigroup.from_pbij(PartialBijection(p) for p in permutations(range(1, n + 1)))


def chain_semilattice(k: int) -> FiniteInvSemigroup:
    """The chain 0 < 1 < ... < k-1 under min."""
    ar = np.arange(k)
    return FiniteInvSemigroup.from_table(np.minimum(ar[:, None], ar[None, :]), ar, labels=[f"e{i}" for i in ar])


def free_semilattice(m: int) -> FiniteInvSemigroup:
    """Subsets of an m-set under intersection."""
    masks = list(range(1 << m))
    mul = [[a & b for b in masks] for a in masks]
    return FiniteInvSemigroup.from_table(mul, masks, labels=[f"{{{a:0{m}b}}}" for a in masks])


def direct_product_with_group(T: FiniteInvSemigroup, G: FiniteInvSemigroup) -> FiniteInvSemigroup:
    """T x G with componentwise operations; element (t, g) has id t*|G| + g."""
    if not G.is_group:
        raise InputError("second factor must be a group")
    return direct_product(T, G)


def direct_product(A: FiniteInvSemigroup, B: FiniteInvSemigroup) -> FiniteInvSemigroup:
    na, nb = len(A), len(B)
    pairs = list(product(range(na), range(nb)))
    mul = np.empty((na * nb, na * nb), dtype=np.int64)
    for i, (a1, b1) in enumerate(pairs):
        mul[i] = A.mul[a1, [p[0] for p in pairs]] * nb + B.mul[b1, [p[1] for p in pairs]]
    inv = [int(A.inv[a]) * nb + int(B.inv[b]) for a, b in pairs]
    labels = [f"({A.labels[a]},{B.labels[b]})" for a, b in pairs]
    return FiniteInvSemigroup.from_table(mul, inv, labels=labels)


def brandt_semigroup(index_set: int | Sequence[int], group: FiniteInvSemigroup | None = None) -> FiniteInvSemigroup:
    """Brandt semigroup B(G, I): elements (i, g, j) and 0, with (i,g,j)(j,h,l) = (i,gh,l).

    Element 0 is the zero; (i, g, j) follows in lexicographic order of
    (position of i, g, position of j).
    """
    idx = list(range(index_set)) if isinstance(index_set, int) else list(index_set)
    if not idx:
        raise InputError("index set must be nonempty")
    G = group if group is not None else cyclic_group(1)
    if not G.is_group:
        raise InputError("Brandt semigroups need a group")
    k, m = len(idx), len(G)
    triples = [(i, g, j) for i in range(k) for g in range(m) for j in range(k)]
    pos = {t: p + 1 for p, t in enumerate(triples)}
    n = len(triples) + 1
    mul = np.zeros((n, n), dtype=np.int64)
    inv = np.zeros(n, dtype=np.int64)
    for (i, g, j), p in pos.items():
        inv[p] = pos[(j, int(G.inv[g]), i)]
        for (k2, h, l), q in pos.items():
            if j == k2:
                mul[p, q] = pos[(i, int(G.mul[g, h]), l)]
    if m == 1:
        labels = ["0"] + [f"({idx[i]},{idx[j]})" for i, _, j in triples]
    else:
        labels = ["0"] + [f"({idx[i]},{G.labels[g]},{idx[j]})" for i, g, j in triples]
    return FiniteInvSemigroup.from_table(mul, inv, labels=labels)


def brandt_index(B: FiniteInvSemigroup, i: int, j: int) -> int:
    """Id of (i, j) in a Brandt semigroup over the trivial group on {0..k-1}."""
    return B.labels.index(f"({i},{j})")
