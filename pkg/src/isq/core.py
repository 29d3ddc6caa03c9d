"""Finite inverse semigroups given by partial bijections or by Cayley tables.

Composition of partial bijections is ordinary function composition, read
right to left: ``(f * g)(x) = f(g(x))``.  With this convention ``s s^-1`` is
the identity on the *image* of ``s`` and ``s^-1 s`` the identity on its
domain.  Element ids are indices into a canonically sorted element list; for
partial bijections the order is lexicographic on the image arrays, so the
empty map (the zero) is always element 0 when present.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, SizeLimitError

DEFAULT_MAX_ELEMENTS = 5000


def max_elements() -> int:
    value = os.environ.get("ISQ_MAX_ELEMENTS")
    if value is None:
        return DEFAULT_MAX_ELEMENTS
    try:
        return int(value)
    except ValueError as exc:
        raise InputError(f"ISQ_MAX_ELEMENTS must be an integer, got {value!r}") from exc


def check_size(S: "FiniteInvSemigroup", limit: int | None = None, what: str = "operation") -> None:
    limit = max_elements() if limit is None else limit
    if len(S) > limit:
        raise SizeLimitError(f"{what}: |S| = {len(S)} exceeds the limit of {limit} elements")


@dataclass(frozen=True, order=True)
class PartialBijection:
    """Partial injective map on {1..n}; ``images[i-1]`` is the image of i, 0 if undefined."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise InputError("degree must be positive")
        seen = set()
        for y in self.images:
            if not 0 <= y <= n:
                raise InputError(f"image {y} out of range for degree {n}")
            if y and y in seen:
                raise InputError(f"{self.images} is not injective")
            if y:
                seen.add(y)

    @classmethod
    def from_dict(cls, degree: int, mapping: dict[int, int]) -> "PartialBijection":
        return cls(tuple(mapping.get(x, 0) for x in range(1, degree + 1)))

    @classmethod
    def identity_on(cls, degree: int, subset: Iterable[int]) -> "PartialBijection":
        return cls.from_dict(degree, {x: x for x in subset})

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images, 1) if y)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(y for y in self.images if y)

    @property
    def rank(self) -> int:
        return len(self.domain)

    def __call__(self, x: int) -> int:
        return self.images[x - 1] if x else 0

    def __mul__(self, other: "PartialBijection") -> "PartialBijection":
        if other.degree != self.degree:
            raise InputError("degree mismatch")
        return PartialBijection(tuple(self(y) for y in other.images))

    def inverse(self) -> "PartialBijection":
        inv = [0] * self.degree
        for x, y in enumerate(self.images, 1):
            if y:
                inv[y - 1] = x
        return PartialBijection(tuple(inv))

    def __str__(self) -> str:
        return "[" + ",".join(str(y) if y else "-" for y in self.images) + "]"


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class FiniteInvSemigroup:
    """An inverse semigroup on element ids ``0..n-1`` with a total product table.

    Build instances with :meth:`from_pbij` or :meth:`from_table`; both validate.
    Instances are immutable; derived tables are cached on first use.
    """

    def __init__(
        self,
        mul: np.ndarray,
        inv: np.ndarray,
        *,
        labels: Sequence[str] | None = None,
        elements: Sequence[PartialBijection] | None = None,
        backend: str = "table",
    ) -> None:
        self.mul = _readonly(mul)
        self.inv = _readonly(inv)
        n = len(self.inv)
        self.labels: tuple[str, ...] = tuple(labels) if labels is not None else tuple(map(str, range(n)))
        self.elements: tuple[PartialBijection, ...] | None = tuple(elements) if elements is not None else None
        self.backend = backend

    # -- construction --------------------------------------------------

    @classmethod
    def from_pbij(cls, elements: Iterable[PartialBijection | Sequence[int]]) -> "FiniteInvSemigroup":
        pbs = sorted({e if isinstance(e, PartialBijection) else PartialBijection(tuple(e)) for e in elements})
        if not pbs:
            raise InputError("an inverse semigroup must be nonempty")
        degrees = {p.degree for p in pbs}
        if len(degrees) != 1:
            raise InputError(f"mixed degrees {sorted(degrees)}")
        index = {p: i for i, p in enumerate(pbs)}
        n = len(pbs)
        mul = np.empty((n, n), dtype=np.int64)
        for i, p in enumerate(pbs):
            for j, q in enumerate(pbs):
                r = p * q
                if r not in index:
                    raise InputError(f"not closed under composition: {p} * {q} = {r}")
                mul[i, j] = index[r]
        inv = np.empty(n, dtype=np.int64)
        for i, p in enumerate(pbs):
            q = p.inverse()
            if q not in index:
                raise InputError(f"not closed under inversion: {p}")
            inv[i] = index[q]
        return cls(mul, inv, labels=[str(p) for p in pbs], elements=pbs, backend="pbij")

    @classmethod
    def from_table(
        cls,
        mul: Sequence[Sequence[int]] | np.ndarray,
        inv: Sequence[int] | np.ndarray | None = None,
        *,
        labels: Sequence[str] | None = None,
    ) -> "FiniteInvSemigroup":
        mul_a = np.asarray(mul, dtype=np.int64)
        if inv is None:
            inv = _find_inverses(mul_a)
        report = check_inverse_semigroup(mul_a, inv)
        if report:
            raise InputError("not an inverse semigroup: " + "; ".join(report[:5]))
        return cls(mul_a, np.asarray(inv, dtype=np.int64), labels=labels, backend="table")

    # -- basic accessors -----------------------------------------------

    def __len__(self) -> int:
        return len(self.inv)

    def __repr__(self) -> str:
        return f"FiniteInvSemigroup(n={len(self)}, backend={self.backend!r})"

    @property
    def degree(self) -> int | None:
        return self.elements[0].degree if self.elements else None

    def __iter__(self):
        return iter(range(len(self)))

    def check_element(self, s: int) -> int:
        if not isinstance(s, (int, np.integer)) or not 0 <= s < len(self):
            raise InputError(f"unknown element id {s!r}")
        return int(s)

    def index(self, element: PartialBijection | Sequence[int] | str) -> int:
        """Element id of a partial bijection (or its image list), or of a label."""
        if isinstance(element, str):
            try:
                return self.labels.index(element)
            except ValueError:
                raise InputError(f"no element labelled {element!r}") from None
        if self.elements is None:
            raise InputError("table-backed semigroup has no partial bijections")
        pb = element if isinstance(element, PartialBijection) else PartialBijection(tuple(element))
        try:
            return self.elements.index(pb)
        except ValueError:
            raise InputError(f"{pb} is not an element") from None

    def prod(self, *xs: int) -> int:
        r = int(xs[0])
        for x in xs[1:]:
            r = int(self.mul[r, x])
        return r

    @cached_property
    def dom(self) -> np.ndarray:
        """``s s^-1`` for every s (the groupoid domain)."""
        return _readonly(self.mul[np.arange(len(self)), self.inv])

    @cached_property
    def ran(self) -> np.ndarray:
        """``s^-1 s`` for every s (the groupoid range)."""
        return _readonly(self.mul[self.inv, np.arange(len(self))])

    @cached_property
    def is_idempotent(self) -> np.ndarray:
        mask = self.mul[np.arange(len(self)), np.arange(len(self))] == np.arange(len(self))
        mask.setflags(write=False)
        return mask

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(int(e) for e in np.flatnonzero(self.is_idempotent))

    @cached_property
    def identity(self) -> int | None:
        n = len(self)
        ar = np.arange(n)
        for e in self.idempotents:
            if np.array_equal(self.mul[e], ar) and np.array_equal(self.mul[:, e], ar):
                return e
        return None

    @cached_property
    def leq(self) -> np.ndarray:
        """Natural partial order as a boolean matrix: ``leq[s, t]`` iff s = s s^-1 t."""
        m = self.mul[self.dom, :] == np.arange(len(self))[:, None]
        m.setflags(write=False)
        return m

    @cached_property
    def is_group(self) -> bool:
        return len(self.idempotents) == 1

    def restrict(self, members: Iterable[int]) -> "FiniteInvSemigroup":
        """The inverse subsemigroup on ``members`` as a semigroup in its own right."""
        ids = sorted(set(int(m) for m in members))
        if not ids:
            raise InputError("an inverse semigroup must be nonempty")
        if self.elements is not None:
            return FiniteInvSemigroup.from_pbij(self.elements[i] for i in ids)
        pos = {s: k for k, s in enumerate(ids)}
        try:
            mul = [[pos[int(self.mul[a, b])] for b in ids] for a in ids]
            inv = [pos[int(self.inv[a])] for a in ids]
        except KeyError:
            raise InputError("members are not closed under product and inverse") from None
        return FiniteInvSemigroup(np.array(mul), np.array(inv), labels=[self.labels[i] for i in ids])


def _find_inverses(mul: np.ndarray) -> np.ndarray:
    n = mul.shape[0]
    inv = np.zeros(n, dtype=np.int64)
    for s in range(n):
        cands = [x for x in range(n) if mul[mul[s, x], s] == s and mul[mul[x, s], x] == x]
        if len(cands) != 1:
            raise InputError(f"element {s} has {len(cands)} inverses")
        inv[s] = cands[0]
    return inv


def check_inverse_semigroup(mul, inv=None) -> list[str]:
    """List of violated inverse-semigroup axioms; empty iff the table is valid."""
    problems: list[str] = []
    try:
        mul = np.asarray(mul, dtype=np.int64)
    except (TypeError, ValueError):
        return ["multiplication table is not a rectangular integer array"]
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        return [f"multiplication table must be a nonempty square array, got shape {mul.shape}"]
    n = mul.shape[0]
    if mul.min() < 0 or mul.max() >= n:
        return ["multiplication table has entries outside 0..n-1"]
    for a in range(n):
        lhs = mul[mul[a], :]
        rhs = mul[a][mul]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            b, c = bad[0]
            problems.append(f"associativity fails at ({a},{b},{c})")
            break
    if inv is None:
        try:
            inv = _find_inverses(mul)
        except InputError as exc:
            problems.append(str(exc))
            return problems
    inv = np.asarray(inv, dtype=np.int64)
    if inv.shape != (n,) or inv.min() < 0 or inv.max() >= n:
        return problems + ["inverse table must have n entries in 0..n-1"]
    ar = np.arange(n)
    for s in np.flatnonzero(mul[mul[ar, inv], ar] != ar):
        problems.append(f"s s^-1 s != s for s={s}")
    for s in np.flatnonzero(mul[mul[inv, ar], inv] != inv):
        problems.append(f"s^-1 s s^-1 != s^-1 for s={s}")
    idem = np.flatnonzero(mul[ar, ar] == ar)
    sub = mul[np.ix_(idem, idem)]
    bad = np.argwhere(sub != sub.T)
    for i, j in bad:
        if i < j:
            problems.append(f"idempotents {idem[i]} and {idem[j]} do not commute")
    return problems


# -- order, trace products ---------------------------------------------


def natural_leq(S: FiniteInvSemigroup, s: int, t: int) -> bool:
    s, t = S.check_element(s), S.check_element(t)
    return S.prod(S.dom[s], t) == s


def leq_characterizations(S: FiniteInvSemigroup, s: int, t: int) -> tuple[bool, bool, bool, bool]:
    """The four textbook descriptions of s <= t, evaluated independently."""
    E = S.idempotents
    return (
        any(S.prod(e, t) == s for e in E),
        any(S.prod(t, f) == s for f in E),
        S.prod(s, S.inv[s], t) == s,
        S.prod(t, S.inv[s], s) == s,
    )


def trace_product(S: FiniteInvSemigroup, s: int, t: int) -> int | None:
    """``st`` when ``s^-1 s = t t^-1``, otherwise ``None``."""
    s, t = S.check_element(s), S.check_element(t)
    if S.ran[s] != S.dom[t]:
        return None
    return int(S.mul[s, t])


# -- Green's relations ---------------------------------------------------


def partition_from_keys(keys: Sequence) -> tuple[tuple[int, ...], ...]:
    """Group ids by key; classes sorted by least member."""
    groups: dict = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return tuple(sorted(tuple(g) for g in groups.values()))


def principal_ideals(S: FiniteInvSemigroup) -> np.ndarray:
    """``ideal[s, x]`` iff x lies in S^1 s S^1."""
    n = len(S)
    out = np.zeros((n, n), dtype=bool)
    for s in range(n):
        right = np.unique(np.append(S.mul[s], s))
        out[s, right] = True
        out[s, np.unique(S.mul[:, right])] = True
    return out


@dataclass(frozen=True)
class GreenRelations:
    R: tuple[tuple[int, ...], ...]
    L: tuple[tuple[int, ...], ...]
    H: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    J: tuple[tuple[int, ...], ...]
    j_order: frozenset[tuple[int, int]]  # (i, k): J-class i lies below J-class k

    def j_class_of(self, s: int) -> int:
        for i, c in enumerate(self.J):
            if s in c:
                return i
        raise InputError(f"unknown element {s}")


def j_preorder(S: FiniteInvSemigroup) -> np.ndarray:
    """``m[s, t]`` iff S^1 s S^1 is contained in S^1 t S^1."""
    ideals = principal_ideals(S)
    return ideals.T.copy()


def green_relations(S: FiniteInvSemigroup) -> GreenRelations:
    check_size(S, what="green_relations")
    ideals = principal_ideals(S)
    R = partition_from_keys(S.dom.tolist())
    L = partition_from_keys(S.ran.tolist())
    H = partition_from_keys(list(zip(S.dom.tolist(), S.ran.tolist())))
    J = partition_from_keys([row.tobytes() for row in ideals])
    # D = R o L; in an inverse semigroup s D t iff ss^-1 D tt^-1, i.e. some x has
    # x x^-1 = ss^-1 and x^-1 x = tt^-1.
    pairs = set(zip(S.dom.tolist(), S.ran.tolist()))
    parent = list(range(len(S)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, f in pairs:
        parent[find(e)] = find(f)
    D = partition_from_keys([find(int(S.dom[s])) for s in range(len(S))])
    order = set()
    for i, ci in enumerate(J):
        for k, ck in enumerate(J):
            if ideals[ck[0], ci[0]]:
                order.add((i, k))
    return GreenRelations(R, L, H, D, J, frozenset(order))


# -- subsemigroups and homomorphisms -------------------------------------


def generated_subsemigroup(S: FiniteInvSemigroup, gens: Iterable[int]) -> frozenset[int]:
    """Least subset containing ``gens`` closed under product and inverse."""
    members = {S.check_element(g) for g in gens}
    if not members:
        raise InputError("empty generator set: inverse semigroups are nonempty")
    members |= {int(S.inv[g]) for g in members}
    frontier = list(members)
    while frontier:
        new = set()
        cur = np.fromiter(members, dtype=np.int64)
        for x in frontier:
            for y in S.mul[x, cur].tolist() + S.mul[cur, x].tolist():
                if y not in members:
                    new.add(y)
                    new.add(int(S.inv[y]))
        new -= members
        members |= new
        frontier = list(new)
    return frozenset(members)


def is_closed_subset(S: FiniteInvSemigroup, members: Iterable[int]) -> bool:
    m = set(members)
    return bool(m) and all(int(S.inv[a]) in m for a in m) and all(
        int(S.mul[a, b]) in m for a, b in product(m, repeat=2)
    )


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteInvSemigroup
    target: FiniteInvSemigroup
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        m = np.asarray(self.map, dtype=np.int64)
        if m.shape != (len(self.source),):
            raise InputError("homomorphism map must have one entry per source element")
        if m.min() < 0 or m.max() >= len(self.target):
            raise InputError("homomorphism map has values outside the target")
        if not np.array_equal(self.target.mul[m[:, None], m[None, :]], m[self.source.mul]):
            raise InputError("map does not preserve products")
        object.__setattr__(self, "map", tuple(int(x) for x in m))

    def __call__(self, s: int) -> int:
        return self.map[s]

    @classmethod
    def identity(cls, S: FiniteInvSemigroup) -> "Homomorphism":
        return cls(S, S, tuple(range(len(S))))
