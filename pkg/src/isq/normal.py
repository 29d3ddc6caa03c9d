"""Normal inverse subsemigroups: tests, closures and exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .core import FiniteInvSemigroup, check_size, is_closed_subset
from .errors import InputError


@dataclass(frozen=True, eq=False)
class SubsemigroupHandle:
    """An inverse subsemigroup of ``parent``; equality and hashing go by membership."""

    parent: FiniteInvSemigroup
    members: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(int(m) for m in self.members))
        if not self.members:
            raise InputError("inverse subsemigroups are nonempty")
        if not is_closed_subset(self.parent, self.members):
            raise InputError("members are not closed under product and inverse")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubsemigroupHandle)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash(self.members)

    def __contains__(self, s: int) -> bool:
        return s in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "SubsemigroupHandle") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "SubsemigroupHandle") -> bool:
        return self.members < other.members

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(len(self.parent), dtype=bool)
        m[list(self.members)] = True
        m.setflags(write=False)
        return m

    @cached_property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def sort_key(self) -> tuple:
        return (len(self.members), self.sorted_members)


def subsemigroup(S: FiniteInvSemigroup, members: Iterable[int]) -> SubsemigroupHandle:
    return SubsemigroupHandle(S, frozenset(S.check_element(m) for m in members))


def idempotent_subsemigroup(S: FiniteInvSemigroup) -> SubsemigroupHandle:
    return SubsemigroupHandle(S, frozenset(S.idempotents))


def whole(S: FiniteInvSemigroup) -> SubsemigroupHandle:
    return SubsemigroupHandle(S, frozenset(range(len(S))))


def is_full(N: SubsemigroupHandle) -> bool:
    return set(N.parent.idempotents) <= N.members


def _conjugates(S: FiniteInvSemigroup, n: int) -> np.ndarray:
    """s^-1 n s for every s."""
    return S.mul[S.mul[S.inv, n], np.arange(len(S))]


def is_normal(N: SubsemigroupHandle) -> bool:
    if not is_full(N):
        return False
    S = N.parent
    return all(N.mask[_conjugates(S, n)].all() for n in N.members)


def normal_closure(S: FiniteInvSemigroup, A: Iterable[int]) -> SubsemigroupHandle:
    """Least normal inverse subsemigroup containing A (and hence E(S))."""
    mask = np.zeros(len(S), dtype=bool)
    mask[list(S.idempotents)] = True
    for a in A:
        mask[S.check_element(a)] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[S.inv[idx]] = True
        new[S.mul[np.ix_(idx, idx)].ravel()] = True
        for n in idx:
            new[_conjugates(S, n)] = True
        if np.array_equal(new, mask):
            break
        mask = new
    return SubsemigroupHandle(S, frozenset(np.flatnonzero(mask).tolist()))


def has_kernel_property(N: SubsemigroupHandle) -> bool:
    """st in N and n in N imply snt in N."""
    S = N.parent
    nidx = np.array(N.sorted_members)
    for s in range(len(S)):
        ts = np.flatnonzero(N.mask[S.mul[s]])
        if not len(ts):
            continue
        sn = S.mul[s, nidx]
        if not N.mask[S.mul[np.ix_(sn, ts)]].all():
            return False
    return True


def is_clifford(N: SubsemigroupHandle) -> bool:
    S = N.parent
    return all(S.dom[a] == S.ran[a] for a in N.members)


def upward_closure(S: FiniteInvSemigroup, A: Iterable[int]) -> frozenset[int]:
    idx = [S.check_element(a) for a in A]
    if not idx:
        return frozenset()
    return frozenset(np.flatnonzero(S.leq[idx].any(axis=0)).tolist())


def is_closed(N: SubsemigroupHandle | Iterable[int], S: FiniteInvSemigroup | None = None) -> bool:
    """Upward closed in the natural order."""
    if isinstance(N, SubsemigroupHandle):
        S, members = N.parent, N.members
    else:
        members = frozenset(N)
        if S is None:
            raise InputError("is_closed on a plain set needs the semigroup")
    return upward_closure(S, members) == members


def enumerate_normal(S: FiniteInvSemigroup, limit: int | None = None) -> list[SubsemigroupHandle]:
    """All normal inverse subsemigroups of S, smallest first.

    Breadth-first from E(S): every found N is extended by each missing element
    in turn and re-closed.  Any normal M is reached this way, since adding
    elements of M one at a time never leaves M.
    """
    check_size(S, limit, what="enumerate_normal")
    start = normal_closure(S, ())
    seen = {start.members: start}
    frontier = [start]
    while frontier:
        nxt = []
        for N in frontier:
            for s in range(len(S)):
                if s in N.members:
                    continue
                M = normal_closure(S, N.members | {s})
                if M.members not in seen:
                    seen[M.members] = M
                    nxt.append(M)
        frontier = nxt
    return sorted(seen.values(), key=SubsemigroupHandle.sort_key)


def inclusion_edges(handles: list[SubsemigroupHandle]) -> list[tuple[int, int]]:
    """Covering pairs (i, j) with handles[i] properly inside handles[j]."""
    edges = []
    for i, a in enumerate(handles):
        for j, b in enumerate(handles):
            if a < b and not any(a < c < b for c in handles):
                edges.append((i, j))
    return edges
