"""The preorder <=_N, its equivalence ~_N, and the quotient ordered groupoid S//N."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .core import FiniteInvSemigroup, check_size, partition_from_keys
from .errors import NotNormalError
from .normal import SubsemigroupHandle, enumerate_normal, is_normal
from .ogroupoid import OrderedGroupoid, esn_to, verify_axioms

Partition = tuple[tuple[int, ...], ...]


def _require_normal(N: SubsemigroupHandle) -> None:
    if not is_normal(N):
        raise NotNormalError("N is not a normal inverse subsemigroup")


def trace_sandwiches(S: FiniteInvSemigroup, N: SubsemigroupHandle, s: int) -> np.ndarray:
    """All trace products a.s.b with a, b in N (a^-1 a = ss^-1, b b^-1 = s^-1 s)."""
    members = np.array(N.sorted_members)
    left = members[S.ran[members] == S.dom[s]]
    right = members[S.dom[members] == S.ran[s]]
    return np.unique(S.mul[np.ix_(S.mul[left, s], right)])


def leq_N_matrix(S: FiniteInvSemigroup, N: SubsemigroupHandle, *, check: bool = True) -> np.ndarray:
    """``m[s, t]`` iff a.s.b <= t for some a, b in N."""
    if check:
        _require_normal(N)
    check_size(S, what="leq_N")
    out = np.zeros((len(S), len(S)), dtype=bool)
    for s in range(len(S)):
        out[s] = S.leq[trace_sandwiches(S, N, s)].any(axis=0)
    out.setflags(write=False)
    return out


def leq_N(S: FiniteInvSemigroup, N: SubsemigroupHandle, s: int, t: int) -> bool:
    _require_normal(N)
    s, t = S.check_element(s), S.check_element(t)
    return bool(S.leq[trace_sandwiches(S, N, s), t].any())


def partition_of_equivalence(rel: np.ndarray) -> Partition:
    return partition_from_keys([row.tobytes() for row in rel])


def simeq_N(S: FiniteInvSemigroup, N: SubsemigroupHandle, leq: np.ndarray | None = None) -> Partition:
    m = leq_N_matrix(S, N) if leq is None else leq
    return partition_of_equivalence(m & m.T)


def class_index(partition: Partition, n: int) -> np.ndarray:
    out = np.empty(n, dtype=np.int64)
    for i, c in enumerate(partition):
        out[list(c)] = i
    return out


@dataclass(frozen=True, eq=False)
class NQuotient:
    source: FiniteInvSemigroup
    normal: SubsemigroupHandle
    classes: Partition
    class_of: np.ndarray
    leq: np.ndarray  # <=_N on elements
    groupoid: OrderedGroupoid
    witness_table: dict[tuple[int, int], int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def cls(self, s: int) -> int:
        return int(self.class_of[s])

    def identity_classes(self) -> tuple[int, ...]:
        return self.groupoid.identities


def composition_witnesses(S: FiniteInvSemigroup, N: SubsemigroupHandle, s: int, t: int) -> list[int]:
    """a in N with a a^-1 <= s^-1 s and a^-1 a = t t^-1."""
    return [
        a
        for a in N.sorted_members
        if S.ran[a] == S.dom[t] and S.leq[S.dom[a], S.ran[s]]
    ]


def build_quotient(S: FiniteInvSemigroup, N: SubsemigroupHandle, *, verify: bool = True) -> NQuotient:
    _require_normal(N)
    leq = leq_N_matrix(S, N, check=False)
    classes = simeq_N(S, N, leq)
    class_of = class_index(classes, len(S))
    reps = [c[0] for c in classes]
    idem = S.is_idempotent
    identities = tuple(i for i, c in enumerate(classes) if idem[list(c)].any())
    dom = tuple(int(class_of[S.dom[r]]) for r in reps)
    ran = tuple(int(class_of[S.ran[r]]) for r in reps)
    inv = tuple(int(class_of[S.inv[r]]) for r in reps)
    comp: dict[tuple[int, int], int] = {}
    witnesses: dict[tuple[int, int], int] = {}
    for i, j in product(range(len(classes)), repeat=2):
        if ran[i] != dom[j]:
            continue
        s, t = reps[i], reps[j]
        cands = composition_witnesses(S, N, s, t)
        if not cands:
            raise AssertionError(f"no composition witness for classes {i}, {j}")
        a = cands[0]
        witnesses[(i, j)] = a
        comp[(i, j)] = int(class_of[S.prod(s, a, t)])
    G = OrderedGroupoid(
        identities=identities,
        dom=dom,
        ran=ran,
        inv=inv,
        comp=comp,
        leq=leq[np.ix_(reps, reps)],
        names=tuple(reps),
        labels=tuple("[" + S.labels[r] + "]" for r in reps),
    )
    if verify:
        problems = verify_axioms(G)
        if problems:
            raise AssertionError("quotient is not an ordered groupoid: " + "; ".join(problems[:3]))
    return NQuotient(S, N, classes, class_of, leq, G, witnesses)


def witness_independence_violations(q: NQuotient) -> list[tuple[int, int]]:
    """Composable class pairs whose product depends on representatives or witness."""
    S, N = q.source, q.normal
    bad = []
    for (i, j), k in q.groupoid.comp.items():
        for s in q.classes[i]:
            for t in q.classes[j]:
                if q.class_of[S.ran[s]] != q.class_of[S.dom[t]]:
                    continue
                if any(q.class_of[S.prod(s, a, t)] != k for a in composition_witnesses(S, N, s, t)):
                    bad.append((i, j))
                    break
            else:
                continue
            break
    return bad


def is_inductive_quotient(q: NQuotient) -> bool:
    return q.groupoid.is_inductive


def quotient_inverse_semigroup(q: NQuotient) -> FiniteInvSemigroup:
    return esn_to(q.groupoid)


def j_relation_of(N: SubsemigroupHandle) -> Partition:
    """Green's J-relation of N restricted to E(S) = E(N), computed inside N."""
    S = N.parent
    members = list(N.sorted_members)
    E = list(S.idempotents)
    ideals = {}
    for e in E:
        right = set(S.mul[e, members].tolist()) | {e}
        ideal = set(right)
        for r in right:
            ideal.update(S.mul[members, r].tolist())
        ideals[e] = frozenset(ideal)
    keys = [ideals[e] for e in E]
    return tuple(tuple(E[i] for i in c) for c in partition_from_keys(keys))


def restrict_partition(p: Partition, subset) -> Partition:
    sub = set(subset)
    return tuple(sorted(tuple(x for x in c if x in sub) for c in p if any(x in sub for x in c)))


def preorder_embedding_check(S: FiniteInvSemigroup, normals: list[SubsemigroupHandle] | None = None) -> bool:
    """N -> <=_N is injective and N <= M iff <=_N is contained in <=_M."""
    normals = enumerate_normal(S) if normals is None else normals
    mats = [leq_N_matrix(S, N, check=False) for N in normals]
    if len({m.tobytes() for m in mats}) != len(mats):
        return False
    for (N, a), (M, b) in product(zip(normals, mats), repeat=2):
        contained = not (a & ~b).any()
        if (N <= M) != contained:
            return False
    return True
