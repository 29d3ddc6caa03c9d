"""Congruences on finite inverse semigroups: kernel/trace, congruence pairs and friends."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np

from .core import FiniteInvSemigroup, Homomorphism, check_size, partition_from_keys
from .errors import InputError, InvalidPairError, NotInductiveError, NotNormalError, NotStarInjectiveError
from .normal import SubsemigroupHandle, has_kernel_property, is_clifford, is_closed, is_full, is_normal
from .ogroupoid import OGFunctor, esn_from, is_star_injective
from .quotient import Partition, build_quotient, class_index, j_relation_of, quotient_inverse_semigroup, simeq_N

ALL_CONGRUENCES_LIMIT = 200


def _canonical(classes: Iterable[Iterable[int]]) -> Partition:
    return tuple(sorted(tuple(sorted(int(x) for x in c)) for c in classes))


def is_compatible(S: FiniteInvSemigroup, partition: Partition) -> bool:
    lab = class_index(partition, len(S))
    left = lab[S.mul]  # left[u, x] = class of u x
    right = lab[S.mul.T]  # right[u, x] = class of x u
    for c in partition:
        if len(c) > 1:
            c = list(c)
            if (left[:, c] != left[:, c[:1]]).any() or (right[:, c] != right[:, c[:1]]).any():
                return False
    return True


def partition_refines(p: Partition, q: Partition, n: int) -> bool:
    """Every class of p lies inside a class of q."""
    lab = class_index(q, n)
    return all(len({int(lab[x]) for x in c}) == 1 for c in p)


@dataclass(frozen=True, eq=False)
class Congruence:
    S: FiniteInvSemigroup
    classes: Partition

    def __post_init__(self) -> None:
        classes = _canonical(self.classes)
        if sorted(x for c in classes for x in c) != list(range(len(self.S))):
            raise InputError("classes must partition the element ids")
        if not is_compatible(self.S, classes):
            raise InputError("partition is not compatible with multiplication")
        object.__setattr__(self, "classes", classes)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Congruence) and other.S is self.S and other.classes == self.classes

    def __hash__(self) -> int:
        return hash(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    @cached_property
    def class_of(self) -> np.ndarray:
        return class_index(self.classes, len(self.S))

    def related(self, s: int, t: int) -> bool:
        return self.class_of[s] == self.class_of[t]

    def refines(self, other: "Congruence | Partition") -> bool:
        theirs = other.classes if isinstance(other, Congruence) else other
        return partition_refines(self.classes, theirs, len(self.S))

    @classmethod
    def identity(cls, S: FiniteInvSemigroup) -> "Congruence":
        return cls(S, tuple((s,) for s in range(len(S))))

    @classmethod
    def universal(cls, S: FiniteInvSemigroup) -> "Congruence":
        return cls(S, (tuple(range(len(S))),))

    @classmethod
    def from_relation(cls, S: FiniteInvSemigroup, rel: np.ndarray) -> "Congruence":
        return cls(S, partition_from_keys([row.tobytes() for row in rel]))


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def classes(self) -> Partition:
        return partition_from_keys([self.find(x) for x in range(len(self.parent))])


def congruence_from_pairs(S: FiniteInvSemigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs``."""
    uf = _UnionFind(len(S))
    queue = [(S.check_element(a), S.check_element(b)) for a, b in pairs]
    while queue:
        a, b = queue.pop()
        if uf.union(a, b):
            queue.extend(zip(S.mul[:, a].tolist(), S.mul[:, b].tolist()))
            queue.extend(zip(S.mul[a].tolist(), S.mul[b].tolist()))
    return Congruence(S, uf.classes())


def join(r1: Congruence, r2: Congruence) -> Congruence:
    """Join in the congruence lattice (the equivalence join of two congruences)."""
    uf = _UnionFind(len(r1.S))
    for c in r1.classes + r2.classes:
        for x in c[1:]:
            uf.union(c[0], x)
    return Congruence(r1.S, uf.classes())


# -- kernel and trace ----------------------------------------------------


def kernel_of_partition(S: FiniteInvSemigroup, partition: Partition) -> frozenset[int]:
    idem = S.is_idempotent
    return frozenset(x for c in partition if idem[list(c)].any() for x in c)


def kernel(rho: Congruence) -> SubsemigroupHandle:
    K = SubsemigroupHandle(rho.S, kernel_of_partition(rho.S, rho.classes))
    assert is_full(K) and has_kernel_property(K)
    return K


def trace_of_partition(S: FiniteInvSemigroup, partition: Partition) -> Partition:
    idem = set(S.idempotents)
    return _canonical(tuple(x for x in c if x in idem) for c in partition if any(x in idem for x in c))


def trace(rho: Congruence) -> Partition:
    nu = trace_of_partition(rho.S, rho.classes)
    assert is_normal_E_congruence(rho.S, nu)
    return nu


def is_normal_E_congruence(S: FiniteInvSemigroup, nu: Partition) -> bool:
    """nu is a congruence on the semilattice E(S) stable under conjugation."""
    E = list(S.idempotents)
    if sorted(x for c in nu for x in c) != E:
        return False
    lab = {x: i for i, c in enumerate(nu) for x in c}
    for c in nu:
        for e, f in combinations(c, 2):
            if any(lab[int(S.mul[e, g])] != lab[int(S.mul[f, g])] for g in E):
                return False
            for s in range(len(S)):
                a = S.prod(S.inv[s], e, s)
                b = S.prod(S.inv[s], f, s)
                if lab[a] != lab[b]:
                    return False
    return True


def identity_on_E(S: FiniteInvSemigroup) -> Partition:
    return tuple((e,) for e in S.idempotents)


def universal_on_E(S: FiniteInvSemigroup) -> Partition:
    return (tuple(S.idempotents),)


@dataclass(frozen=True)
class CongruencePair:
    K: SubsemigroupHandle
    nu: Partition


def pair_violations(K: SubsemigroupHandle, nu: Partition) -> list[str]:
    S = K.parent
    out = []
    if not is_normal(K):
        out.append("K is not a normal inverse subsemigroup")
    if not is_normal_E_congruence(S, nu):
        out.append("nu is not a normal congruence on E(S)")
        return out
    lab = {x: i for i, c in enumerate(nu) for x in c}
    for s in range(len(S)):
        if s in K:
            continue
        for e in S.idempotents:
            if int(S.mul[s, e]) in K and lab[int(S.ran[s])] == lab[e]:
                out.append(f"condition (se in K, s^-1 s nu e => s in K) fails at s={s}, e={e}")
                break
    for u in K.sorted_members:
        if lab[int(S.dom[u])] != lab[int(S.ran[u])]:
            out.append(f"condition (u in K => uu^-1 nu u^-1 u) fails at u={u}")
    return out


def validate_pair(K: SubsemigroupHandle, nu: Partition) -> bool:
    return not pair_violations(K, nu)


def rho_from_pair(K: SubsemigroupHandle, nu: Partition) -> Congruence:
    """s rho t iff s t^-1 in K and s^-1 s nu t^-1 t."""
    problems = pair_violations(K, nu)
    if problems:
        raise InvalidPairError("invalid congruence pair: " + "; ".join(problems))
    S = K.parent
    lab = np.full(len(S), -1, dtype=np.int64)
    for i, c in enumerate(nu):
        lab[list(c)] = i
    in_k = K.mask[S.mul[:, S.inv]]  # in_k[s, t]: s t^-1 in K
    same_trace = lab[S.ran][:, None] == lab[S.ran][None, :]
    rho = Congruence.from_relation(S, in_k & same_trace)
    assert kernel(rho) == K and trace(rho) == _canonical(nu)
    return rho


# -- special congruences --------------------------------------------------


def minimal_group_congruence(S: FiniteInvSemigroup) -> Congruence:
    """s sigma t iff es = et for some idempotent e."""
    E = list(S.idempotents)
    rel = np.zeros((len(S), len(S)), dtype=bool)
    for e in E:
        row = S.mul[e]
        rel |= row[:, None] == row[None, :]
    sigma = Congruence.from_relation(S, rel)
    assert len(trace_of_partition(S, sigma.classes)) == 1
    return sigma


def coset_congruence(S: FiniteInvSemigroup, N: SubsemigroupHandle) -> Congruence:
    """a ~ b iff a b^-1 in N, for N closed and normal."""
    if not is_normal(N):
        raise NotNormalError("N is not normal")
    if not is_closed(N):
        raise InputError("N is not closed in the natural partial order")
    rho = Congruence.from_relation(S, N.mask[S.mul[:, S.inv]])
    assert minimal_group_congruence(S).refines(rho)
    assert kernel(rho) == N
    return rho


def quotient_semigroup(rho: Congruence) -> tuple[FiniteInvSemigroup, Homomorphism]:
    """S/rho on class indices, with the quotient map."""
    S = rho.S
    reps = [c[0] for c in rho.classes]
    lab = rho.class_of
    mul = lab[S.mul[np.ix_(reps, reps)]]
    inv = lab[S.inv[reps]]
    Q = FiniteInvSemigroup.from_table(mul, inv, labels=["{" + ",".join(S.labels[x] for x in c) + "}" for c in rho.classes])
    return Q, Homomorphism(S, Q, tuple(lab.tolist()))


def congruence_of_hom(phi: Homomorphism) -> Congruence:
    return Congruence(phi.source, partition_from_keys(phi.map))


def simeq_partition(S: FiniteInvSemigroup, N: SubsemigroupHandle) -> Partition:
    return simeq_N(S, N)


def is_simeq_congruence(S: FiniteInvSemigroup, N: SubsemigroupHandle) -> bool:
    """Whether ~_N is a congruence.

    For full N with the kernel property this is cross-checked against
    J_N being a normal congruence on E(S).
    """
    answer = is_compatible(S, simeq_N(S, N))
    if is_full(N) and has_kernel_property(N):
        assert answer == is_normal_E_congruence(S, j_relation_of(N))
    return answer


def congruences_with_kernel(N: SubsemigroupHandle, congruences: "list[Congruence] | None" = None) -> list[Congruence]:
    S = N.parent
    congruences = all_congruences(S).congruences if congruences is None else congruences
    return [r for r in congruences if kernel_of_partition(S, r.classes) == N.members]


def minimality_check(S: FiniteInvSemigroup, N: SubsemigroupHandle, congruences: list[Congruence] | None = None) -> bool:
    """~_N refines every congruence with kernel N."""
    simeq = simeq_N(S, N)
    return all(partition_refines(simeq, r.classes, len(S)) for r in congruences_with_kernel(N, congruences))


@dataclass(frozen=True)
class IdempotentSeparatingReport:
    rho: Congruence
    simeq: Partition
    equal: bool
    kappa_isomorphism: bool

    @property
    def ok(self) -> bool:
        return self.equal and self.kappa_isomorphism


def idempotent_separating_congruence(K: SubsemigroupHandle) -> Congruence:
    """s rho t iff s t^-1 in K and s^-1 s = t^-1 t."""
    if not is_normal(K):
        raise NotNormalError("K is not normal")
    if not is_clifford(K):
        raise InputError("K is not a Clifford subsemigroup")
    return rho_from_pair(K, identity_on_E(K.parent))


def idempotent_separating_check(S: FiniteInvSemigroup, K: SubsemigroupHandle) -> IdempotentSeparatingReport:
    rho = idempotent_separating_congruence(K)
    q = build_quotient(S, K)
    equal = q.classes == rho.classes
    iso = False
    if equal:
        try:
            quot = quotient_inverse_semigroup(q)
        except NotInductiveError:
            quot = None
        if quot is not None:
            Q, _ = quotient_semigroup(rho)
            kappa = [int(rho.class_of[r]) for r in q.representatives]
            km = np.array(kappa)
            iso = len(set(kappa)) == len(kappa) == len(Q) and np.array_equal(km[quot.mul], Q.mul[np.ix_(km, km)])
    return IdempotentSeparatingReport(rho, q.classes, equal, iso)


def induced_pair_from_functor(
    S: FiniteInvSemigroup, N: SubsemigroupHandle, psi_map, Q: FiniteInvSemigroup
) -> CongruencePair:
    """(N, nu) with nu induced by E(S) -> S//N -> E(Q), for surjective star-injective psi."""
    q = build_quotient(S, N)
    psi = psi_map if isinstance(psi_map, OGFunctor) else OGFunctor(q.groupoid, esn_from(Q), tuple(psi_map))
    if not is_star_injective(psi):
        raise NotStarInjectiveError("psi is not star-injective")
    if set(psi.map) != set(range(len(Q))):
        raise InputError("psi is not surjective")
    phi = [psi.map[q.cls(s)] for s in range(len(S))]
    E = list(S.idempotents)
    nu = tuple(tuple(E[i] for i in c) for c in partition_from_keys([phi[e] for e in E]))
    pair = CongruencePair(N, nu)
    problems = pair_violations(N, nu)
    if problems:
        raise AssertionError("induced pair is not a congruence pair: " + "; ".join(problems))
    assert rho_from_pair(N, nu).classes == partition_from_keys(phi)
    return pair


# -- the whole lattice ----------------------------------------------------


@dataclass(frozen=True)
class CongruenceLattice:
    congruences: list[Congruence]

    def covers(self) -> list[tuple[int, int]]:
        cs = self.congruences
        below = [[i != j and a.refines(b) for j, b in enumerate(cs)] for i, a in enumerate(cs)]
        return [
            (i, j)
            for i in range(len(cs))
            for j in range(len(cs))
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(len(cs)))
        ]


def principal_congruence(S: FiniteInvSemigroup, a: int, b: int) -> Congruence:
    return congruence_from_pairs(S, [(a, b)])


def all_congruences(S: FiniteInvSemigroup, limit: int = ALL_CONGRUENCES_LIMIT) -> CongruenceLattice:
    """Every congruence, as joins of principal congruences; finest first."""
    check_size(S, limit, what="all_congruences")
    found = {Congruence.identity(S).classes: Congruence.identity(S)}
    principal = {}
    for a, b in combinations(range(len(S)), 2):
        r = principal_congruence(S, a, b)
        principal.setdefault(r.classes, r)
    found.update(principal)
    frontier = list(principal.values())
    gens = list(principal.values())
    while frontier:
        nxt = []
        for r in frontier:
            for g in gens:
                j = join(r, g)
                if j.classes not in found:
                    found[j.classes] = j
                    nxt.append(j)
        frontier = nxt
    ordered = sorted(found.values(), key=lambda r: (-len(r.classes), r.classes))
    return CongruenceLattice(ordered)
