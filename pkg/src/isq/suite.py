"""Named executable checks: fixtures, property sweeps and the acceptance criteria.

Every ``criterion_*`` function returns a :class:`CheckResult`; ``run_suite``
runs them all in a fixed order.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Callable

import numpy as np

from . import builders, munn, poly
from .congruence import (
    Congruence,
    all_congruences,
    coset_congruence,
    idempotent_separating_check,
    is_normal_E_congruence,
    is_simeq_congruence,
    kernel,
    kernel_of_partition,
    minimal_group_congruence,
    minimality_check,
    quotient_semigroup,
    rho_from_pair,
    trace,
)
from .core import FiniteInvSemigroup, Homomorphism, green_relations, j_preorder
from .errors import NotInductiveError
from .factorize import factorize_hom, legs_by_normal, uniqueness_check
from .normal import (
    SubsemigroupHandle,
    enumerate_normal,
    has_kernel_property,
    idempotent_subsemigroup,
    is_clifford,
    subsemigroup,
    whole,
)
from .ogroupoid import group_groupoid, is_isomorphism, meet, poset_groupoid, product_groupoid, verify_axioms
from .quotient import (
    build_quotient,
    j_relation_of,
    leq_N_matrix,
    preorder_embedding_check,
    restrict_partition,
    simeq_N,
    witness_independence_violations,
)

FIXTURE_LIMIT = 50
DEFAULT_SEED = 20240601


@lru_cache(maxsize=None)
def fixtures() -> dict[str, FiniteInvSemigroup]:
    """Small fixtures (at most FIXTURE_LIMIT elements), in a fixed order."""
    I2 = builders.symmetric_inverse_monoid(2)
    Z2 = builders.cyclic_group(2)
    out = {
        "I1": builders.symmetric_inverse_monoid(1),
        "I2": I2,
        "I3": builders.symmetric_inverse_monoid(3),
        "S6": builders.example_S6(),
        "T": builders.example_T(),
        "Z2": Z2,
        "Z3": builders.cyclic_group(3),
        "Sym3": builders.symmetric_group(3),
        "chain3": builders.chain_semilattice(3),
        "free_semilattice2": builders.free_semilattice(2),
        "B2": builders.brandt_semigroup(2),
        "B3": builders.brandt_semigroup(3),
        "B2xZ2": builders.brandt_semigroup(2, Z2),
        "I2xZ2": builders.direct_product_with_group(I2, Z2),
        "TxZ2": builders.direct_product_with_group(builders.example_T(), Z2),
    }
    assert all(len(S) <= FIXTURE_LIMIT for S in out.values())
    return out


@lru_cache(maxsize=None)
def normals_of(name: str) -> tuple[SubsemigroupHandle, ...]:
    return tuple(enumerate_normal(fixtures()[name]))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except AssertionError as exc:
        ok, detail = False, f"assertion: {exc}"
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


# -- property sweeps over one (S, N) -----------------------------------------


def preorder_violations(S: FiniteInvSemigroup, N: SubsemigroupHandle, le: np.ndarray | None = None) -> list[str]:
    """The seven listed facts about <=_N."""
    le = leq_N_matrix(S, N) if le is None else le
    out = []
    E = list(S.idempotents)
    if N.members == frozenset(E) and not np.array_equal(le, S.leq):
        out.append("(a) <=_E differs from the natural order")
    if N.members == frozenset(range(len(S))) and not np.array_equal(le, j_preorder(S)):
        out.append("(b) <=_S differs from the J-preorder")
    if (S.leq & ~le).any():
        out.append("(c) natural order not contained in <=_N")
    below_idem = le[:, E].any(axis=1)
    if set(np.flatnonzero(below_idem).tolist()) != N.members:
        out.append("(d) {s : s <=_N e} is not N")
    sq = S.mul[np.arange(len(S)), np.arange(len(S))]
    for s in range(len(S)):
        if le[s, sq[s]] and s not in N:
            out.append(f"(e) {s} <=_N s^2 but not in N")
    for s, t in np.argwhere(le):
        if int(S.mul[s, S.inv[t]]) not in N:
            out.append(f"(f) {s} <=_N {t} but s t^-1 not in N")
            break
    if not le.diagonal().all():
        out.append("(g) not reflexive")
    if ((le.astype(np.int64) @ le.astype(np.int64) > 0) & ~le).any():
        out.append("(g) not transitive")
    return out


def simeq_violations(S: FiniteInvSemigroup, N: SubsemigroupHandle, classes=None) -> list[str]:
    """The seven listed facts about ~_N."""
    classes = simeq_N(S, N) if classes is None else classes
    lab = np.empty(len(S), dtype=np.int64)
    for i, c in enumerate(classes):
        lab[list(c)] = i
    out = []
    for n in N.sorted_members:
        if len({lab[n], lab[S.dom[n]], lab[S.inv[n]], lab[S.ran[n]]}) != 1:
            out.append(f"(a) fails at {n}")
    for c in classes:
        inside = {x in N for x in c}
        if len(inside) != 1:
            out.append(f"(b) class {c} straddles N")
    idem = S.is_idempotent
    union = {x for c in classes if idem[list(c)].any() for x in c}
    if union != N.members:
        out.append("(c) idempotent classes do not cover N exactly")
    for c in classes:
        for f in (S.dom, S.ran, S.inv):
            if len({int(lab[f[x]]) for x in c}) != 1:
                out.append(f"(d) class {c} not respected by dom/ran/inv")
    if restrict_partition(classes, S.idempotents) != restrict_partition(j_relation_of(N), S.idempotents):
        out.append("(e) restriction to E is not J_N")
    if N.members == frozenset(range(len(S))) and sorted(classes) != sorted(green_relations(S).J):
        out.append("(f) ~_S is not J")
    if N.members == frozenset(S.idempotents) and len(classes) != len(S):
        out.append("(g) ~_E is not trivial")
    return out


def quotient_violations(S: FiniteInvSemigroup, N: SubsemigroupHandle) -> list[str]:
    out = []
    le = leq_N_matrix(S, N)
    out += preorder_violations(S, N, le)
    q = build_quotient(S, N, verify=False)
    out += simeq_violations(S, N, q.classes)
    out += [f"OG axiom: {p}" for p in verify_axioms(q.groupoid)]
    out += [f"witness dependence at {p}" for p in witness_independence_violations(q)]
    return out


def fixture_sweep(name: str) -> list[str]:
    S = fixtures()[name]
    normals = list(normals_of(name))
    out = []
    for N in normals:
        out += [f"{name} N={N.sorted_members}: {p}" for p in quotient_violations(S, N)]
    if not preorder_embedding_check(S, normals):
        out.append(f"{name}: N -> <=_N is not an order embedding")
    return out


# -- congruence sweeps --------------------------------------------------------


@lru_cache(maxsize=None)
def congruences_of(name: str) -> tuple[Congruence, ...]:
    return tuple(all_congruences(fixtures()[name]).congruences)


def congruence_violations(name: str) -> list[str]:
    S = fixtures()[name]
    cs = list(congruences_of(name))
    out = []
    for rho in cs:
        if rho_from_pair(kernel(rho), trace(rho)) != rho:
            out.append(f"{name}: round trip fails for {rho.classes}")
    for N in normals_of(name):
        if has_kernel_property(N) and is_normal_E_congruence(S, j_relation_of(N)):
            if not is_simeq_congruence(S, N):
                out.append(f"{name} N={N.sorted_members}: ~_N is not a congruence")
            if not minimality_check(S, N, cs):
                out.append(f"{name} N={N.sorted_members}: ~_N does not refine a congruence with kernel N")
        if is_clifford(N) and any(kernel_of_partition(S, r.classes) == N.members for r in cs):
            rep = idempotent_separating_check(S, N)
            if not rep.equal:
                out.append(f"{name} K={N.sorted_members}: rho != ~_K")
            elif not rep.kappa_isomorphism:
                out.append(f"{name} K={N.sorted_members}: kappa is not an isomorphism")
    return out


# -- the acceptance criteria --------------------------------------------------


def _s6_check() -> tuple[bool, str]:
    S = builders.example_S6()
    i = {k: S.index(v) for k, v in {
        "id13": [1, 0, 3, 0], "id1": [1, 0, 0, 0], "id2": [0, 2, 0, 0],
        "f": [2, 0, 0, 0], "finv": [0, 1, 0, 0], "0": [0, 0, 0, 0],
    }.items()}
    N = whole(S)
    q = build_quotient(S, N)
    want = sorted([(i["id13"],), tuple(sorted([i["id1"], i["id2"], i["f"], i["finv"]])), (i["0"],)])
    classes_ok = sorted(q.classes) == want
    G = q.groupoid
    chain = all(G.leq[a, b] or G.leq[b, a] for a, b in product(range(len(G)), repeat=2))
    c = q.class_of
    rel = c[i["id1"]] == c[i["id2"]] and c[S.mul[i["id13"], i["id1"]]] != c[S.mul[i["id13"], i["id2"]]]
    cong = is_simeq_congruence(S, N)
    ok = classes_ok and chain and len(G) == 3 and rel and not cong
    return ok, f"classes={q.classes} chain={chain} congruence={cong}"


def criterion_1() -> CheckResult:
    return _timed("1 S6 quotient", _s6_check)


def _t_check() -> tuple[bool, str]:
    T = builders.example_T()
    q = build_quotient(T, whole(T))
    G = q.groupoid
    no_meet = [(x, y) for x, y in product(G.identities, repeat=2) if meet(G, x, y) is None]
    try:
        from .ogroupoid import esn_to

        esn_to(G)
        msg = "esn_to succeeded"
    except NotInductiveError as exc:
        msg = str(exc)
    ok = len(T) == 11 and bool(no_meet) and msg.startswith("not inductive")
    return ok, f"|T|=11 classes={len(q)} pairs without meet={len(no_meet)} esn_to: {msg}"


def criterion_2() -> CheckResult:
    return _timed("2 T quotient is not inductive", _t_check)


def symmetric_quotient_report(n: int) -> tuple[bool, str]:
    S = builders.symmetric_inverse_monoid(n)
    perms = [s for s in range(len(S)) if S.elements[s].rank == n]
    ident = S.identity
    N = subsemigroup(S, [s for s in range(len(S)) if s not in perms or s == ident])
    q = build_quotient(S, N)
    G = q.groupoid
    c = q.class_of
    singletons = all(q.classes[c[p]] == (p,) for p in perms)
    pc = [int(c[p]) for p in perms]
    group_ok = all(G.dom[k] == c[ident] == G.ran[k] for k in pc) and all(
        G.comp[(c[a], c[b])] == c[S.mul[a, b]] for a, b in product(perms, repeat=2)
    )
    sym = builders.symmetric_group(n)
    to_sym = {p: sym.index(list(S.elements[p].images)) for p in perms}
    iso = all(to_sym[S.mul[a, b]] == sym.mul[to_sym[a], to_sym[b]] for a, b in product(perms, repeat=2))
    defect = [x for x in G.identities if x != c[ident]]
    chain = len(defect) == n and all(G.leq[a, b] or G.leq[b, a] for a, b in product(defect, repeat=2))
    ok = len(q) == factorial(n) + n and singletons and group_ok and iso and chain
    return ok, f"n={n}: {len(q)} classes, singletons={singletons}, group={group_ok and iso}, chain of {len(defect)}"


def criterion_3() -> CheckResult:
    def run():
        rs = [symmetric_quotient_report(n) for n in (2, 3)]
        return all(r[0] for r in rs), "; ".join(r[1] for r in rs)

    return _timed("3 I_n//N with permutation classes", run)


def criterion_4(maxlen: int = 4) -> CheckResult:
    def run():
        normal = poly.gauge_is_normal(2, maxlen)
        agree = poly.gauge_leq_agreement(2, maxlen)
        brandt = poly.brandt_comparison(3)
        ok = normal and not agree.contradictions and not agree.simeq_contradictions and brandt
        return ok, (
            f"normal={normal} pairs={agree.pairs} contradictions={len(agree.contradictions)} "
            f"brandt={brandt}"
        )

    return _timed("4 gauge monoid in P_2", run)


def criterion_5() -> CheckResult:
    def run():
        bad = [p for name in fixtures() for p in congruence_violations(name)]
        total = sum(len(congruences_of(name)) for name in fixtures())
        return not bad, f"{total} congruences over {len(fixtures())} fixtures, {len(bad)} failures" + (
            f"; first: {bad[0]}" if bad else ""
        )

    return _timed("5 congruence theory", run)


def factorization_homs() -> list[tuple[str, Homomorphism]]:
    out = [(f"id_{name}", Homomorphism.identity(S)) for name, S in fixtures().items()]
    for name in ("I2", "I3"):
        _, pi = quotient_semigroup(minimal_group_congruence(fixtures()[name]))
        out.append((f"sigma_{name}", pi))
    Z2 = fixtures()["Z2"]
    for name, base in (("I2xZ2", "I2"), ("TxZ2", "T")):
        P = fixtures()[name]
        out.append((f"proj_{name}", Homomorphism(P, Z2, tuple(s % len(Z2) for s in range(len(P))))))
    return out


def factorization_violations(label: str, phi: Homomorphism) -> list[str]:
    out = []
    f = factorize_hom(phi)
    if f.composite() != phi.map:
        out.append(f"{label}: pi;kappa != phi")
    legs = legs_by_normal(phi)
    admitting = [N for N, ok in legs.items() if ok]
    if admitting != [f.K.members]:
        out.append(f"{label}: {len(admitting)} normal subsemigroups admit a star-injective leg")
    for N in normals_of_source(phi):
        if uniqueness_check(phi, N) != (N.members == f.K.members):
            out.append(f"{label}: uniqueness_check wrong at {N.sorted_members}")
    return out


def normals_of_source(phi: Homomorphism) -> list[SubsemigroupHandle]:
    for name, S in fixtures().items():
        if S is phi.source:
            return list(normals_of(name))
    return enumerate_normal(phi.source)


def criterion_6() -> CheckResult:
    def run():
        homs = factorization_homs()
        bad = [p for label, phi in homs for p in factorization_violations(label, phi)]
        return not bad, f"{len(homs)} homomorphisms, {len(bad)} failures" + (f"; first: {bad[0]}" if bad else "")

    return _timed("6 factorization", run)


def product_example_report() -> tuple[bool, str]:
    I2, Z2 = fixtures()["I2"], fixtures()["Z2"]
    S = fixtures()["I2xZ2"]
    g = len(Z2)
    e = Z2.identity
    N = subsemigroup(S, [t * g + e for t in range(len(I2))])
    rho = coset_congruence(S, N)
    cosets_ok = len(rho) == g and all(len({s % g for s in c}) == 1 for c in rho.classes)
    q = build_quotient(S, N)
    J = green_relations(I2)
    jcls = J.J
    jleq = np.array([[(a, b) in J.j_order for b in range(len(jcls))] for a in range(len(jcls))])
    model = product_groupoid(poset_groupoid(jleq), group_groupoid(Z2))
    f = [J.j_class_of(r // g) * g + r % g for r in q.representatives]
    iso = is_isomorphism(q.groupoid, model, f)
    kappa = [int(rho.class_of[r]) for r in q.representatives]
    not_injective = len(set(kappa)) < len(kappa)
    ok = cosets_ok and iso and not_injective
    return ok, f"cosets={len(rho)} quotient={len(q)} iso={iso} kappa injective={not not_injective}"


def criterion_7() -> CheckResult:
    return _timed("7 I_2 x Z_2 coset example", product_example_report)


def random_word(rng: random.Random, letters: str = "ab", maxlen: int = 8) -> str:
    pool = letters + letters.upper()
    return "".join(rng.choice(pool) for _ in range(rng.randint(0, maxlen)))


def munn_law_violations(count: int = 1000, seed: int = DEFAULT_SEED) -> list[str]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        x, y, z = (munn.word_to_munn(random_word(rng)) for _ in range(3))
        if (x * y) * z != x * (y * z):
            out.append(f"associativity fails at {x}, {y}, {z}")
        xi = x.inverse()
        if x * xi * x != x or xi * x * xi != xi or xi.inverse() != x:
            out.append(f"inverse laws fail at {x}")
        if (x * x == x) != x.is_idempotent:
            out.append(f"idempotent characterisation fails at {x}")
        e, f = x * xi, y * y.inverse()
        if e * f != f * e:
            out.append(f"idempotents {e}, {f} do not commute")
        if munn.word_to_munn(munn.to_word(x)) != x:
            out.append(f"to_word does not round trip at {x}")
    return out


def munn_example_report(seed: int = DEFAULT_SEED, maxlen: int = 4) -> tuple[bool, str]:
    I2 = fixtures()["I2"]
    tau, eps = I2.index([2, 1]), I2.index([1, 0])
    ex1 = munn.evaluate("Eete", {"t": tau, "e": eps}, I2) == I2.index([0, 0])
    ex1 &= munn.evaluate("te", {"t": tau, "e": eps}, I2) == I2.index([2, 0])
    a, b = I2.index([1, 0]), I2.index([0, 2])
    ex2 = munn.evaluate("babAB", {"a": a, "b": b}, I2) == I2.index([0, 0])
    ex2 &= munn.evaluate("b", {"a": a, "b": b}, I2) == b
    P = munn.Presentation.parse("ab=ba")
    res = munn.bounded_N_membership(P, "babABB", maxlen)
    laws = munn_law_violations(seed=seed)
    ok = ex1 and ex2 and res.yes and not laws
    return ok, f"evaluations={ex1 and ex2} member={res.status} cert={res.certificate} law failures={len(laws)}"


def criterion_8(seed: int = DEFAULT_SEED) -> CheckResult:
    return _timed("8 free inverse monoid examples", lambda: munn_example_report(seed))


def criterion_9() -> CheckResult:
    def run():
        bad = [p for name in fixtures() for p in fixture_sweep(name)]
        count = sum(len(normals_of(name)) for name in fixtures())
        return not bad, f"{count} normal subsemigroups over {len(fixtures())} fixtures, {len(bad)} failures" + (
            f"; first: {bad[0]}" if bad else ""
        )

    return _timed("9 preorder and quotient properties", run)


CRITERIA: tuple[Callable[[], CheckResult], ...] = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
)


def clear_caches() -> None:
    for f in (fixtures, normals_of, congruences_of):
        f.cache_clear()


def run_suite(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    out = []
    for c in CRITERIA:
        out.append(c(seed) if c is criterion_8 else c())
    return out


def domain_preorder_is_not_leq_S(n: int = 3) -> bool:
    """Domain inclusion on I_n contains <= and has top id, yet differs from <=_{I_n}."""
    S = builders.symmetric_inverse_monoid(n)
    doms = [S.elements[s].domain for s in range(len(S))]
    pre = np.array([[doms[s] <= doms[t] for t in range(len(S))] for s in range(len(S))])
    contains = not (S.leq & ~pre).any()
    return contains and not np.array_equal(pre, leq_N_matrix(S, whole(S)))


def idempotent_quotient_is_trivial(S: FiniteInvSemigroup) -> bool:
    return len(build_quotient(S, idempotent_subsemigroup(S))) == len(S)


__all__ = [
    "CRITERIA",
    "CheckResult",
    "DEFAULT_SEED",
    "fixtures",
    "run_suite",
]
