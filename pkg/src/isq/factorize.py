"""Factor a homomorphism S -> Sigma as S -> S//K -> Sigma with a star-injective second leg."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Homomorphism
from .errors import InputError, NotStarInjectiveError
from .normal import SubsemigroupHandle, enumerate_normal, is_normal
from .ogroupoid import OGFunctor, esn_from, functor_violations, is_star_injective
from .quotient import NQuotient, build_quotient


@dataclass(frozen=True)
class Factorization:
    phi: Homomorphism
    K: SubsemigroupHandle
    quotient: NQuotient
    kappa: OGFunctor

    def composite(self) -> tuple[int, ...]:
        """s -> kappa([s]_K), which must equal phi."""
        return tuple(self.kappa.map[self.quotient.cls(s)] for s in range(len(self.phi.source)))


def hom_kernel(phi: Homomorphism) -> SubsemigroupHandle:
    """{s : s phi is idempotent}."""
    idem = phi.target.is_idempotent
    return SubsemigroupHandle(phi.source, frozenset(s for s in range(len(phi.source)) if idem[phi.map[s]]))


def forced_leg(phi: Homomorphism, q: NQuotient) -> tuple[int, ...] | None:
    """The only map c with pi;c = phi, or None if phi is not constant on ~_N classes."""
    leg = []
    for c in q.classes:
        values = {phi.map[s] for s in c}
        if len(values) != 1:
            return None
        leg.append(values.pop())
    return tuple(leg)


def factorize_hom(phi: Homomorphism) -> Factorization:
    K = hom_kernel(phi)
    assert is_normal(K)
    q = build_quotient(phi.source, K)
    leg = forced_leg(phi, q)
    assert leg is not None, "kappa is not well defined"
    kappa = OGFunctor(q.groupoid, esn_from(phi.target), leg)
    assert is_star_injective(kappa)
    f = Factorization(phi, K, q, kappa)
    assert f.composite() == phi.map
    return f


def admits_star_injective_leg(phi: Homomorphism, N: SubsemigroupHandle) -> bool:
    """Whether phi factors as S -> S//N -> Sigma with a star-injective functor."""
    q = build_quotient(phi.source, N)
    leg = forced_leg(phi, q)
    if leg is None:
        return False
    target = esn_from(phi.target)
    if functor_violations(q.groupoid, target, leg):
        return False
    return is_star_injective(OGFunctor(q.groupoid, target, leg, checked=False))


def uniqueness_check(phi: Homomorphism, N: SubsemigroupHandle, leg: OGFunctor | None = None) -> bool:
    """True iff N is the kernel K of phi.

    A supplied second leg must be a star-injective functor S//N -> Sigma
    composing with the quotient map to phi.
    """
    if leg is not None:
        if not is_star_injective(leg):
            raise NotStarInjectiveError("supplied second leg is not star-injective")
        q = build_quotient(phi.source, N)
        if tuple(leg.map[q.cls(s)] for s in range(len(phi.source))) != phi.map:
            raise InputError("supplied second leg does not compose to phi")
    return N.members == hom_kernel(phi).members


def legs_by_normal(phi: Homomorphism) -> dict[frozenset[int], bool]:
    """For each normal N of the source: does a star-injective second leg exist?"""
    return {N.members: admits_star_injective_leg(phi, N) for N in enumerate_normal(phi.source)}
