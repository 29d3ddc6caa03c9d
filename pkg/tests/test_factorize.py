import numpy as np
import pytest

from isq import builders
from isq.congruence import minimal_group_congruence, quotient_semigroup
from isq.core import Homomorphism, green_relations
from isq.errors import NotStarInjectiveError
from isq.factorize import admits_star_injective_leg, factorize_hom, hom_kernel, uniqueness_check
from isq.normal import idempotent_subsemigroup, whole
from isq.ogroupoid import (
    OGFunctor,
    OrderedGroupoid,
    esn_from,
    group_groupoid,
    is_isomorphism,
    is_star_injective,
    poset_groupoid,
    product_groupoid,
)
from isq.quotient import build_quotient
from isq.suite import factorization_homs, factorization_violations, fixtures, product_example_report


def test_identity_factorization(I3):
    f = factorize_hom(Homomorphism.identity(I3))
    assert f.K == idempotent_subsemigroup(I3)
    assert len(f.quotient) == len(I3)
    assert f.kappa.map == tuple(range(len(I3)))


def test_sigma_quotient(I2):
    Q, pi = quotient_semigroup(minimal_group_congruence(I2))
    f = factorize_hom(pi)
    assert f.K == whole(I2)
    assert is_star_injective(f.kappa)
    assert f.composite() == pi.map


@pytest.mark.parametrize("base", ["I2", "T"])
def test_projection_quotient_is_poset_times_group(base):
    T, G = fixtures()[base], builders.cyclic_group(2)
    S = builders.direct_product_with_group(T, G)
    phi = Homomorphism(S, G, tuple(s % 2 for s in range(len(S))))
    f = factorize_hom(phi)
    assert f.K.members == {t * 2 + G.identity for t in range(len(T))}
    J = green_relations(T)
    jleq = np.array([[(a, b) in J.j_order for b in range(len(J.J))] for a in range(len(J.J))])
    model = product_groupoid(poset_groupoid(jleq), group_groupoid(G))
    iso = [J.j_class_of(r // 2) * 2 + r % 2 for r in f.quotient.representatives]
    assert is_isomorphism(f.quotient.groupoid, model, iso)


def test_product_example_report():
    ok, detail = product_example_report()
    assert ok, detail


def test_uniqueness(I2):
    Q, pi = quotient_semigroup(minimal_group_congruence(I2))
    K = hom_kernel(pi)
    E = idempotent_subsemigroup(I2)
    assert uniqueness_check(pi, K)
    assert not uniqueness_check(pi, E)
    assert not admits_star_injective_leg(pi, E)
    q = build_quotient(I2, E)
    collapse = OGFunctor(q.groupoid, esn_from(Q), tuple(0 for _ in range(len(q))))
    with pytest.raises(NotStarInjectiveError):
        uniqueness_check(pi, E, collapse)


@pytest.mark.parametrize("label, phi", factorization_homs(), ids=[h[0] for h in factorization_homs()])
def test_factorization_suite(label, phi):
    assert factorization_violations(label, phi) == []


def test_trivial_target_groupoid_type():
    G = OrderedGroupoid((0,), (0,), (0,), (0,), {(0, 0): 0}, np.ones((1, 1), dtype=bool))
    assert G.is_inductive
