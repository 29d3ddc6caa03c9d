import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helpers import I2_NAMES, S6_NAMES, ids
from isq import builders
from isq.core import (
    FiniteInvSemigroup,
    Homomorphism,
    PartialBijection,
    check_inverse_semigroup,
    generated_subsemigroup,
    green_relations,
    j_preorder,
    leq_characterizations,
    natural_leq,
    trace_product,
)
from isq.errors import InputError, SizeLimitError


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetric_inverse_monoid_sizes(n):
    assert len(builders.symmetric_inverse_monoid(n)) == oracles.symmetric_inverse_monoid_size(n)


def test_sizes_frozen():
    assert [len(builders.symmetric_inverse_monoid(n)) for n in (1, 2, 3)] == [2, 7, 34]


def test_partial_bijection_basics():
    f = PartialBijection.from_dict(2, {1: 2})
    assert str(f) == "[2,-]"
    assert f.domain == {1} and f.image == {2} and f.rank == 1
    assert f.inverse() == PartialBijection((0, 1))
    assert f * f.inverse() == PartialBijection.identity_on(2, [2])
    with pytest.raises(InputError):
        PartialBijection((1, 1))


def test_products_follow_the_oracle(I3):
    g = [oracles.graph(p.images) for p in I3.elements]
    for s in range(len(I3)):
        assert oracles.inverse(g[s]) == g[I3.inv[s]]
        for t in range(len(I3)):
            assert oracles.compose(g[s], g[t]) == g[I3.mul[s, t]]


def test_natural_order_is_graph_inclusion(I3):
    g = [oracles.graph(p.images) for p in I3.elements]
    want = np.array([[oracles.below(a, b) for b in g] for a in g])
    assert np.array_equal(I3.leq, want)


def test_natural_leq_examples(I2):
    e = ids(I2, I2_NAMES)
    assert natural_leq(I2, e["id1"], e["id"])
    assert natural_leq(I2, e["tau"], e["tau"])
    assert natural_leq(I2, e["f"], e["tau"]) and not natural_leq(I2, e["tau"], e["f"])
    with pytest.raises(InputError):
        natural_leq(I2, 99, 0)


@given(st.integers(0, 33), st.integers(0, 33))
def test_leq_characterizations_agree(s, t):
    I3 = builders.symmetric_inverse_monoid(3)
    assert len(set(leq_characterizations(I3, s, t))) == 1


def test_trace_product_examples(I2):
    e = ids(I2, I2_NAMES)
    # products compose right to left, so f f^-1 is the identity on the image of f
    assert trace_product(I2, e["f"], e["finv"]) == e["id2"]
    assert trace_product(I2, e["finv"], e["f"]) == e["id1"]
    assert trace_product(I2, e["id1"], e["id2"]) is None
    assert trace_product(I2, e["tau"], e["tau"]) == e["id"]


def test_green_relations_of_examples(I2, S6):
    e = ids(S6, S6_NAMES)
    g = green_relations(S6)
    assert sorted(g.J) == sorted([(e["id13"],), tuple(sorted([e["id1"], e["id2"], e["f"], e["finv"]])), (e["0"],)])
    gi = green_relations(I2)
    ranks = {}
    for s in range(len(I2)):
        ranks.setdefault(I2.elements[s].rank, []).append(s)
    assert sorted(gi.J) == sorted(tuple(v) for v in ranks.values())
    assert gi.D == gi.J
    semilattice = builders.free_semilattice(2)
    assert len(green_relations(semilattice).J) == len(semilattice)


def test_j_classes_against_ideal_oracle(T):
    g = [oracles.graph(p.images) for p in T.elements]
    want = oracles.j_classes_by_ideals(g)
    got = {frozenset(g[x] for x in c) for c in green_relations(T).J}
    assert got == want


def test_j_preorder_is_a_preorder(I3):
    m = j_preorder(I3)
    assert m.diagonal().all()
    assert not ((m.astype(int) @ m.astype(int) > 0) & ~m).any()


def test_generated_subsemigroup(S6, I2):
    I4 = builders.symmetric_inverse_monoid(4)
    gens = [[1, 0, 3, 0], [0, 2, 0, 4], [2, 0, 0, 0], [0, 0, 4, 0]]
    got = generated_subsemigroup(I4, [I4.index(x) for x in gens])
    want = oracles.closure([oracles.graph(x) for x in gens])
    assert {oracles.graph(I4.elements[s].images) for s in got} == want
    assert len(got) == 11
    E = set(I2.idempotents)
    assert generated_subsemigroup(I2, E) == E
    e = ids(S6, S6_NAMES)
    assert generated_subsemigroup(S6, [e["f"]]) == {e["f"], e["finv"], e["id1"], e["id2"], e["0"]}
    with pytest.raises(InputError):
        generated_subsemigroup(I2, [])


def test_check_inverse_semigroup(I3, S6):
    assert check_inverse_semigroup(I3.mul, I3.inv) == []
    assert check_inverse_semigroup(S6.mul, S6.inv) == []
    # left-zero band on two points: idempotents do not commute
    report = check_inverse_semigroup([[0, 0], [1, 1]])
    assert report
    with pytest.raises(InputError):
        FiniteInvSemigroup.from_table([[0, 0], [1, 1]])


def test_from_table_round_trip(I2):
    S = FiniteInvSemigroup.from_table(I2.mul, I2.inv)
    assert np.array_equal(S.leq, I2.leq)
    assert S.idempotents == I2.idempotents


def test_homomorphism_validation(I2):
    Z2 = builders.cyclic_group(2)
    Homomorphism(I2, Z2, (0,) * len(I2))
    with pytest.raises(InputError):
        Homomorphism(Z2, I2, (I2.index([1, 0]), I2.index([0, 2])))


def test_size_cap(monkeypatch, I3):
    monkeypatch.setenv("ISQ_MAX_ELEMENTS", "10")
    with pytest.raises(SizeLimitError):
        green_relations(I3)
