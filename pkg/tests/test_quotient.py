import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helpers import I2_NAMES, S6_NAMES, ids
from isq import builders
from isq.errors import NotNormalError
from isq.normal import enumerate_normal, idempotent_subsemigroup, subsemigroup, whole
from isq.ogroupoid import verify_axioms
from isq.quotient import (
    build_quotient,
    composition_witnesses,
    is_inductive_quotient,
    leq_N,
    leq_N_matrix,
    preorder_embedding_check,
    quotient_inverse_semigroup,
    simeq_N,
    witness_independence_violations,
)
from isq.suite import (
    domain_preorder_is_not_leq_S,
    fixtures,
    preorder_violations,
    simeq_violations,
    symmetric_quotient_report,
)

PBIJ = ["I2", "I3", "S6", "T"]


@pytest.mark.parametrize("name", PBIJ)
def test_leq_N_matches_the_definition(name):
    S = fixtures()[name]
    g = [oracles.graph(p.images) for p in S.elements]
    for N in enumerate_normal(S):
        Ng = [g[x] for x in N.sorted_members]
        want = np.array([[oracles.leq_N(g, Ng, a, b) for b in g] for a in g])
        assert np.array_equal(leq_N_matrix(S, N), want), N.sorted_members


def test_leq_N_examples(I2):
    e = ids(I2, I2_NAMES)
    N1 = subsemigroup(I2, [0, 1, 2, 3, 4, 5])
    assert leq_N(I2, N1, e["f"], e["id1"])
    assert not leq_N(I2, N1, e["tau"], e["id1"])
    with pytest.raises(NotNormalError):
        leq_N(I2, subsemigroup(I2, [e["0"], e["id1"]]), 0, 0)


def test_s6_quotient(S6):
    e = ids(S6, S6_NAMES)
    q = build_quotient(S6, whole(S6))
    assert q.classes == ((e["0"],), tuple(sorted([e["finv"], e["id2"], e["id1"], e["f"]])), (e["id13"],))
    assert q.classes == ((0,), (1, 2, 3, 5), (4,))
    G = q.groupoid
    assert G.identities == (0, 1, 2)
    assert G.leq[0, 1] and G.leq[1, 2]
    assert is_inductive_quotient(q)


def test_t_quotient(T):
    q = build_quotient(T, whole(T))
    assert q.classes == ((0,), (1, 2, 3, 4), (5, 6, 8, 10), (7,), (9,))
    assert not is_inductive_quotient(q)


def test_idempotent_quotient_is_esn(I3):
    q = build_quotient(I3, idempotent_subsemigroup(I3))
    assert len(q) == len(I3)
    assert np.array_equal(quotient_inverse_semigroup(q).mul, I3.mul)


@pytest.mark.parametrize("n", [2, 3])
def test_permutation_example(n):
    ok, detail = symmetric_quotient_report(n)
    assert ok, detail


def test_composition_witness_exists(S6):
    N = whole(S6)
    e = ids(S6, S6_NAMES)
    # f then f^-1 composes in the quotient: the witness lies in N
    ws = composition_witnesses(S6, N, e["f"], e["finv"])
    assert ws and all(w in N for w in ws)


@pytest.mark.parametrize("name", list(fixtures()))
def test_quotients_are_ordered_groupoids(name):
    S = fixtures()[name]
    for N in enumerate_normal(S):
        q = build_quotient(S, N)
        assert verify_axioms(q.groupoid) == []
        assert witness_independence_violations(q) == []
        assert preorder_violations(S, N) == []
        assert simeq_violations(S, N, q.classes) == []


@pytest.mark.parametrize("name", ["I2", "I3", "S6", "T", "Z3", "B3"])
def test_preorder_embedding(name):
    assert preorder_embedding_check(fixtures()[name])


def test_domain_inclusion_preorder_is_not_leq_S():
    assert domain_preorder_is_not_leq_S(2)
    assert domain_preorder_is_not_leq_S(3)


@given(st.integers(0, 33), st.integers(0, 33), st.integers(0, 7))
def test_simeq_is_symmetric_part(s, t, k):
    S = fixtures()["I3"]
    N = enumerate_normal(S)[k]
    m = leq_N_matrix(S, N)
    lab = {x: i for i, c in enumerate(simeq_N(S, N, m)) for x in c}
    assert (lab[s] == lab[t]) == bool(m[s, t] and m[t, s])
