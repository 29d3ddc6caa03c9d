import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from helpers import I2_NAMES, S6_NAMES, ids
from isq.errors import InputError
from isq.normal import (
    SubsemigroupHandle,
    enumerate_normal,
    has_kernel_property,
    idempotent_subsemigroup,
    inclusion_edges,
    is_clifford,
    is_closed,
    is_full,
    is_normal,
    normal_closure,
    subsemigroup,
    upward_closure,
    whole,
)
from isq.suite import fixtures


@pytest.fixture
def e2(I2):
    return ids(I2, I2_NAMES)


def n1(I2, e):
    return subsemigroup(I2, [e[k] for k in ("0", "id1", "id2", "id", "f", "finv")])


def test_full_and_normal(I2, e2):
    assert is_full(idempotent_subsemigroup(I2))
    assert not is_full(subsemigroup(I2, [e2["0"], e2["id1"]]))
    N1 = n1(I2, e2)
    assert is_full(N1) and is_normal(N1)
    assert is_normal(idempotent_subsemigroup(I2))


def test_normal_closure_examples(I2, e2):
    assert normal_closure(I2, []) == idempotent_subsemigroup(I2)
    assert normal_closure(I2, [e2["f"]]) == n1(I2, e2)
    assert normal_closure(I2, [e2["tau"]]) == whole(I2)


def test_kernel_property_and_clifford(I2, S6, e2):
    assert has_kernel_property(n1(I2, e2))
    assert has_kernel_property(idempotent_subsemigroup(S6))
    assert is_clifford(idempotent_subsemigroup(I2))
    assert not is_clifford(n1(I2, e2))
    assert not is_clifford(whole(I2))


def test_kernel_property_fails_in_I3():
    sizes = {len(N): has_kernel_property(N) for N in enumerate_normal(fixtures()["I3"])}
    assert sizes == {8: True, 14: True, 17: True, 20: False, 22: False, 29: True, 31: True, 34: True}


def test_upward_closure_and_closed(I2, S6, e2):
    e = ids(S6, S6_NAMES)
    assert upward_closure(S6, [e["0"]]) == frozenset(range(len(S6)))
    assert not is_closed(idempotent_subsemigroup(I2))
    assert is_closed(whole(I2))
    assert is_closed({e2["tau"], e2["id"]}, I2)
    with pytest.raises(InputError):
        is_closed({0})


def test_handle_validation(I2, e2):
    with pytest.raises(InputError):
        subsemigroup(I2, [e2["f"]])
    with pytest.raises(InputError):
        SubsemigroupHandle(I2, frozenset())


@pytest.mark.parametrize("name", ["I2", "S6", "T", "B2", "B3", "I2xZ2", "Z3", "Sym3", "free_semilattice2"])
def test_enumeration_matches_subset_scan(name):
    S = fixtures()[name]
    got = {N.members for N in enumerate_normal(S)}
    if S.elements is not None:
        g = [oracles.graph(p.images) for p in S.elements]
        want = {frozenset(g.index(x) for x in N) for N in oracles.normal_subsemigroups(g)}
    else:
        want = {N for N in _table_normals(S)}
    assert got == want


def _table_normals(S):
    from itertools import combinations

    E = set(S.idempotents)
    rest = [s for s in range(len(S)) if s not in E]
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            N = E | set(extra)
            if any(S.inv[x] not in N for x in N):
                continue
            if any(S.mul[x, y] not in N for x in N for y in N):
                continue
            if any(S.prod(S.inv[s], n, s) not in N for s in range(len(S)) for n in N):
                continue
            yield frozenset(N)


def test_frozen_counts():
    counts = {name: len(enumerate_normal(fixtures()[name])) for name in ("I2", "S6", "T", "I3")}
    assert counts == {"I2": 3, "S6": 2, "T": 4, "I3": 8}


def test_normal_subgroups_of_groups():
    # in a group, normal inverse subsemigroups are the normal subgroups
    assert len(enumerate_normal(fixtures()["Sym3"])) == 3
    assert len(enumerate_normal(fixtures()["Z3"])) == 2


def test_inclusion_edges(I2):
    hs = enumerate_normal(I2)
    assert [len(h) for h in hs] == [4, 6, 7]
    assert inclusion_edges(hs) == [(0, 1), (1, 2)]


@given(st.sets(st.integers(0, 33), max_size=3))
def test_normal_closure_is_least(A):
    S = fixtures()["I3"]
    C = normal_closure(S, A)
    assert is_normal(C) and A <= C.members
    for N in enumerate_normal(S):
        if A <= N.members:
            assert C.members <= N.members
