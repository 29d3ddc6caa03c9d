import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import I2_NAMES, ids
from isq import munn
from isq.errors import InputError
from isq.suite import munn_example_report, munn_law_violations

words = st.text(alphabet="abAB", max_size=8)


@given(words, words, words)
def test_associative(x, y, z):
    X, Y, Z = map(munn.word_to_munn, (x, y, z))
    assert (X * Y) * Z == X * (Y * Z)


@given(words, words)
def test_tree_of_concatenation(x, y):
    assert munn.word_to_munn(x + y) == munn.word_to_munn(x) * munn.word_to_munn(y)


@given(words)
def test_inverse_and_idempotents(x):
    X = munn.word_to_munn(x)
    Xi = X.inverse()
    assert X * Xi * X == X and Xi * X * Xi == Xi
    assert munn.word_to_munn(munn.inverse_word(x)) == Xi
    assert (X * X == X) == X.is_idempotent
    assert munn.word_to_munn(munn.to_word(X)) == X


@given(words, words)
def test_natural_order_via_idempotents(x, y):
    X, Y = munn.word_to_munn(x), munn.word_to_munn(y)
    assert munn.munn_natural_leq(X, Y) == (X * X.inverse() * Y == X)


def test_free_reduce():
    assert munn.free_reduce("abBA") == ""
    assert munn.free_reduce("aAb") == "b"
    with pytest.raises(InputError):
        munn.free_reduce("a1")


def test_order_examples():
    u = munn.word_to_munn("ab")
    assert munn.munn_natural_leq(u * u.inverse() * u, u)
    assert munn.munn_natural_leq(munn.word_to_munn("aAb"), munn.word_to_munn("b"))
    assert not munn.munn_natural_leq(munn.word_to_munn("a"), munn.word_to_munn("b"))


def test_evaluations_in_I2(I2):
    e = ids(I2, I2_NAMES)
    a = {"t": e["tau"], "e": e["id1"]}
    assert munn.evaluate("Eete", a, I2) == e["0"]
    assert munn.evaluate("te", a, I2) == e["f"]
    b = {"a": e["id1"], "b": e["id2"]}
    assert munn.evaluate("babAB", b, I2) == e["0"]
    assert munn.evaluate("b", b, I2) == e["id2"]
    assert munn.evaluate("", b, I2) == e["id"]
    assert munn.evaluate(munn.word_to_munn("te"), a, I2) == e["f"]
    with pytest.raises(InputError):
        munn.evaluate("c", b, I2)


def test_presentation_parse(I2):
    P = munn.Presentation.parse("ab=ba")
    assert P.alphabet == "ab" and P.relations == (("ab", "ba"),)
    e = ids(I2, I2_NAMES)
    assert P.satisfied_by({"a": e["id1"], "b": e["id2"]}, I2)
    assert not P.satisfied_by({"a": e["f"], "b": e["id1"]}, I2)
    assert [str(q) for q in munn.q_of_relations(P)] == [str(munn.word_to_munn("BAba")), str(munn.word_to_munn("abAB"))]
    with pytest.raises(InputError):
        munn.Presentation.parse("ab")


def test_membership_certificates():
    P = munn.Presentation.parse("ab=ba")
    r = munn.bounded_N_membership(P, "babABB", 4)
    assert r.yes and r.certificate == (("B", "abAB"),)
    cert = munn.word_to_munn(r.certificate_word())
    assert munn.munn_natural_leq(munn.word_to_munn("babABB"), cert)
    assert munn.bounded_N_membership(P, "abAB", 1).yes
    assert munn.bounded_N_membership(P, "aA", 0).yes
    free = munn.Presentation("a")
    for L in range(4):
        assert munn.bounded_N_membership(free, "a", L).status == "inconclusive"


def test_suite_helpers():
    assert munn_law_violations(count=100, seed=1) == []
    ok, detail = munn_example_report()
    assert ok, detail
