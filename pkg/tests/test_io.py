import json

import numpy as np
import pytest

from isq import builders, io
from isq.errors import InputError
from isq.normal import whole
from isq.ogroupoid import is_isomorphism, verify_axioms
from isq.quotient import build_quotient


@pytest.mark.parametrize("make", [builders.example_S6, lambda: builders.brandt_semigroup(2)])
def test_semigroup_round_trip(make):
    S = make()
    R = io.semigroup_from_json(json.loads(io.dumps(io.semigroup_to_json(S))))
    assert np.array_equal(R.mul, S.mul) and np.array_equal(R.inv, S.inv)


def test_printed_partial_bijections_are_accepted():
    S = io.semigroup_from_json({"kind": "pbij", "degree": 2, "elements": ["[-,-]", "[1,-]", "[-,2]", "[1,2]"]})
    assert len(S) == 4 and len(S.idempotents) == 4


@pytest.mark.parametrize(
    "bad",
    [
        [],
        {"kind": "pbij"},
        {"kind": "what"},
        {"kind": "table", "mul": [[0, 5], [1, 1]]},
        {"kind": "table", "mul": "x"},
        {"kind": "pbij", "degree": 2, "elements": [[1]]},
        {"kind": "table", "mul": [[0, 0], [1, 1]]},
    ],
)
def test_bad_semigroups_are_input_errors(bad):
    with pytest.raises(InputError):
        io.semigroup_from_json(bad)


def test_subsets_and_maps(S6):
    N = io.subset_from_json(S6, {"indices": list(range(6))})
    assert N == whole(S6)
    assert io.subset_from_json(S6, io.semigroup_to_json(S6)) == whole(S6)
    with pytest.raises(InputError):
        io.subset_from_json(S6, {"indices": [99]})
    phi = io.hom_from_json(S6, S6, {"map": list(range(6))})
    assert phi.map == tuple(range(6))
    with pytest.raises(InputError):
        io.hom_from_json(S6, S6, {"map": [0]})


def test_groupoid_round_trip(T):
    G = build_quotient(T, whole(T)).groupoid
    d = json.loads(io.dumps(io.groupoid_to_json(G)))
    assert set(d) >= {"elements", "identities", "dom", "ran", "inv", "comp", "leq"}
    H = io.groupoid_from_json(d)
    assert verify_axioms(H) == []
    assert is_isomorphism(G, H, range(len(G)))


def test_load_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    with pytest.raises(InputError):
        io.load_json(p)
    with pytest.raises(InputError):
        io.load_json(tmp_path / "missing.json")


def test_dumps_is_canonical():
    assert io.dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
