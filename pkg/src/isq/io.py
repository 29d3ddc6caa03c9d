"""JSON encodings for semigroups, subsets, maps, congruences and ordered groupoids."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .core import FiniteInvSemigroup, Homomorphism, PartialBijection
from .errors import InputError
from .normal import SubsemigroupHandle
from .ogroupoid import OrderedGroupoid


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc


def _require(d: Any, *keys: str) -> None:
    if not isinstance(d, dict):
        raise InputError("expected a JSON object")
    missing = [k for k in keys if k not in d]
    if missing:
        raise InputError(f"missing keys {missing}")


def _images(e: Any, degree: int) -> tuple[int, ...]:
    """Accept [2,0] or the printed form "[2,-]"."""
    if isinstance(e, str):
        body = e.strip().strip("[]")
        e = [0 if x.strip() in ("-", "") else int(x) for x in body.split(",")] if body else []
    if not isinstance(e, list) or len(e) != degree or not all(isinstance(x, int) for x in e):
        raise InputError(f"bad partial bijection {e!r} for degree {degree}")
    return tuple(e)


# -- semigroups ------------------------------------------------------------


def semigroup_to_json(S: FiniteInvSemigroup) -> dict:
    if S.elements is not None:
        return {"kind": "pbij", "degree": S.degree, "elements": [list(p.images) for p in S.elements]}
    return {
        "kind": "table",
        "n": len(S),
        "mul": S.mul.tolist(),
        "inv": S.inv.tolist(),
        "labels": list(S.labels),
    }


def semigroup_from_json(d: Any) -> FiniteInvSemigroup:
    _require(d, "kind")
    kind = d["kind"]
    if kind == "pbij":
        _require(d, "degree", "elements")
        degree = d["degree"]
        if not isinstance(degree, int) or degree < 0:
            raise InputError("degree must be a non-negative integer")
        return FiniteInvSemigroup.from_pbij([PartialBijection(_images(e, degree)) for e in d["elements"]])
    if kind == "table":
        _require(d, "mul")
        try:
            mul = np.asarray(d["mul"], dtype=np.int64)
        except (TypeError, ValueError) as exc:
            raise InputError("mul must be a square integer table") from exc
        n = d.get("n", len(mul))
        if mul.ndim != 2 or mul.shape != (n, n) or n == 0:
            raise InputError("mul must be a non-empty square table of size n")
        if mul.min() < 0 or mul.max() >= n:
            raise InputError("mul entries must be element ids")
        inv = d.get("inv")
        if inv is not None and (len(inv) != n or any(not isinstance(x, int) or not 0 <= x < n for x in inv)):
            raise InputError("inv must list n element ids")
        return FiniteInvSemigroup.from_table(mul, inv, labels=d.get("labels"))
    raise InputError(f"unknown semigroup kind {kind!r}")


def load_semigroup(path: str | Path) -> FiniteInvSemigroup:
    return semigroup_from_json(load_json(path))


# -- subsets, maps, congruences ---------------------------------------------


def subset_from_json(S: FiniteInvSemigroup, d: Any) -> SubsemigroupHandle:
    """``{"indices": [...]}``, or a pbij semigroup whose elements all lie in S."""
    if isinstance(d, dict) and "indices" in d:
        idx = d["indices"]
        if not isinstance(idx, list) or not all(isinstance(i, int) for i in idx):
            raise InputError("indices must be a list of element ids")
        return SubsemigroupHandle(S, frozenset(S.check_element(i) for i in idx))
    if isinstance(d, dict) and d.get("kind") == "pbij":
        _require(d, "degree", "elements")
        if S.elements is None:
            raise InputError("a pbij subset needs a pbij ambient semigroup")
        members = set()
        for e in d["elements"]:
            try:
                members.add(S.index(PartialBijection(_images(e, d["degree"]))))
            except (KeyError, ValueError) as exc:
                raise InputError(f"{e!r} is not an element of S") from exc
        return SubsemigroupHandle(S, frozenset(members))
    raise InputError('expected {"indices": [...]} or a pbij semigroup')


def subset_to_json(N: SubsemigroupHandle) -> dict:
    return {"indices": list(N.sorted_members)}


def hom_from_json(S: FiniteInvSemigroup, T: FiniteInvSemigroup, d: Any) -> Homomorphism:
    _require(d, "map")
    m = d["map"]
    if not isinstance(m, list) or len(m) != len(S) or not all(isinstance(x, int) for x in m):
        raise InputError("map must list one target id per source element")
    return Homomorphism(S, T, tuple(T.check_element(x) for x in m))


def groupoid_to_json(G: OrderedGroupoid) -> dict:
    """Elements are listed by name; leq lists the strict relation."""
    names = list(G.names)
    return {
        "elements": names,
        "labels": list(G.labels),
        "identities": [names[x] for x in G.identities],
        "dom": [names[x] for x in G.dom],
        "ran": [names[x] for x in G.ran],
        "inv": [names[x] for x in G.inv],
        "comp": sorted([names[g], names[h], names[k]] for (g, h), k in G.comp.items()),
        "leq": sorted([names[int(g)], names[int(h)]] for g, h in np.argwhere(G.leq) if g != h),
    }


def groupoid_from_json(d: Any) -> OrderedGroupoid:
    _require(d, "elements", "identities", "dom", "ran", "inv", "comp", "leq")
    names = list(d["elements"])
    pos = {x: i for i, x in enumerate(names)}
    if len(pos) != len(names):
        raise InputError("duplicate element names")
    try:
        at = lambda xs: tuple(pos[x] for x in xs)  # noqa: E731
        n = len(names)
        leq = np.zeros((n, n), dtype=bool)
        for g, h in d["leq"]:
            leq[pos[g], pos[h]] = True
        return OrderedGroupoid(
            identities=at(d["identities"]),
            dom=at(d["dom"]),
            ran=at(d["ran"]),
            inv=at(d["inv"]),
            comp={(pos[g], pos[h]): pos[k] for g, h, k in d["comp"]},
            leq=leq,
            names=tuple(names) if all(isinstance(x, int) for x in names) else (),
            labels=tuple(d.get("labels", ())),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed groupoid: {exc}") from exc
