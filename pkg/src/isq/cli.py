"""``isq`` command line: builders, verification and reports.

Exit codes: 0 success / property holds, 1 property fails, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Sequence

from . import builders, io, munn, poly, suite
from .congruence import all_congruences, is_simeq_congruence, kernel_of_partition, trace_of_partition
from .core import check_inverse_semigroup, green_relations
from .errors import IsqError
from .factorize import factorize_hom, legs_by_normal
from .normal import (
    SubsemigroupHandle,
    enumerate_normal,
    has_kernel_property,
    idempotent_subsemigroup,
    inclusion_edges,
    is_clifford,
    is_closed,
    whole,
)
from .ogroupoid import verify_axioms
from .quotient import build_quotient


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit; keep control of the code
        raise _UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--pretty", action="store_true", help="indented output")
    p.add_argument("--seed", type=int, default=suite.DEFAULT_SEED)
    p.add_argument("--max-size", type=int, help="override the element cap")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    p = _Parser(prog="isq", description="Finite inverse semigroups, normal subsemigroups and their quotients.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("builder", parents=[common], help="emit a fixture as JSON")
    b.add_argument("kind", choices=["in", "example-a", "example-b", "product", "brandt", "cyclic", "symmetric"])
    b.add_argument("--n", type=int, default=2)
    b.add_argument("--k", type=int, default=2)
    b.add_argument("--left")
    b.add_argument("--group")

    for name, text in (("verify", "check the inverse semigroup axioms"), ("green", "Green's relations")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("semigroup")

    n = sub.add_parser("normal", parents=[common], help="enumerate normal inverse subsemigroups")
    n.add_argument("semigroup")

    q = sub.add_parser("quotient", parents=[common], help="the ordered groupoid S//N")
    q.add_argument("semigroup")
    q.add_argument("--by", required=True, help='subset JSON, a pbij semigroup inside S, or "S" / "E"')

    c = sub.add_parser("congruences", parents=[common], help="all congruences with kernel and trace")
    c.add_argument("semigroup")
    c.add_argument("--kernel", help="keep only congruences with this kernel")

    f = sub.add_parser("factorize", parents=[common], help="factor a homomorphism through S//K")
    f.add_argument("semigroup")
    f.add_argument("target")
    f.add_argument("--hom", required=True)

    pl = sub.add_parser("poly", parents=[common], help="bounded checks in the polycyclic monoid")
    pl.add_argument("--n", type=int, default=2)
    pl.add_argument("--check", choices=["gauge", "leq", "brandt", "all"], default="all")
    pl.add_argument("--maxlen", type=int, default=4)

    m = sub.add_parser("munn", parents=[common], help="free inverse monoid words")
    msub = m.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ev = msub.add_parser("eval", parents=[common])
    ev.add_argument("--word", required=True)
    ev.add_argument("--assign", required=True, help="e.g. 'a=idx3,b=idx2'")
    ev.add_argument("--in", dest="semigroup", required=True)
    mem = msub.add_parser("member", parents=[common])
    mem.add_argument("--pres", required=True, help="relations, e.g. 'ab=ba'")
    mem.add_argument("--word", required=True)
    mem.add_argument("--maxlen", type=int, default=4)

    st = sub.add_parser("suite", parents=[common], help="run the acceptance checks")
    st.add_argument("--paper", action="store_true", help="run every acceptance criterion (the default)")
    return p


# -- commands -------------------------------------------------------------


def _subset(S, arg: str) -> SubsemigroupHandle:
    if arg == "S":
        return whole(S)
    if arg == "E":
        return idempotent_subsemigroup(S)
    return io.subset_from_json(S, io.load_json(arg))


def cmd_builder(a) -> tuple[int, Any]:
    if a.kind == "in":
        S = builders.symmetric_inverse_monoid(a.n)
    elif a.kind == "example-a":
        S = builders.example_S6()
    elif a.kind == "example-b":
        S = builders.example_T()
    elif a.kind == "cyclic":
        S = builders.cyclic_group(a.n)
    elif a.kind == "symmetric":
        S = builders.symmetric_group(a.n)
    elif a.kind == "brandt":
        S = builders.brandt_semigroup(a.k)
    else:
        if not (a.left and a.group):
            raise _UsageError("builder product needs --left and --group")
        S = builders.direct_product_with_group(io.load_semigroup(a.left), io.load_semigroup(a.group))
    return 0, io.semigroup_to_json(S)


def cmd_verify(a) -> tuple[int, Any]:
    d = io.load_json(a.semigroup)
    if isinstance(d, dict) and d.get("kind") == "table":
        io._require(d, "mul")
        try:
            problems = check_inverse_semigroup(d["mul"], d.get("inv"))
        except (TypeError, ValueError, IndexError) as exc:
            raise IsqError(f"malformed table: {exc}") from exc
        if problems:
            return 1, {"valid": False, "problems": problems}
    S = io.semigroup_from_json(d)
    return 0, {"valid": True, "size": len(S), "idempotents": len(S.idempotents)}


def cmd_green(a) -> tuple[int, Any]:
    S = io.load_semigroup(a.semigroup)
    g = green_relations(S)
    return 0, {
        "R": g.R, "L": g.L, "H": g.H, "D": g.D, "J": g.J,
        "j_order": sorted(g.j_order),
    }


def cmd_normal(a) -> tuple[int, Any]:
    S = io.load_semigroup(a.semigroup)
    hs = enumerate_normal(S)
    return 0, {
        "normal": [
            {
                "indices": list(N.sorted_members),
                "kernel_property": has_kernel_property(N),
                "clifford": is_clifford(N),
                "closed": is_closed(N),
            }
            for N in hs
        ],
        "inclusions": inclusion_edges(hs),
    }


def cmd_quotient(a) -> tuple[int, Any]:
    S = io.load_semigroup(a.semigroup)
    N = _subset(S, a.by)
    q = build_quotient(S, N)
    G = q.groupoid
    chain = all(G.leq[i, j] or G.leq[j, i] for i in range(len(G)) for j in range(len(G)))
    report = {
        "classes": [list(c) for c in q.classes],
        "size": len(q),
        "chain": bool(chain),
        "inductive": G.is_inductive,
        "congruence": is_simeq_congruence(S, N),
        "groupoid": io.groupoid_to_json(G),
        "witnesses": sorted([G.names[i], G.names[j], w] for (i, j), w in q.witness_table.items()),
    }
    return (0 if not verify_axioms(G) else 1), report


def cmd_congruences(a) -> tuple[int, Any]:
    S = io.load_semigroup(a.semigroup)
    cs = all_congruences(S).congruences
    if a.kernel:
        K = _subset(S, a.kernel)
        cs = [r for r in cs if kernel_of_partition(S, r.classes) == K.members]
    return 0, {
        "congruences": [
            {
                "classes": [list(c) for c in r.classes],
                "kernel": sorted(kernel_of_partition(S, r.classes)),
                "trace": [list(c) for c in trace_of_partition(S, r.classes)],
            }
            for r in cs
        ]
    }


def cmd_factorize(a) -> tuple[int, Any]:
    S = io.load_semigroup(a.semigroup)
    T = io.load_semigroup(a.target)
    phi = io.hom_from_json(S, T, io.load_json(a.hom))
    f = factorize_hom(phi)
    legs = legs_by_normal(phi)
    unique = [sorted(N) for N, ok in legs.items() if ok] == [list(f.K.sorted_members)]
    return (0 if unique else 1), {
        "kernel": list(f.K.sorted_members),
        "classes": [list(c) for c in f.quotient.classes],
        "kappa": list(f.kappa.map),
        "star_injective": True,
        "unique": unique,
    }


def cmd_poly(a) -> tuple[int, Any]:
    out: dict[str, Any] = {"n": a.n, "maxlen": a.maxlen}
    ok = True
    if a.check in ("gauge", "all"):
        out["gauge_normal"] = poly.gauge_is_normal(a.n, a.maxlen)
        ok &= out["gauge_normal"]
    if a.check in ("leq", "all"):
        g = poly.gauge_leq_agreement(a.n, a.maxlen)
        out["leq_pairs"] = g.pairs
        out["leq_contradictions"] = len(g.contradictions) + len(g.simeq_contradictions)
        ok &= out["leq_contradictions"] == 0
    if a.check in ("brandt", "all"):
        out["brandt"] = poly.brandt_comparison(min(a.maxlen, 3), a.n)
        ok &= out["brandt"]
    return (0 if ok else 1), out


def _parse_assign(text: str) -> dict[str, int]:
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, _, val = part.partition("=")
        val = val.strip().removeprefix("idx")
        if not key.strip() or not val.isdigit():
            raise _UsageError(f"bad assignment {part!r}; use letter=idxN")
        out[key.strip()] = int(val)
    return out


def cmd_munn(a) -> tuple[int, Any]:
    if a.action == "eval":
        S = io.load_semigroup(a.semigroup)
        x = munn.evaluate(a.word, _parse_assign(a.assign), S)
        return 0, {"word": a.word, "value": x, "label": S.labels[x]}
    P = munn.Presentation.parse(a.pres)
    r = munn.bounded_N_membership(P, a.word, a.maxlen)
    return (0 if r.yes else 1), {
        "word": a.word,
        "status": r.status,
        "certificate": [list(c) for c in r.certificate],
    }


def cmd_suite(a) -> tuple[int, Any]:
    results = suite.run_suite(seed=a.seed)
    report = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    return (0 if all(r.passed for r in results) else 1), {"criteria": report}


COMMANDS = {
    "builder": cmd_builder,
    "verify": cmd_verify,
    "green": cmd_green,
    "normal": cmd_normal,
    "quotient": cmd_quotient,
    "congruences": cmd_congruences,
    "factorize": cmd_factorize,
    "poly": cmd_poly,
    "munn": cmd_munn,
    "suite": cmd_suite,
}


def _emit(obj: Any, a) -> None:
    text = io.dumps(obj, pretty=a.pretty) + "\n"
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    saved = os.environ.get("ISQ_MAX_ELEMENTS")
    if a.max_size is not None:
        os.environ["ISQ_MAX_ELEMENTS"] = str(a.max_size)
    try:
        code, report = COMMANDS[a.command](a)
    except _UsageError as exc:
        print(f"isq: {exc}", file=sys.stderr)
        return 2
    except IsqError as exc:
        print(f"isq: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"isq: refuted: {exc}", file=sys.stderr)
        return 1
    finally:
        if saved is None:
            os.environ.pop("ISQ_MAX_ELEMENTS", None)
        else:
            os.environ["ISQ_MAX_ELEMENTS"] = saved
    _emit(report, a)
    return code


if __name__ == "__main__":
    sys.exit(main())
