"""Census of normal inverse subsemigroups and their quotients for the symmetric inverse monoids.

    python3 scripts/normal_census.py --max-degree 3 --out results/census.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from isq import builders
from isq.congruence import is_simeq_congruence
from isq.normal import enumerate_normal, has_kernel_property, is_clifford, is_closed
from isq.quotient import build_quotient


@dataclass
class CensusConfig:
    max_degree: int = 3
    out: str | None = None


def census(degree: int) -> list[dict]:
    S = builders.symmetric_inverse_monoid(degree)
    rows = []
    for N in enumerate_normal(S):
        q = build_quotient(S, N)
        rows.append(
            {
                "size": len(N),
                "kernel_property": has_kernel_property(N),
                "clifford": is_clifford(N),
                "closed": is_closed(N),
                "classes": len(q),
                "inductive": q.groupoid.is_inductive,
                "congruence": is_simeq_congruence(S, N),
            }
        )
    return rows


def main(cfg: CensusConfig) -> dict:
    report = {}
    for n in range(1, cfg.max_degree + 1):
        t0 = time.perf_counter()
        rows = census(n)
        report[f"I{n}"] = rows
        print(f"I_{n}: {len(rows)} normal subsemigroups ({time.perf_counter() - t0:.2f}s)")
        for r in rows:
            print("   ", " ".join(f"{k}={v}" for k, v in r.items()))
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(json.dumps({"config": asdict(cfg), "census": report}, indent=2, sort_keys=True))
    return report


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-degree", type=int, default=CensusConfig.max_degree)
    p.add_argument("--out")
    a = p.parse_args()
    main(CensusConfig(a.max_degree, a.out))
