"""Closed-form <=_G versus bounded witness search in P_n, for growing word-length bounds.

    python3 scripts/gauge_sweep.py --n 2 --max-len 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from isq import poly


@dataclass
class SweepConfig:
    n: int = 2
    max_len: int = 4


def main(cfg: SweepConfig) -> list[tuple]:
    rows = []
    print(f"{'L':>2} {'pairs':>9} {'conclusive':>10} {'contra':>6} {'normal':>6} {'sec':>6}")
    for L in range(cfg.max_len + 1):
        t0 = time.perf_counter()
        g = poly.gauge_leq_agreement(cfg.n, L)
        normal = poly.gauge_is_normal(cfg.n, L)
        row = (L, g.pairs, g.conclusive, len(g.contradictions) + len(g.simeq_contradictions), normal)
        rows.append(row)
        print(f"{L:>2} {g.pairs:>9} {g.conclusive:>10} {row[3]:>6} {str(normal):>6} {time.perf_counter() - t0:>6.2f}")
    return rows


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=SweepConfig.n)
    p.add_argument("--max-len", type=int, default=SweepConfig.max_len)
    a = p.parse_args()
    main(SweepConfig(a.n, a.max_len))
