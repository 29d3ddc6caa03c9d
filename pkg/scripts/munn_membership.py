"""How often bounded certificates find random words in N(P) as the bound grows.

    python3 scripts/munn_membership.py --pres 'ab=ba' --samples 200 --max-len 3
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from isq import munn
from isq.suite import DEFAULT_SEED


@dataclass
class MembershipConfig:
    pres: str = "ab=ba"
    samples: int = 200
    word_len: int = 6
    max_len: int = 3
    seed: int = DEFAULT_SEED


def main(cfg: MembershipConfig) -> dict[int, int]:
    P = munn.Presentation.parse(cfg.pres)
    rng = random.Random(cfg.seed)
    letters = P.alphabet + P.alphabet.upper()
    samples = ["".join(rng.choice(letters) for _ in range(rng.randint(1, cfg.word_len))) for _ in range(cfg.samples)]
    hits = {}
    for L in range(cfg.max_len + 1):
        hits[L] = sum(munn.bounded_N_membership(P, w, L).yes for w in samples)
        print(f"L={L}: {hits[L]}/{len(samples)} certified")
    return hits


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--pres", default=MembershipConfig.pres)
    p.add_argument("--samples", type=int, default=MembershipConfig.samples)
    p.add_argument("--word-len", type=int, default=MembershipConfig.word_len)
    p.add_argument("--max-len", type=int, default=MembershipConfig.max_len)
    p.add_argument("--seed", type=int, default=MembershipConfig.seed)
    a = p.parse_args()
    main(MembershipConfig(a.pres, a.samples, a.word_len, a.max_len, a.seed))
