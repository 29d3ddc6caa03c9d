"""Run the nine acceptance checks and print one line each; exit 1 if any fails."""

from __future__ import annotations

import argparse
import sys

from isq import suite

if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=suite.DEFAULT_SEED)
    a = p.parse_args()
    results = suite.run_suite(seed=a.seed)
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
