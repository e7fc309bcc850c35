#!/usr/bin/env python3
"""Tabulate how many tag iterations each family member needs to grow once.

Prints an (n, m) grid of step counts for A^n B C^m reaching A^(n+1) B C^(m+1),
plus the prediction from the certified chain, which must agree exactly.
"""

import argparse
import time

from taglab.certify import (
    direct_growth_check,
    seed_quadruplet,
    total_pass_iterations,
    verify_chain,
)
from taglab.core import OutcomeKind


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--m-max", type=int, default=5)
    parser.add_argument("--budget", type=int, default=200_000)
    args = parser.parse_args()

    chain = verify_chain(seed_quadruplet())
    started = time.perf_counter()
    header = "n\\m " + " ".join(f"{m:>6}" for m in range(args.m_max + 1))
    print(header)
    mismatches = 0
    for n in range(args.n_max + 1):
        cells = []
        for m in range(args.m_max + 1):
            outcome = direct_growth_check(n, m, args.budget)
            if outcome.kind is OutcomeKind.TARGET_REACHED:
                cells.append(f"{outcome.steps_taken:>6}")
                if outcome.steps_taken != total_pass_iterations(chain, n, m):
                    mismatches += 1
            else:
                cells.append("     -")
        print(f"{n:>3} " + " ".join(cells))
    elapsed = time.perf_counter() - started
    print(f"# {elapsed:.2f}s, chain prediction mismatches: {mismatches}")


if __name__ == "__main__":
    main()
