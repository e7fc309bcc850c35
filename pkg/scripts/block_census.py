#!/usr/bin/env python3
"""Census of qualifying building blocks at small sizes.

Runs the bounded search over every initial seed and reports the blocks whose
first and last rows close up with balanced w/v counts and a v-free row.
"""

import argparse
import time

from taglab.blocks import render_search_results, search


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rows", type=int, default=4)
    parser.add_argument("--budget", type=int, default=2000)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--max-suffix", type=int, default=3)
    args = parser.parse_args()

    started = time.perf_counter()
    result = search(args.max_rows, args.budget, args.threads, args.max_suffix)
    elapsed = time.perf_counter() - started
    print(render_search_results(result, args.max_rows, args.budget, args.max_suffix), end="")
    print(f"# examined {result.examined} blocks "
          f"({result.skipped_duplicates} duplicates skipped, "
          f"{'exhausted' if result.exhausted else 'budget hit'}) in {elapsed:.2f}s")


if __name__ == "__main__":
    main()
