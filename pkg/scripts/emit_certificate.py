#!/usr/bin/env python3
"""Derive the growth certificate, validate it, and write the document."""

import argparse
import sys

from taglab.certify import (
    certificate_problems,
    render_certificate,
    seed_quadruplet,
    total_pass_iterations,
    verify_chain,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("path", nargs="?", default="certificate.txt")
    args = parser.parse_args()

    chain = verify_chain(seed_quadruplet())
    problems = certificate_problems(chain)
    with open(args.path, "w") as handle:
        handle.write(render_certificate(chain))
    print(f"wrote {args.path}: {len(chain.step_certificates)} steps, "
          f"closure={'ok' if chain.closure_ok else 'BROKEN'}, "
          f"{total_pass_iterations(chain)} tag iterations at the base instance")
    for problem in problems:
        print(f"PROBLEM {problem}", file=sys.stderr)
    sys.exit(0 if not problems else 3)


if __name__ == "__main__":
    main()
