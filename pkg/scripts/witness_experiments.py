#!/usr/bin/env python3
"""Witness-colouring outcomes per colour count for size-1 blocks of template 123.

For each (n, k) the backtracking search reports one of: witness (an explicit
k-colouring of [3]^n with no monochromatic size-1 placement), none (proven
impossible by exhaustion), or budget (node limit hit first).  The outcomes are
empirical observations per (n, k); nothing about minimal k is asserted.
"""

import argparse
import sys

sys.path.insert(0, "src")

from blocksets.blocks import MixedSize, template_from_word
from blocksets.search import BudgetExceeded, witness_search


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--k-max", type=int, default=4)
    parser.add_argument("--budget", type=int, default=2_000_000)
    args = parser.parse_args()

    template = template_from_word("123")
    sizemode = MixedSize(1)
    print(f"template {template}, sizemode {sizemode}, budget {args.budget}")
    print(f"{'n':>3} {'k':>3}  outcome")
    for n in range(3, args.n_max + 1):
        for k in range(1, args.k_max + 1):
            try:
                witness = witness_search(n, template, sizemode, k, budget=args.budget)
            except BudgetExceeded as exc:
                print(f"{n:>3} {k:>3}  budget ({exc.nodes} nodes)")
                continue
            outcome = "witness" if witness is not None else "none"
            print(f"{n:>3} {k:>3}  {outcome}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
