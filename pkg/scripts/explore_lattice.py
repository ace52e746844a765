#!/usr/bin/env python3
"""Exploratory monochromatic-progression searches on coloured boxes of Z^n.

Sweeps the x-v, x, x+v search (and optionally the generated-ball search) over
the requested colouring and box for each norm d.  These are exploration
harnesses: a None simply means the box held no configuration, never a proof.
"""

import argparse
import sys

sys.path.insert(0, "src")

from blocksets.cli import parse_lattice_colouring
from blocksets.lattice import parse_box, search_generated_ball, search_l1_ap


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--colouring", default="coordsum:d=2")
    parser.add_argument("--box", default="0..4^3")
    parser.add_argument("--d-max", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--ball", action="store_true", help="also run the r=1, t=1 ball search")
    args = parser.parse_args()

    box = parse_box(args.box)
    colouring = parse_lattice_colouring(args.colouring, box, args.seed)
    print(f"colouring {colouring.name}, box {box}")
    for d in range(1, args.d_max + 1):
        hit = search_l1_ap(colouring, box, d)
        if hit is None:
            print(f"d={d}: no monochromatic x-v, x, x+v in the box")
        else:
            x, v = hit
            print(f"d={d}: x={x} v={v} colour={colouring.colour_id(x)}")
        if args.ball:
            ball_hit = search_generated_ball(colouring, box, 1, 1, d)
            if ball_hit is None:
                print(f"      ball r=1 t=1: none")
            else:
                print(f"      ball r=1 t=1: centre={ball_hit[0]} u={ball_hit[1].vectors[0]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
