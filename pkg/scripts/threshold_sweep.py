#!/usr/bin/env python3
"""Sweep the accept/reject thresholds over the padding and width knobs.

Prints, for each (r, w) pair on the grid, the yes-side lower bound, the
no-side upper bound, their ratio, and whether the two-sided promise gap
holds.  Ends with a per-instance gap example showing how the acceptance
separation scales with fidelity.
"""

import argparse

from depolab import hardness_gap, sbp_thresholds


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=4, help="ancilla count")
    parser.add_argument("--fidelity", type=float, default=0.5)
    parser.add_argument("--epsilon", type=float, default=0.5)
    parser.add_argument("--r-max", type=int, default=8)
    parser.add_argument("--w-max", type=int, default=14)
    args = parser.parse_args()

    print(f"m={args.m}  F={args.fidelity}  eps={args.epsilon}")
    print(f"{'r':>3} {'w':>3} {'yes_lower':>13} {'no_upper':>13} {'ratio':>10}  gap?")
    for r in range(1, args.r_max + 1):
        for w in (2, args.w_max // 2, args.w_max):
            t = sbp_thresholds(r, w, args.m, args.fidelity, args.epsilon)
            print(
                f"{r:>3} {w:>3} {t.yes_lower:>13.6e} {t.no_upper:>13.6e}"
                f" {t.ratio:>10.3f}  {'yes' if t.sbp_ok else 'NO'}"
            )

    print("\nacceptance gap for a fixed (yes=0.75, no=0.25) instance:")
    for f in (1.0, 0.5, 0.25, 0.125, 0.0625):
        g = hardness_gap(0.75, 0.25, f, width=10)
        print(f"  F={f:<8} yes={g.yes_rate:.8f}  no={g.no_rate:.8f}  gap={g.gap:.8f}")


if __name__ == "__main__":
    main()
