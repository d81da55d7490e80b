"""Timing check for the large-p evaluation path.

The angle-rotation evaluator must handle p around 10^6 in seconds; this
script times a representative call and prints the enclosure it produced.
"""

from __future__ import annotations

import argparse
import time

from trigsum import DEFAULT_PRECISION, SumSpec, decimal_string, eval_sum_general


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=1_000_003)
    ap.add_argument("--q", type=int, default=7)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--l", type=int, default=1)
    ap.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    args = ap.parse_args()

    spec = SumSpec(args.n, args.m, args.l, args.p, args.q, args.r)
    t0 = time.perf_counter()
    value = eval_sum_general(spec, args.precision)
    elapsed = time.perf_counter() - t0
    print(
        f"S[n={args.n},m={args.m},l={args.l}](p={args.p},q={args.q},r={args.r})"
        f" = {decimal_string(value.value)} +/- {value.bound:.2e}"
    )
    print(f"elapsed: {elapsed:.3f}s at {args.precision} bits")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
