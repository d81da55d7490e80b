"""Release gate: every corrected candidate formula must PASS on a wide range.

Runs each corrected replacement over parameter ranges well beyond the default
sweep (p up to --pmax where affordable) and exits nonzero if any point fails,
so a bad correction cannot ship silently.
"""

from __future__ import annotations

import argparse
from collections import Counter

from trigsum import DEFAULT_PRECISION, PASS, corrected_candidates_validation


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=100)
    ap.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    args = ap.parse_args()

    report = corrected_candidates_validation(args.pmax, args.precision)
    by_id: dict[str, Counter] = {}
    for verdict in report.verdicts:
        by_id.setdefault(verdict.identity, Counter())[verdict.status] += 1

    bad = 0
    for ident_id in sorted(by_id):
        counts = by_id[ident_id]
        total = sum(counts.values())
        ok = counts[PASS] == total
        bad += 0 if ok else 1
        print(f"  {ident_id:<16} {counts[PASS]}/{total} PASS {'ok' if ok else 'FAILING'}")
    if bad:
        print(f"corrected-candidate gate: {bad} candidate(s) failing")
        return 1
    print(f"corrected-candidate gate: all candidates pass up to pmax={args.pmax}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
