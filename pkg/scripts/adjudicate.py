"""Run the full identity sweep and print the adjudication verdicts.

Checks every catalog identity over its domain up to --pmax, prints the
rendered report, then summarises which printed closed forms hold, which fail
(and where their corrected candidates stand), and which summation range the
even-power secant sum actually uses.
"""

from __future__ import annotations

import argparse
from collections import Counter

from trigsum import DEFAULT_PRECISION, FAIL, PASS, builtin_catalog, emit_report, sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=30)
    ap.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    ap.add_argument("--format", choices=("text", "json", "csv"), default="text")
    args = ap.parse_args()

    report = sweep(None, args.pmax, args.precision)
    print(emit_report(report, args.format), end="")

    if args.format != "text":
        return 0

    roles = {ident.id: ident.role for ident in builtin_catalog()}
    by_id: dict[str, Counter] = {}
    corrected: dict[str, Counter] = {}
    for verdict in report.verdicts:
        by_id.setdefault(verdict.identity, Counter())[verdict.status] += 1
        if verdict.corrected_status is not None:
            corrected.setdefault(verdict.identity, Counter())[verdict.corrected_status] += 1

    print()
    print("adjudication")
    print("------------")
    for ident_id in sorted(by_id):
        counts = by_id[ident_id]
        total = sum(counts.values())
        if roles.get(ident_id) == "range_probe":
            kind = "range probe"
        elif counts[FAIL] == 0:
            kind = "holds as printed"
        else:
            kind = f"misprint ({counts[FAIL]}/{total} points fail)"
            if ident_id in corrected:
                c = corrected[ident_id]
                if c[FAIL] == 0 and c[PASS] > 0:
                    kind += ", corrected form holds"
                else:
                    kind += ", corrected form ALSO FAILS"
        print(f"  {ident_id:<10} {kind}")
    for topic, choice in report.adjudications().items():
        print(f"  {topic}: {choice}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
