#!/usr/bin/env python3
"""How much each score depends on hedged versus plain targets.

Cases 2, 3, 7 and 8 admit two targets (the hedged set or the plain one).
This runs the suite under each target mode and tabulates the overall score
per variant, so the ranking can be checked for robustness.

    python3 scripts/target_mode_sensitivity.py --class 1 --csv sensitivity.csv
"""

import argparse
import csv
import sys

from fuzzyreason.evaluation import TargetMode
from fuzzyreason.harness import load_config, run_suite

MODES = (TargetMode.HEDGED, TargetMode.PLAIN, TargetMode.BEST)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--class", dest="class_id", type=int, choices=(1, 2), default=1)
    parser.add_argument("--config")
    parser.add_argument("--csv", help="also write the table to this CSV path")
    args = parser.parse_args(argv)

    base = load_config(args.config).replace(classes=(args.class_id,))
    reports = {m: run_suite(base.replace(target_mode=m)) for m in MODES}
    labels = reports[TargetMode.HEDGED].labels
    rows = []
    for label in labels:
        scores = [reports[m].aggregate(label, args.class_id).overall for m in MODES]
        rows.append((label, *scores))

    header = ("variant", *(m.value for m in MODES))
    print(f"{header[0]:20s}" + "".join(f"{h:>10s}" for h in header[1:]))
    for label, *scores in rows:
        print(f"{label:20s}" + "".join(f"{s:10.3f}" for s in scores))
    for mode in MODES:
        ranked = sorted(rows, key=lambda r: -r[1 + MODES.index(mode)])
        print(f"top under {mode.value}: " + ", ".join(r[0] for r in ranked[:3]))

    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows((label, *(repr(s) for s in scores)) for label, *scores in rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
