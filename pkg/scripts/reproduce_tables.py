#!/usr/bin/env python3
"""Regenerate every comparison table and audit it against the published figures.

Writes class{1,2}.{md,csv,json} and check.txt into the output directory, then
prints each published aggregate next to the computed one.

    python3 scripts/reproduce_tables.py --out-dir results
"""

import argparse
import sys
from pathlib import Path

from fuzzyreason.harness import load_config, oracle_check, render_report, run_suite
from fuzzyreason.harness.golden import GOLDEN
from fuzzyreason.harness.oracle import BUG, ERRATUM_LABEL, MATCHES


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--config", help="config file; defaults reproduce the published suite")
    args = parser.parse_args(argv)

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    base = load_config(args.config)
    reports = {}
    for class_id in (1, 2):
        report = run_suite(base.replace(classes=(class_id,)))
        reports[class_id] = report
        for fmt, ext in (("markdown", "md"), ("csv", "csv"), ("json", "json")):
            (out / f"class{class_id}.{ext}").write_text(render_report(report, fmt), encoding="utf-8")

    records = oracle_check(base.replace(classes=(1, 2)))
    (out / "check.txt").write_text("\n".join(r.describe() for r in records) + "\n", encoding="utf-8")

    print(f"{'class':>5}  {'variant':20s} {'quantity':8s} {'printed':>8s} {'computed':>9s}  verdict")
    verdicts = {(r.label, r.class_id, r.quantity): r.verdict for r in records if r.case is None}
    for cell in GOLDEN:
        if cell.table != "comparison" or cell.case is not None:
            continue
        agg = reports[cell.class_id].aggregate(cell.label, cell.class_id)
        value = {"fmp": agg.fmp_aggregate, "fmt": agg.fmt_aggregate, "overall": agg.overall}[cell.quantity]
        verdict = verdicts.get((cell.label, cell.class_id, cell.quantity), "-")
        print(f"{cell.class_id:>5}  {cell.label:20s} {cell.quantity:8s} {cell.printed:>8s} {value:9.3f}  {verdict}")

    counts = {v: sum(r.verdict == v for r in records) for v in (MATCHES, ERRATUM_LABEL, BUG)}
    print(" ".join(f"{k}={v}" for k, v in counts.items()))
    print(f"tables written to {out}")
    return 1 if counts[BUG] else 0


if __name__ == "__main__":
    sys.exit(main())
