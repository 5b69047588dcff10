"""Command-line entry point: ``run``, ``check`` and ``tables``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .config import ConfigError, load_config
from .oracle import BUG, ERRATUM_LABEL, MATCHES, has_bugs, oracle_check
from .render import render_report
from .runner import run_suite
from .variants import select_variants


def _config(args):
    config = load_config(args.config)
    changes = {}
    if getattr(args, "class_id", None):
        changes["classes"] = (args.class_id,)
    if getattr(args, "method", None):
        try:
            changes["methods"] = select_variants(args.method)
        except ValueError as exc:
            raise ConfigError("methods", str(exc)) from None
    if getattr(args, "format", None):
        changes["output_format"] = args.format
    return config.replace(**changes) if changes else config


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    config = _config(args)
    report = run_suite(config)
    _emit(render_report(report, config.output_format), args.out)
    return 0


def cmd_check(args) -> int:
    config = _config(args)
    records = oracle_check(config, args.tolerance)
    shown = records if args.verbose else [r for r in records if r.verdict != MATCHES]
    lines = [r.describe() for r in shown]
    counts = {v: sum(r.verdict == v for r in records) for v in (MATCHES, ERRATUM_LABEL, BUG)}
    lines.append(" ".join(f"{k}={v}" for k, v in counts.items()))
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if has_bugs(records) else 0


def cmd_tables(args) -> int:
    base = load_config(args.config)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for class_id in (1, 2):
        config = base.replace(classes=(class_id,))
        report = run_suite(config)
        for fmt, ext in (("markdown", "md"), ("csv", "csv"), ("json", "json")):
            (out / f"class{class_id}.{ext}").write_text(render_report(report, fmt), encoding="utf-8")
    records = oracle_check(base.replace(classes=(1, 2)))
    (out / "check.txt").write_text("\n".join(r.describe() for r in records) + "\n", encoding="utf-8")
    print(f"wrote tables to {out}")
    return 1 if has_bugs(records) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzyreason", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evaluate a suite and render the report")
    run.add_argument("--config", help="config file (defaults apply when omitted)")
    run.add_argument("--class", dest="class_id", type=int, choices=(1, 2))
    run.add_argument("--method", action="append",
                     help="method id or variant, e.g. cri, DMM-three, QIP:goedel; repeatable")
    run.add_argument("--format", choices=("csv", "json", "markdown"))
    run.add_argument("--out", help="write to this path instead of stdout")
    run.set_defaults(func=cmd_run)

    check = sub.add_parser("check", help="audit against the oracle and published values")
    check.add_argument("--config")
    check.add_argument("--class", dest="class_id", type=int, choices=(1, 2))
    check.add_argument("--tolerance", type=float, help="percentage-point tolerance for scores")
    check.add_argument("--verbose", "-v", action="store_true", help="also list matching cells")
    check.add_argument("--out")
    check.set_defaults(func=cmd_check)

    tables = sub.add_parser("tables", help="regenerate every table into a directory")
    tables.add_argument("--config")
    tables.add_argument("--out-dir", default="tables")
    tables.set_defaults(func=cmd_tables)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "tolerance", None) is not None and not args.tolerance > 0:
        print("error: tolerance: must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
