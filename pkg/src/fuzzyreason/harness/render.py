"""CSV, JSON and markdown renderings of a :class:`Report`.

All three are pure functions of the report, so the same config always gives
byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from ..core import DiscreteFuzzySet
from ..evaluation import RpcfResult, TargetMode, class_cases
from .runner import Report, Row

CSV_HEADER = ("method", "family", "direction", "case", "rpcf", "conclusion")


def _vec_full(v: DiscreteFuzzySet) -> str:
    return "[" + ", ".join(repr(t) for t in v.tolist()) + "]"


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in report.rows:
        writer.writerow((r.method, r.family, r.direction, r.case, repr(r.rpcf), _vec_full(r.conclusion)))
    return buf.getvalue()


def _row_json(r: Row) -> dict:
    return {
        "direction": r.direction,
        "premise": r.premise.tolist(),
        "conclusion": r.conclusion.tolist(),
        "target": r.target.tolist(),
        "rpcf": r.rpcf,
        "degenerate": r.degenerate,
        "note": r.note,
    }


def report_to_dict(report: Report) -> dict:
    methods: dict = {}
    for r in report.rows:
        methods.setdefault(r.method, {}).setdefault(r.family, {})[str(r.case)] = _row_json(r)
    aggregates: dict = {}
    for (label, class_id), agg in report.aggregates.items():
        method, family = label.split("-", 1)
        aggregates.setdefault(method, {}).setdefault(family, {})[str(class_id)] = {
            "fmp": agg.fmp_aggregate,
            "fmt": agg.fmt_aggregate,
            "overall": agg.overall,
            "per_case": {str(c): v for c, v in agg.per_case.items()},
        }
    return {
        "classes": list(report.classes),
        "target_mode": report.target_mode.value,
        "methods": methods,
        "aggregates": aggregates,
    }


def render_json(report: Report) -> str:
    # floats serialise with repr, which round-trips exactly
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def report_from_json(text: str) -> Report:
    data = json.loads(text)
    rows = []
    for method, families in data["methods"].items():
        for family, cases in families.items():
            for case, cell in cases.items():
                rows.append(Row(
                    method=method, family=family, direction=cell["direction"], case=int(case),
                    premise=DiscreteFuzzySet(cell["premise"]),
                    conclusion=DiscreteFuzzySet(cell["conclusion"]),
                    target=DiscreteFuzzySet(cell["target"]),
                    rpcf=cell["rpcf"], degenerate=cell["degenerate"], note=cell["note"],
                ))
    by_cell = {(r.label, r.case): r for r in rows}
    aggregates = {}
    for method, families in data["aggregates"].items():
        for family, classes in families.items():
            label = f"{method}-{family}"
            for class_id, agg in classes.items():
                per_case = {int(c): v for c, v in agg["per_case"].items()}
                errors = {c: tuple((by_cell[(label, c)].conclusion.memberships
                                    - by_cell[(label, c)].target.memberships).tolist()) for c in per_case}
                aggregates[(label, int(class_id))] = RpcfResult(
                    per_case, agg["fmp"], agg["fmt"], agg["overall"], errors)
    return Report(tuple(rows), aggregates, tuple(data["classes"]), TargetMode(data["target_mode"]))


def _vec_short(v: DiscreteFuzzySet) -> str:
    def num(t: float) -> str:
        s = f"{t:.3f}".rstrip("0").rstrip(".")
        return "0" if s in ("", "-0") else s

    return "[" + ", ".join(num(t) for t in v.tolist()) + "]"


def _table(header: list[str], body: list[list[str]]) -> list[str]:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in body]
    return lines


def _method_tables(report: Report, class_id: int) -> list[str]:
    out: list[str] = []
    fmp_cases, fmt_cases = class_cases(class_id)
    labels = report.labels
    for method in dict.fromkeys(lab.split("-", 1)[0] for lab in labels):
        variants = [lab for lab in labels if lab.startswith(method + "-")]
        for direction, cases, key in (("FMP", fmp_cases, "fmp"), ("FMT", fmt_cases, "fmt")):
            out.append(f"### {method} {direction}, class {class_id}")
            out.append("")
            header = ["Case", "Premise"] + [lab.split("-", 1)[1] for lab in variants]
            body = []
            for case in cases:
                first = report.row(variants[0], case)
                cells = []
                for lab in variants:
                    r = report.row(lab, case)
                    cells.append(f"{_vec_short(r.conclusion)} {r.rpcf:.2f}")
                body.append([str(case), _vec_short(first.premise)] + cells)
            aggs = [report.aggregate(lab, class_id) for lab in variants]
            body.append(["RPCF", ""] + [f"{getattr(a, key + '_aggregate'):.2f}" for a in aggs])
            out += _table(header, body)
            out.append("")
    return out


def _comparison_table(report: Report, class_id: int) -> list[str]:
    body = []
    for n, lab in enumerate(report.labels, start=1):
        method, option = lab.split("-", 1)
        agg = report.aggregate(lab, class_id)
        body.append([str(n), method, option, f"{agg.fmp_aggregate:.2f}",
                     f"{agg.fmt_aggregate:.2f}", f"{agg.overall:.2f}"])
    return ([f"### Comparison, class {class_id}", ""]
            + _table(["No", "Method", "Variant", "FMP", "FMT", "Overall"], body) + [""])


def render_markdown(report: Report) -> str:
    lines = [f"# Reductive-property report (targets: {report.target_mode.value})", ""]
    for class_id in report.classes:
        lines.append(f"## Class {class_id}")
        lines.append("")
        lines += _method_tables(report, class_id)
        lines += _comparison_table(report, class_id)
    notes = [r for r in report.rows if r.note]
    if notes:
        lines += ["## Notes", ""]
        lines += [f"- {r.label} case {r.case}: {r.note}" for r in notes]
        lines.append("")
    return "\n".join(lines)


RENDERERS = {"csv": render_csv, "json": render_json, "markdown": render_markdown}


def render_report(report: Report, fmt: str = "markdown") -> str:
    try:
        return RENDERERS[fmt](report)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(RENDERERS)}") from None


def write_report(report: Report, fmt: str, destination: "str | Path") -> Path:
    """Render and write; raises ``OSError`` if the destination is unwritable."""
    path = Path(destination)
    path.write_text(render_report(report, fmt), encoding="utf-8")
    return path
