"""Run every (variant, case) cell of a suite and aggregate RPCF scores."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..core import DiscreteFuzzySet
from ..evaluation import (
    RpcfResult,
    TargetMode,
    class_cases,
    expected_target,
    generate_premise,
    rpcf_single,
)
from .config import ExperimentConfig
from .variants import MethodVariant


@dataclass(frozen=True)
class Row:
    method: str
    family: str
    direction: str
    case: int
    premise: DiscreteFuzzySet
    conclusion: DiscreteFuzzySet
    target: DiscreteFuzzySet
    rpcf: float
    degenerate: bool = False
    note: str = ""

    @property
    def label(self) -> str:
        return f"{self.method}-{self.family}"


@dataclass(frozen=True)
class Report:
    rows: tuple[Row, ...]
    # (variant label, class id) -> aggregates over that class's cases
    aggregates: dict[tuple[str, int], RpcfResult] = field(default_factory=dict)
    classes: tuple[int, ...] = (1,)
    target_mode: TargetMode = TargetMode.HEDGED

    def row(self, label: str, case: int) -> Row:
        for r in self.rows:
            if r.label == label and r.case == case:
                return r
        raise KeyError((label, case))

    def aggregate(self, label: str, class_id: int = 1) -> RpcfResult:
        return self.aggregates[(label, class_id)]

    @property
    def labels(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for r in self.rows:
            seen.setdefault(r.label, None)
        return tuple(seen)


def run_cell(config: ExperimentConfig, variant: MethodVariant, case_id: int,
             note: str = "") -> Row:
    rule, case = config.rule, config.case(case_id)
    premise = generate_premise(rule, case)
    outcome = variant.run(rule, premise, case)
    target = expected_target(rule, case, config.target_mode)
    if config.target_mode is TargetMode.BEST:
        # score against whichever admissible target the conclusion is closer to
        target = max(target, key=lambda t: rpcf_single(outcome.conclusion, t))
    return Row(
        method=variant.method,
        family=variant.option_label,
        direction=case.direction.value,
        case=case_id,
        premise=premise,
        conclusion=outcome.conclusion,
        target=target,
        rpcf=rpcf_single(outcome.conclusion, target),
        degenerate=outcome.degenerate,
        note=note,
    )


def _note_for(config: ExperimentConfig, label: str, case_id: int) -> str:
    from .golden import row_note

    if not config.uses_default_rule or config.target_mode is not TargetMode.HEDGED:
        return ""
    if case_id == 10 and config.fmt_tilt != "negated":
        return ""
    return row_note(label, case_id)


def run_suite(config: ExperimentConfig, variants: Optional[tuple[MethodVariant, ...]] = None) -> Report:
    """Evaluate every configured variant on every case of the requested classes.

    Rows are ordered by roster position, then case id. Deterministic for a
    given config.
    """
    variants = variants or config.methods
    rows = []
    aggregates: dict[tuple[str, int], RpcfResult] = {}
    for variant in variants:
        by_case = {}
        for case_id in config.case_ids():
            row = run_cell(config, variant, case_id, _note_for(config, variant.label, case_id))
            by_case[case_id] = row
            rows.append(row)
        for class_id in config.classes:
            fmp, fmt = class_cases(class_id)
            per_case = {c: by_case[c].rpcf for c in fmp + fmt}
            errors = {c: tuple((by_case[c].conclusion.memberships - by_case[c].target.memberships).tolist())
                      for c in fmp + fmt}
            aggregates[(variant.label, class_id)] = RpcfResult.from_per_case(per_case, errors)
    return Report(tuple(rows), aggregates, config.classes, config.target_mode)
