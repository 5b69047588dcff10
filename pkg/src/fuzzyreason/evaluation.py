"""Reductive-property cases and the RPCF criterion functions.

Ten premise transformations: Cases 1-5 are FMP (premise on A, conclusion
scored against a target built from B), Cases 6-10 are FMT (premise on B,
target built from A). Class 1 uses {1,2,3,4} and {6,7,8,9}; Class 2 swaps
Case 4/9 for the slightly-tilted Cases 5/10.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from .core import DiscreteFuzzySet, as_fuzzy_set, complement, power_hedge
from .inference import DmmBase, FuzzyRule

__all__ = [
    "Direction",
    "TargetMode",
    "CaseSpec",
    "RpcfResult",
    "CLASS_CASES",
    "class_cases",
    "make_case",
    "generate_premise",
    "expected_target",
    "dmm_base",
    "rpcf_single",
    "rpcf_aggregate",
    "rpcf_overall",
    "error_vector",
]


class Direction(enum.Enum):
    FMP = "FMP"
    FMT = "FMT"


class TargetMode(enum.Enum):
    HEDGED = "hedged"
    PLAIN = "plain"
    BEST = "best"


CLASS_CASES: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    1: ((1, 2, 3, 4), (6, 7, 8, 9)),
    2: ((1, 2, 3, 5), (6, 7, 8, 10)),
}

_TILTED = (5, 10)


def class_cases(class_id: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    try:
        return CLASS_CASES[class_id]
    except KeyError:
        raise ValueError(f"unknown class {class_id!r}; expected 1 or 2") from None


@dataclass(frozen=True)
class CaseSpec:
    """One premise transformation.

    For Cases 5/10, ``tilted_premise`` is the slightly tilted version of the
    rule set the premise is drawn from (A for Case 5, B for Case 10) and
    ``tilted_target`` the matching tilt of the conclusion-side set. With
    ``negate_tilt`` (Case 10 only) both enter through the contrapositive rule,
    i.e. premise ``1 - tilted B`` and target ``1 - tilted A``, matching how
    Cases 6-8 negate their hedged premises and targets.
    """

    case_id: int
    tilted_premise: Optional[DiscreteFuzzySet] = None
    tilted_target: Optional[DiscreteFuzzySet] = None
    negate_tilt: bool = False

    def __post_init__(self):
        if self.case_id not in range(1, 11):
            raise ValueError(f"case_id must be in 1..10, got {self.case_id!r}")
        if self.case_id in _TILTED:
            if self.tilted_premise is None or self.tilted_target is None:
                raise ValueError(f"case {self.case_id} requires tilted premise and target vectors")
            object.__setattr__(self, "tilted_premise", as_fuzzy_set(self.tilted_premise))
            object.__setattr__(self, "tilted_target", as_fuzzy_set(self.tilted_target))
        elif self.tilted_premise is not None or self.tilted_target is not None:
            raise ValueError(f"case {self.case_id} takes no tilted vectors")
        if self.negate_tilt and self.case_id != 10:
            raise ValueError("negate_tilt only applies to case 10")

    @property
    def direction(self) -> Direction:
        return Direction.FMP if self.case_id <= 5 else Direction.FMT

    @property
    def classes(self) -> frozenset[int]:
        return frozenset(c for c, (fmp, fmt) in CLASS_CASES.items() if self.case_id in fmp + fmt)


def make_case(case_id: int, tilted_premise=None, tilted_target=None, negate_tilt: bool = False) -> CaseSpec:
    if case_id not in _TILTED:
        tilted_premise = tilted_target = None
        negate_tilt = False
    return CaseSpec(case_id, tilted_premise, tilted_target, negate_tilt if case_id == 10 else False)


def _tilted(case: CaseSpec, vec: DiscreteFuzzySet) -> DiscreteFuzzySet:
    return complement(vec) if case.negate_tilt else vec


def generate_premise(rule: FuzzyRule, case: CaseSpec) -> DiscreteFuzzySet:
    a, b = rule.antecedent, rule.consequent
    cid = case.case_id
    if cid == 1:
        return a
    if cid == 2:
        return power_hedge(a, 2)
    if cid == 3:
        return power_hedge(a, 0.5)
    if cid == 4:
        return complement(a)
    if cid == 6:
        return complement(b)
    if cid == 7:
        return complement(power_hedge(b, 2))
    if cid == 8:
        return complement(power_hedge(b, 0.5))
    if cid == 9:
        return b
    premise = _tilted(case, case.tilted_premise)
    (a if cid == 5 else b).check_comparable(premise)
    return premise


def _hedged_target(rule: FuzzyRule, case: CaseSpec) -> DiscreteFuzzySet:
    a, b = rule.antecedent, rule.consequent
    return {
        1: lambda: b,
        2: lambda: power_hedge(b, 2),
        3: lambda: power_hedge(b, 0.5),
        4: lambda: complement(b),
        6: lambda: complement(a),
        # "not very A" is 1 - A^2, not (1 - A)^2
        7: lambda: complement(power_hedge(a, 2)),
        8: lambda: complement(power_hedge(a, 0.5)),
        9: lambda: a,
    }[case.case_id]()


def _plain_target(rule: FuzzyRule, case: CaseSpec) -> DiscreteFuzzySet:
    if case.case_id in (2, 3):
        return rule.consequent
    if case.case_id in (7, 8):
        return complement(rule.antecedent)
    return _hedged_target(rule, case)


def expected_target(
    rule: FuzzyRule, case: CaseSpec, mode: TargetMode = TargetMode.HEDGED
) -> Union[DiscreteFuzzySet, tuple[DiscreteFuzzySet, DiscreteFuzzySet]]:
    """Target conclusion for ``case``; ``BEST`` returns ``(hedged, plain)``."""
    if case.case_id in _TILTED:
        target = _tilted(case, case.tilted_target)
        (rule.consequent if case.case_id == 5 else rule.antecedent).check_comparable(target)
        return (target, target) if mode is TargetMode.BEST else target
    if mode is TargetMode.HEDGED:
        return _hedged_target(rule, case)
    if mode is TargetMode.PLAIN:
        return _plain_target(rule, case)
    return _hedged_target(rule, case), _plain_target(rule, case)


def dmm_base(rule: FuzzyRule, case: CaseSpec) -> DmmBase:
    """Case-appropriate base set for the distance-measure method."""
    cid = case.case_id
    if cid in (1, 2, 3, 9):
        return DmmBase.PLAIN
    if cid in (4, 6, 7, 8):
        return DmmBase.COMPLEMENT
    return DmmBase.slightly_tilted(expected_target(rule, case))


def error_vector(conclusion, target) -> np.ndarray:
    conclusion, target = as_fuzzy_set(conclusion), as_fuzzy_set(target)
    conclusion.check_comparable(target)
    return conclusion.memberships - target.memberships


_BELOW_100 = float(np.nextafter(100.0, 0.0))


def rpcf_single(conclusion, target) -> float:
    """``(1 - mean |c_k - t_k|) * 100``."""
    err = error_vector(conclusion, target)
    total = float(np.sum(np.abs(err)))
    if total == 0.0:
        return 100.0
    # a nonzero error too small to register still scores below 100
    return min((1.0 - total / err.size) * 100.0, _BELOW_100)


def rpcf_aggregate(values: Sequence[float]) -> float:
    values = list(values)
    if not values:
        raise ValueError("rpcf_aggregate needs at least one value")
    return sum(values) / len(values)


def rpcf_overall(fmp: float, fmt: float) -> float:
    return (fmp + fmt) / 2.0


@dataclass(frozen=True)
class RpcfResult:
    per_case: Mapping[int, float]
    fmp_aggregate: float
    fmt_aggregate: float
    overall: float
    errors: Mapping[int, tuple[float, ...]] = field(default_factory=dict, compare=False)

    @classmethod
    def from_per_case(cls, per_case: Mapping[int, float], errors=None) -> "RpcfResult":
        fmp = [v for c, v in sorted(per_case.items()) if c <= 5]
        fmt = [v for c, v in sorted(per_case.items()) if c > 5]
        fmp_agg, fmt_agg = rpcf_aggregate(fmp), rpcf_aggregate(fmt)
        return cls(dict(per_case), fmp_agg, fmt_agg, rpcf_overall(fmp_agg, fmt_agg), dict(errors or {}))
