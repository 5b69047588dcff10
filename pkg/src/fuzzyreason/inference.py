"""Single-rule FMP/FMT inference: CRI, TIP, QIP, AARS and the distance-measure method.

Sup/inf compositions are exact max/min reductions over the finite universes.
FMP maps a premise on the antecedent universe X to a conclusion on Y; FMT maps
a premise on Y back to X.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import (
    DiscreteFuzzySet,
    OperatorFamily,
    UniverseMismatchError,
    as_fuzzy_set,
    complement,
    get_family,
    is_disjoint,
)

__all__ = [
    "FuzzyRule",
    "SignForm",
    "AarsForm",
    "DmmBase",
    "DmmTrace",
    "InferenceOutcome",
    "relation_matrix",
    "cri_fmp",
    "cri_fmt",
    "tip_fmp",
    "tip_fmt",
    "qip_fmp",
    "qip_fmt",
    "euclid_dm",
    "sign_vector",
    "normalize_unit",
    "dmm_fmp",
    "dmm_fmt",
    "aars_similarity",
    "aars_fmp",
    "aars_fmt",
    "union_conclusions",
]


@dataclass(frozen=True)
class FuzzyRule:
    """``if x is A then y is B``; A and B may use different universe sizes."""

    antecedent: DiscreteFuzzySet
    consequent: DiscreteFuzzySet

    def __post_init__(self):
        object.__setattr__(self, "antecedent", as_fuzzy_set(self.antecedent))
        object.__setattr__(self, "consequent", as_fuzzy_set(self.consequent))


class SignForm(enum.Enum):
    THREE_VALUED = "P(+1,0,-1)"
    TWO_VALUED = "P(+1,-1)"


class AarsForm(enum.Enum):
    MORE_OR_LESS = "more-or-less"
    REDUCTION = "reduction"


class _BaseKind(enum.Enum):
    PLAIN = "plain"
    COMPLEMENT = "complement"
    TILTED = "tilted"


@dataclass(frozen=True)
class DmmBase:
    """Which set the distance-measure method shifts before normalising.

    ``PLAIN`` and ``COMPLEMENT`` refer to the conclusion-side set of the
    original rule: B for FMP, A for FMT. So FMP Cases 1-3 use ``PLAIN``
    (B), Case 4 ``COMPLEMENT`` (1-B); FMT Cases 6-8 use ``COMPLEMENT``
    (1-A) and Case 9 ``PLAIN`` (A). Cases 5/10 carry an explicit vector.
    """

    kind: _BaseKind
    tilted: Optional[DiscreteFuzzySet] = None

    PLAIN = None  # replaced below with instances
    COMPLEMENT = None

    @classmethod
    def slightly_tilted(cls, vector) -> "DmmBase":
        return cls(_BaseKind.TILTED, as_fuzzy_set(vector))

    def resolve(self, conclusion_side: DiscreteFuzzySet) -> DiscreteFuzzySet:
        if self.kind is _BaseKind.PLAIN:
            return conclusion_side
        if self.kind is _BaseKind.COMPLEMENT:
            return complement(conclusion_side)
        conclusion_side.check_comparable(self.tilted)
        return self.tilted

    def __repr__(self) -> str:
        if self.kind is _BaseKind.TILTED:
            return f"DmmBase.slightly_tilted({self.tilted.tolist()})"
        return f"DmmBase.{self.kind.name}"


DmmBase.PLAIN = DmmBase(_BaseKind.PLAIN)
DmmBase.COMPLEMENT = DmmBase(_BaseKind.COMPLEMENT)


@dataclass(frozen=True, eq=False)
class DmmTrace:
    difference: np.ndarray
    sign: np.ndarray
    distance: float
    quasi: np.ndarray
    xi: float
    eta: float


@dataclass(frozen=True)
class InferenceOutcome:
    conclusion: DiscreteFuzzySet
    method: str
    family: Optional[OperatorFamily] = None
    sign_form: Optional[SignForm] = None
    aars_form: Optional[AarsForm] = None
    intermediates: Optional[DmmTrace] = None
    degenerate: bool = False


def _premise(premise, universe: DiscreteFuzzySet) -> DiscreteFuzzySet:
    premise = as_fuzzy_set(premise)
    universe.check_comparable(premise)
    return premise


def relation_matrix(rule: FuzzyRule, family: "OperatorFamily | str") -> np.ndarray:
    """``R[x, y] = A(x) -> B(y)``."""
    family = get_family(family)
    a = rule.antecedent.memberships[:, None]
    b = rule.consequent.memberships[None, :]
    return np.asarray(family.implication(a, b), dtype=float)


def _sup_t_fmp(rule, premise, family, method) -> InferenceOutcome:
    family = get_family(family)
    p = _premise(premise, rule.antecedent).memberships
    rel = relation_matrix(rule, family)
    out = np.max(family.tnorm(p[:, None], rel), axis=0)
    return InferenceOutcome(DiscreteFuzzySet(out), method, family)


def cri_fmp(rule: FuzzyRule, premise, family) -> InferenceOutcome:
    """``B*(y) = max_x A*(x) (x) (A(x) -> B(y))``."""
    return _sup_t_fmp(rule, premise, family, "CRI")


def tip_fmp(rule: FuzzyRule, premise, family) -> InferenceOutcome:
    # the triple-I FMP solution is the same sup-t composition as CRI
    return _sup_t_fmp(rule, premise, family, "TIP")


def cri_fmt(rule: FuzzyRule, premise, family) -> InferenceOutcome:
    """``A*(x) = max_y B*(y) (x) (A(x) -> B(y))``."""
    family = get_family(family)
    p = _premise(premise, rule.consequent).memberships
    rel = relation_matrix(rule, family)
    out = np.max(family.tnorm(p[None, :], rel), axis=1)
    return InferenceOutcome(DiscreteFuzzySet(out), "CRI", family)


def tip_fmt(rule: FuzzyRule, premise, family) -> InferenceOutcome:
    """``A*(x) = min_y (A(x) -> B(y)) -> B*(y)``."""
    family = get_family(family)
    p = _premise(premise, rule.consequent).memberships
    rel = relation_matrix(rule, family)
    out = np.min(family.implication(rel, p[None, :]), axis=1)
    return InferenceOutcome(DiscreteFuzzySet(out), "TIP", family)


def qip_fmp(rule: FuzzyRule, premise, family) -> InferenceOutcome:
    """``B*(y) = max_x A*(x) (x) (A*(x) -> A(x)) (x) (A(x) -> B(y))``."""
    family = get_family(family)
    p = _premise(premise, rule.antecedent).memberships
    a = rule.antecedent.memberships
    rel = relation_matrix(rule, family)
    lead = family.tnorm(p, family.implication(p, a))
    out = np.max(family.tnorm(np.asarray(lead)[:, None], rel), axis=0)
    return InferenceOutcome(DiscreteFuzzySet(out), "QIP", family)


def qip_fmt(rule: FuzzyRule, premise, family) -> InferenceOutcome:
    """``A*(x) = max_y A(x) (x) (A(x) -> B(y)) (x) (B(y) -> B*(y))``."""
    family = get_family(family)
    p = _premise(premise, rule.consequent).memberships
    a = rule.antecedent.memberships
    b = rule.consequent.memberships
    rel = relation_matrix(rule, family)
    lead = family.tnorm(a[:, None], rel)
    tail = family.implication(b, p)
    out = np.max(family.tnorm(lead, np.asarray(tail)[None, :]), axis=1)
    return InferenceOutcome(DiscreteFuzzySet(out), "QIP", family)


def euclid_dm(u, v) -> float:
    """Root-mean-square distance ``sqrt(sum_k (u_k - v_k)^2 / r)``."""
    u, v = as_fuzzy_set(u), as_fuzzy_set(v)
    u.check_comparable(v)
    d = u.memberships - v.memberships
    return math.sqrt(float(np.dot(d, d)) / u.universe_size)


def sign_vector(diff: Sequence[float], form: SignForm) -> np.ndarray:
    s = np.sign(np.asarray(diff, dtype=float))
    if form is SignForm.TWO_VALUED:
        s = np.where(s == 0.0, 1.0, s)
    return s


def normalize_unit(raw: Sequence[float]) -> DiscreteFuzzySet:
    """Min-max standardisation onto [0, 1]; a constant input maps to all zeros."""
    raw = np.asarray(raw, dtype=float)
    if raw.size == 0:
        raise ValueError("cannot normalise an empty vector")
    xi, eta = float(raw.max()), float(raw.min())
    if xi == eta:
        return DiscreteFuzzySet.zeros(raw.size)
    return DiscreteFuzzySet((raw - eta) / (xi - eta))


def _dmm(premise, antecedent, base_set, form, method_name) -> InferenceOutcome:
    # the premise-side sign vector shifts the conclusion-side base pointwise
    if base_set.universe_size != premise.universe_size:
        raise UniverseMismatchError(
            f"DMM needs equal universes: premise has {premise.universe_size} points, "
            f"base has {base_set.universe_size}"
        )
    r = base_set.universe_size
    if is_disjoint(premise, antecedent):
        return InferenceOutcome(DiscreteFuzzySet.zeros(r), method_name, sign_form=form)
    diff = premise.memberships - antecedent.memberships
    sign = sign_vector(diff, form)
    dist = euclid_dm(premise, antecedent)
    quasi = base_set.memberships + dist * sign
    xi, eta = float(quasi.max()), float(quasi.min())
    trace = DmmTrace(diff, sign, dist, quasi, xi, eta)
    return InferenceOutcome(
        normalize_unit(quasi), method_name, sign_form=form, intermediates=trace,
        degenerate=xi == eta,
    )


def dmm_fmp(rule: FuzzyRule, premise, base: DmmBase, form: SignForm) -> InferenceOutcome:
    premise = _premise(premise, rule.antecedent)
    base_set = base.resolve(rule.consequent)
    return _dmm(premise, rule.antecedent, base_set, form, "DMM")


def dmm_fmt(rule: FuzzyRule, premise, base: DmmBase, form: SignForm) -> InferenceOutcome:
    """FMT through the contrapositive rule ``if y is not B then x is not A``.

    Difference, sign, distance and the emptiness guard are all taken against
    ``1 - B``.
    """
    premise = _premise(premise, rule.consequent)
    base_set = base.resolve(rule.antecedent)
    return _dmm(premise, complement(rule.consequent), base_set, form, "DMM")


def aars_similarity(premise, antecedent) -> float:
    return 1.0 / (1.0 + euclid_dm(premise, antecedent))


def _aars_modify(target: DiscreteFuzzySet, s: float, form: AarsForm) -> DiscreteFuzzySet:
    mu = target.memberships
    if form is AarsForm.MORE_OR_LESS:
        return DiscreteFuzzySet(np.minimum(1.0, mu / s))
    return DiscreteFuzzySet(mu * s)


def aars_fmp(rule: FuzzyRule, premise, form: AarsForm) -> InferenceOutcome:
    premise = _premise(premise, rule.antecedent)
    s = aars_similarity(premise, rule.antecedent)
    return InferenceOutcome(_aars_modify(rule.consequent, s, form), "AARS", aars_form=form)


def aars_fmt(rule: FuzzyRule, premise, form: AarsForm) -> InferenceOutcome:
    """Similarity against B, modification applied to A itself."""
    premise = _premise(premise, rule.consequent)
    s = aars_similarity(premise, rule.consequent)
    return InferenceOutcome(_aars_modify(rule.antecedent, s, form), "AARS", aars_form=form)


def union_conclusions(parts: Sequence[InferenceOutcome]) -> list[DiscreteFuzzySet]:
    """Collect per-premise conclusions in order.

    The combination operator for several premises is left undefined upstream,
    so the collection is returned as-is rather than reduced with max.
    """
    if not parts:
        raise ValueError("union_conclusions needs at least one outcome")
    return [p.conclusion for p in parts]
