"""The 17 method variants and how each one runs a single case."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import DiscreteFuzzySet, OperatorFamily, RESIDUAL_FAMILIES, ZADEH, get_family
from ..evaluation import CaseSpec, Direction, dmm_base
from ..inference import (
    AarsForm,
    FuzzyRule,
    InferenceOutcome,
    SignForm,
    aars_fmp,
    aars_fmt,
    cri_fmp,
    cri_fmt,
    dmm_fmp,
    dmm_fmt,
    qip_fmp,
    qip_fmt,
    tip_fmp,
    tip_fmt,
)

METHODS = ("CRI", "TIP", "QIP", "AARS", "DMM")

_SUP_T = {
    "CRI": (cri_fmp, cri_fmt),
    "TIP": (tip_fmp, tip_fmt),
    "QIP": (qip_fmp, qip_fmt),
}

_SIGN_ALIASES = {
    "p(+1,0,-1)": SignForm.THREE_VALUED, "three": SignForm.THREE_VALUED,
    "three-valued": SignForm.THREE_VALUED, "3": SignForm.THREE_VALUED,
    "p(+1,-1)": SignForm.TWO_VALUED, "two": SignForm.TWO_VALUED,
    "two-valued": SignForm.TWO_VALUED, "2": SignForm.TWO_VALUED,
}
_AARS_ALIASES = {
    "more-or-less": AarsForm.MORE_OR_LESS, "more or less": AarsForm.MORE_OR_LESS,
    "mol": AarsForm.MORE_OR_LESS, "ml": AarsForm.MORE_OR_LESS,
    "reduction": AarsForm.REDUCTION, "red": AarsForm.REDUCTION,
}


@dataclass(frozen=True)
class MethodVariant:
    """A method plus its operator family (CRI/TIP/QIP) or form (AARS/DMM)."""

    method: str
    option: "OperatorFamily | SignForm | AarsForm"

    @property
    def option_label(self) -> str:
        return self.option.name if isinstance(self.option, OperatorFamily) else self.option.value

    @property
    def label(self) -> str:
        return f"{self.method}-{self.option_label}"

    def run(self, rule: FuzzyRule, premise: DiscreteFuzzySet, case: CaseSpec) -> InferenceOutcome:
        fmt = case.direction is Direction.FMT
        if self.method in _SUP_T:
            return _SUP_T[self.method][fmt](rule, premise, self.option)
        if self.method == "AARS":
            return (aars_fmt if fmt else aars_fmp)(rule, premise, self.option)
        return (dmm_fmt if fmt else dmm_fmp)(rule, premise, dmm_base(rule, case), self.option)


ROSTER: tuple[MethodVariant, ...] = (
    *(MethodVariant("CRI", f) for f in (ZADEH, *RESIDUAL_FAMILIES)),
    *(MethodVariant("TIP", f) for f in RESIDUAL_FAMILIES),
    *(MethodVariant("QIP", f) for f in RESIDUAL_FAMILIES),
    MethodVariant("AARS", AarsForm.MORE_OR_LESS),
    MethodVariant("AARS", AarsForm.REDUCTION),
    MethodVariant("DMM", SignForm.THREE_VALUED),
    MethodVariant("DMM", SignForm.TWO_VALUED),
)


def parse_variant(text: str) -> MethodVariant:
    """``"CRI-Goedel"``, ``"cri:lukasiewicz"``, ``"dmm:three"``, ``"AARS-reduction"``."""
    text = text.strip()
    for sep in (":", "-"):
        head, _, tail = text.partition(sep)
        if tail and head.upper() in METHODS:
            break
    else:
        raise ValueError(f"cannot parse method variant {text!r}")
    method, option = head.upper(), tail.strip().lower()
    try:
        if method in _SUP_T:
            family = get_family(option)
            if method != "CRI" and not family.residual:
                raise ValueError(f"{method} needs a residual operator family, got {family.name}")
            return MethodVariant(method, family)
        if method == "AARS":
            return MethodVariant(method, _AARS_ALIASES[option])
        return MethodVariant(method, _SIGN_ALIASES[option])
    except KeyError:
        raise ValueError(f"unknown option {tail!r} for method {method}") from None


def select_variants(specs) -> tuple[MethodVariant, ...]:
    """Expand method ids (``"cri"``) and variant specs, keeping roster order."""
    chosen = set()
    for spec in specs:
        if spec.strip().upper() in METHODS:
            chosen.update(v for v in ROSTER if v.method == spec.strip().upper())
        else:
            chosen.add(parse_variant(spec))
    return tuple(v for v in ROSTER if v in chosen)
