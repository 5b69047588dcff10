"""Experiment configuration.

A config is a flat TOML document: ``key = value`` lines, ``#`` comments, and
arrays for membership vectors. Every key is optional::

    antecedent = [1, 0.3, 0, 0, 0]
    consequent = [0, 0, 0, 0.3, 1]
    methods = ["cri", "DMM-three", "AARS-reduction"]   # method ids or variants
    classes = [1, 2]
    target_mode = "hedged"             # hedged | plain | best
    tilted_fmp_premise = [1, 0.2, 0, 0, 0]   # slightly tilted A (Case 5)
    tilted_fmp_target = [0, 0, 0, 0.2, 1]    # slightly tilted B (Case 5)
    tilted_fmt_premise = [0, 0, 0, 0.2, 1]   # slightly tilted B (Case 10)
    tilted_fmt_target = [1, 0.2, 0, 0, 0]    # slightly tilted A (Case 10)
    fmt_tilt = "negated"               # negated | direct
    tolerance = 0.05                   # percentage points
    vector_tolerance = 0.005
    format = "markdown"                # csv | json | markdown

Tilted vectors default to the values above only while the rule itself is the
default rule; a custom rule asking for Class 2 must supply all four.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..core import DiscreteFuzzySet, MembershipError
from ..evaluation import CaseSpec, TargetMode, class_cases, make_case
from ..inference import FuzzyRule
from .variants import ROSTER, MethodVariant, select_variants

DEFAULT_ANTECEDENT = (1.0, 0.3, 0.0, 0.0, 0.0)
DEFAULT_CONSEQUENT = (0.0, 0.0, 0.0, 0.3, 1.0)
DEFAULT_TILTED_A = (1.0, 0.2, 0.0, 0.0, 0.0)
DEFAULT_TILTED_B = (0.0, 0.0, 0.0, 0.2, 1.0)

FORMATS = ("csv", "json", "markdown")
FMT_TILTS = ("negated", "direct")
_TILT_KEYS = ("tilted_fmp_premise", "tilted_fmp_target", "tilted_fmt_premise", "tilted_fmt_target")
_KEYS = frozenset(
    {"antecedent", "consequent", "methods", "classes", "target_mode", "fmt_tilt",
     "tolerance", "vector_tolerance", "format", *_TILT_KEYS}
)


class ConfigError(ValueError):
    def __init__(self, field_name: str, reason: str):
        super().__init__(f"{field_name}: {reason}")
        self.field = field_name
        self.reason = reason


def _vector(name: str, value: Any) -> DiscreteFuzzySet:
    if isinstance(value, DiscreteFuzzySet):
        return value
    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigError(name, "expected a non-empty list of membership degrees")
    if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
        raise ConfigError(name, "membership degrees must be numbers")
    try:
        return DiscreteFuzzySet(value)
    except MembershipError:
        raise ConfigError(name, "membership out of range [0, 1]") from None


@dataclass(frozen=True)
class ExperimentConfig:
    antecedent: DiscreteFuzzySet = field(default_factory=lambda: DiscreteFuzzySet(DEFAULT_ANTECEDENT))
    consequent: DiscreteFuzzySet = field(default_factory=lambda: DiscreteFuzzySet(DEFAULT_CONSEQUENT))
    methods: tuple[MethodVariant, ...] = ROSTER
    classes: tuple[int, ...] = (1,)
    target_mode: TargetMode = TargetMode.HEDGED
    tilted_fmp_premise: Optional[DiscreteFuzzySet] = None
    tilted_fmp_target: Optional[DiscreteFuzzySet] = None
    tilted_fmt_premise: Optional[DiscreteFuzzySet] = None
    tilted_fmt_target: Optional[DiscreteFuzzySet] = None
    fmt_tilt: str = "negated"
    tolerance: float = 0.05
    vector_tolerance: float = 5e-3
    output_format: str = "markdown"

    def __post_init__(self):
        set_ = lambda k, v: object.__setattr__(self, k, v)  # noqa: E731
        set_("antecedent", _vector("antecedent", self.antecedent))
        set_("consequent", _vector("consequent", self.consequent))
        if self.uses_default_rule:
            defaults = (DEFAULT_TILTED_A, DEFAULT_TILTED_B, DEFAULT_TILTED_B, DEFAULT_TILTED_A)
            for key, default in zip(_TILT_KEYS, defaults):
                if getattr(self, key) is None:
                    set_(key, DiscreteFuzzySet(default))
        for key in _TILT_KEYS:
            if getattr(self, key) is not None:
                set_(key, _vector(key, getattr(self, key)))
        if not self.methods:
            raise ConfigError("methods", "at least one method is required")
        if not self.classes or any(c not in (1, 2) for c in self.classes):
            raise ConfigError("classes", "expected a non-empty subset of {1, 2}")
        set_("classes", tuple(sorted(set(self.classes))))
        if 2 in self.classes and any(getattr(self, k) is None for k in _TILT_KEYS):
            raise ConfigError("classes", "class 2 requires all four tilted vectors")
        if self.fmt_tilt not in FMT_TILTS:
            raise ConfigError("fmt_tilt", f"expected one of {FMT_TILTS}")
        if not self.tolerance > 0 or not self.vector_tolerance > 0:
            raise ConfigError("tolerance", "tolerances must be positive")
        if self.output_format not in FORMATS:
            raise ConfigError("format", f"expected one of {FORMATS}")
        self._check_sizes()

    def _check_sizes(self):
        x, y = self.antecedent.universe_size, self.consequent.universe_size
        expected = {"tilted_fmp_premise": x, "tilted_fmp_target": y,
                    "tilted_fmt_premise": y, "tilted_fmt_target": x}
        for key, size in expected.items():
            vec = getattr(self, key)
            if vec is not None and vec.universe_size != size:
                raise ConfigError(key, f"expected {size} degrees, got {vec.universe_size}")

    @property
    def uses_default_rule(self) -> bool:
        return (tuple(self.antecedent) == DEFAULT_ANTECEDENT
                and tuple(self.consequent) == DEFAULT_CONSEQUENT)

    @property
    def rule(self) -> FuzzyRule:
        return FuzzyRule(self.antecedent, self.consequent)

    def case(self, case_id: int) -> CaseSpec:
        if case_id == 5:
            return make_case(5, self.tilted_fmp_premise, self.tilted_fmp_target)
        if case_id == 10:
            return make_case(10, self.tilted_fmt_premise, self.tilted_fmt_target,
                             negate_tilt=self.fmt_tilt == "negated")
        return make_case(case_id)

    def case_ids(self) -> tuple[int, ...]:
        ids = set()
        for c in self.classes:
            fmp, fmt = class_cases(c)
            ids.update(fmp + fmt)
        return tuple(sorted(ids))

    def replace(self, **changes) -> "ExperimentConfig":
        data = {k: getattr(self, k) for k in self.__dataclass_fields__}
        data.update(changes)
        return ExperimentConfig(**data)


def config_from_mapping(data: Mapping[str, Any]) -> ExperimentConfig:
    unknown = set(data) - _KEYS
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown key")
    kwargs: dict[str, Any] = {}
    for key in ("antecedent", "consequent", *_TILT_KEYS):
        if key in data:
            kwargs[key] = _vector(key, data[key])
    if "methods" in data:
        methods = data["methods"]
        if isinstance(methods, str):
            methods = [methods]
        if not isinstance(methods, list) or not all(isinstance(m, str) for m in methods):
            raise ConfigError("methods", "expected a list of method names")
        try:
            kwargs["methods"] = select_variants(methods)
        except ValueError as exc:
            raise ConfigError("methods", str(exc)) from None
    if "classes" in data:
        classes = data["classes"]
        classes = [classes] if isinstance(classes, int) else classes
        if not isinstance(classes, list) or not all(isinstance(c, int) for c in classes):
            raise ConfigError("classes", "expected a list of integers")
        kwargs["classes"] = tuple(classes)
    if "target_mode" in data:
        try:
            kwargs["target_mode"] = TargetMode(str(data["target_mode"]).lower())
        except ValueError:
            raise ConfigError("target_mode", "expected hedged, plain or best") from None
    for key in ("tolerance", "vector_tolerance"):
        if key in data:
            if not isinstance(data[key], (int, float)) or isinstance(data[key], bool):
                raise ConfigError(key, "expected a number")
            kwargs[key] = float(data[key])
    if "fmt_tilt" in data:
        kwargs["fmt_tilt"] = str(data["fmt_tilt"]).lower()
    if "format" in data:
        kwargs["output_format"] = str(data["format"]).lower()
    return ExperimentConfig(**kwargs)


def load_config(source: "str | Path | None" = None) -> ExperimentConfig:
    """Load from a file path or inline config text; ``None`` gives the defaults."""
    if source is None:
        return ExperimentConfig()
    if isinstance(source, str) and not source.strip():
        text = ""
    elif isinstance(source, Path) or ("\n" not in source and "=" not in source):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError("<document>", f"parse failure: {exc}") from None
    nested = [k for k, v in data.items() if isinstance(v, dict)]
    if nested:
        raise ConfigError(nested[0], "config must be flat; tables are not allowed")
    return config_from_mapping(data)
