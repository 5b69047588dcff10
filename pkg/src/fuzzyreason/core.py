"""Discrete fuzzy sets, hedges and the implication/t-norm operator families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

__all__ = [
    "MembershipError",
    "UniverseMismatchError",
    "DiscreteFuzzySet",
    "OperatorFamily",
    "ZADEH",
    "LUKASIEWICZ",
    "GOEDEL",
    "R0",
    "GOGUEN",
    "FAMILIES",
    "RESIDUAL_FAMILIES",
    "get_family",
    "implies",
    "tnorm",
    "complement",
    "power_hedge",
    "intersection",
    "is_disjoint",
]


class MembershipError(ValueError):
    """A degree or membership vector falls outside [0, 1]."""


class UniverseMismatchError(ValueError):
    """Two fuzzy sets live on universes of different size."""


def _check_degree(value: float, name: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise MembershipError(f"{name}={value!r}: degree out of range [0, 1]")
    return value


class DiscreteFuzzySet:
    """Membership vector over the anonymous universe ``0 .. r-1``.

    Instances are immutable; the backing array is read-only. Equality is exact
    elementwise equality, use :meth:`allclose` for tolerant comparisons.
    """

    __slots__ = ("_mu",)

    def __init__(self, memberships: Iterable[float]):
        mu = np.array(list(memberships) if not isinstance(memberships, np.ndarray) else memberships,
                      dtype=float).reshape(-1)
        if mu.size == 0:
            raise MembershipError("a fuzzy set needs at least one universe point")
        if not np.all(np.isfinite(mu)) or np.any(mu < 0.0) or np.any(mu > 1.0):
            raise MembershipError(f"membership out of range [0, 1]: {mu.tolist()}")
        mu.setflags(write=False)
        self._mu = mu

    @classmethod
    def zeros(cls, size: int) -> "DiscreteFuzzySet":
        return cls(np.zeros(size))

    @property
    def memberships(self) -> np.ndarray:
        return self._mu

    @property
    def universe_size(self) -> int:
        return int(self._mu.size)

    def __len__(self) -> int:
        return self.universe_size

    def __iter__(self) -> Iterator[float]:
        return iter(self._mu.tolist())

    def __getitem__(self, k: int) -> float:
        return float(self._mu[k])

    def __array__(self, dtype=None, copy=None):
        return self._mu if dtype is None else self._mu.astype(dtype)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiscreteFuzzySet):
            return NotImplemented
        return self.universe_size == other.universe_size and bool(np.array_equal(self._mu, other._mu))

    def __hash__(self) -> int:
        return hash(self._mu.tobytes())

    def __repr__(self) -> str:
        return f"DiscreteFuzzySet({[round(v, 4) for v in self._mu.tolist()]})"

    def tolist(self) -> list[float]:
        return self._mu.tolist()

    def is_normal(self) -> bool:
        return bool(np.any(self._mu == 1.0))

    def check_comparable(self, other: "DiscreteFuzzySet") -> None:
        if self.universe_size != other.universe_size:
            raise UniverseMismatchError(
                f"universe sizes differ: {self.universe_size} != {other.universe_size}"
            )

    def allclose(self, other: "DiscreteFuzzySet | Iterable[float]", atol: float = 5e-3) -> bool:
        other = as_fuzzy_set(other)
        self.check_comparable(other)
        return bool(np.all(np.abs(self._mu - other._mu) <= atol))


def as_fuzzy_set(value: "DiscreteFuzzySet | Iterable[float]") -> DiscreteFuzzySet:
    return value if isinstance(value, DiscreteFuzzySet) else DiscreteFuzzySet(value)


# Operator kernels work elementwise on float arrays (0-d arrays included).

def _zadeh_imp(a, b):
    return np.maximum(1.0 - a, np.minimum(a, b))


def _luk_imp(a, b):
    return np.where(a <= b, 1.0, 1.0 - a + b)


def _luk_tnorm(a, b):
    # lo - (1 - hi) rather than a + b - 1 keeps T(a, 1) = T(1, a) = a exact in floats
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    return np.maximum(0.0, lo - (1.0 - hi))


def _goedel_imp(a, b):
    return np.where(a <= b, 1.0, b)


def _r0_imp(a, b):
    return np.where(a <= b, 1.0, np.maximum(1.0 - a, b))


def _r0_tnorm(a, b):
    return np.where(a + b > 1.0, np.minimum(a, b), 0.0)


def _goguen_imp(a, b):
    a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    # a <= b covers a == 0, so the quotient is only formed for a > b >= 0
    quotient = np.divide(b, a, out=np.ones_like(a), where=a > b)
    return np.where(a <= b, 1.0, quotient)


def _product(a, b):
    return a * b


@dataclass(frozen=True)
class OperatorFamily:
    """A named implication paired with the t-norm used to compose with it."""

    name: str
    implication: Callable
    tnorm: Callable
    residual: bool

    def __repr__(self) -> str:
        return f"OperatorFamily({self.name})"


# Zadeh's implication has no residual t-norm; min gives classical max-min CRI.
ZADEH = OperatorFamily("Zadeh", _zadeh_imp, np.minimum, residual=False)
LUKASIEWICZ = OperatorFamily("Lukasiewicz", _luk_imp, _luk_tnorm, residual=True)
GOEDEL = OperatorFamily("Goedel", _goedel_imp, np.minimum, residual=True)
R0 = OperatorFamily("R0", _r0_imp, _r0_tnorm, residual=True)
GOGUEN = OperatorFamily("Goguen", _goguen_imp, _product, residual=True)

FAMILIES: dict[str, OperatorFamily] = {
    f.name: f for f in (ZADEH, LUKASIEWICZ, GOEDEL, R0, GOGUEN)
}
RESIDUAL_FAMILIES: tuple[OperatorFamily, ...] = (LUKASIEWICZ, GOEDEL, R0, GOGUEN)

_ALIASES = {
    "zadeh": ZADEH, "z": ZADEH, "rz": ZADEH,
    "lukasiewicz": LUKASIEWICZ, "łukasiewicz": LUKASIEWICZ, "l": LUKASIEWICZ,
    "goedel": GOEDEL, "godel": GOEDEL, "gödel": GOEDEL, "g": GOEDEL,
    "r0": R0, "r_0": R0,
    "goguen": GOGUEN, "gougen": GOGUEN, "go": GOGUEN, "product": GOGUEN,
}


def get_family(name: "str | OperatorFamily") -> OperatorFamily:
    if isinstance(name, OperatorFamily):
        return name
    try:
        return _ALIASES[name.strip().lower()]
    except KeyError:
        raise KeyError(f"unknown operator family {name!r}; expected one of {sorted(FAMILIES)}") from None


def implies(family: "OperatorFamily | str", a: float, b: float) -> float:
    family = get_family(family)
    a, b = _check_degree(a, "a"), _check_degree(b, "b")
    return float(family.implication(np.float64(a), np.float64(b)))


def tnorm(family: "OperatorFamily | str", a: float, b: float) -> float:
    family = get_family(family)
    a, b = _check_degree(a, "a"), _check_degree(b, "b")
    return float(family.tnorm(np.float64(a), np.float64(b)))


def complement(s: DiscreteFuzzySet) -> DiscreteFuzzySet:
    """Standard negation ``1 - s``."""
    return DiscreteFuzzySet(1.0 - as_fuzzy_set(s).memberships)


def power_hedge(s: DiscreteFuzzySet, p: float) -> DiscreteFuzzySet:
    """``very`` is ``p=2``, ``more or less`` is ``p=0.5``."""
    if not p > 0:
        raise ValueError(f"hedge exponent must be positive, got {p!r}")
    mu = as_fuzzy_set(s).memberships
    return DiscreteFuzzySet(mu if p == 1 else np.power(mu, p))


def intersection(s: DiscreteFuzzySet, t: DiscreteFuzzySet) -> DiscreteFuzzySet:
    s, t = as_fuzzy_set(s), as_fuzzy_set(t)
    s.check_comparable(t)
    return DiscreteFuzzySet(np.minimum(s.memberships, t.memberships))


def is_disjoint(s: DiscreteFuzzySet, t: DiscreteFuzzySet) -> bool:
    return not np.any(intersection(s, t).memberships > 0.0)
