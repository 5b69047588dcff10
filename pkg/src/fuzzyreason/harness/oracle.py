"""Independent recomputation of every cell with plain scalar loops.

Nothing here touches numpy or the vectorised kernels: operators are written
out as scalar closed forms, premises and targets are rebuilt from the case
table, and compositions are nested ``for`` loops. ``oracle_check`` compares
the implementation against this route and the route against the published
fixtures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..evaluation import TargetMode
from .config import ExperimentConfig
from .golden import ERRATUM, GOLDEN, VERIFIED, GoldenCell, parse_vector, printed_match
from .runner import Report, run_suite

MATCHES = "matches-paper"
ERRATUM_LABEL = "paper-erratum"
BUG = "implementation-bug"

Vector = list[float]


def _imp(family: str, a: float, b: float) -> float:
    # integer literals keep these generic, so Fraction inputs stay exact
    if family == "Zadeh":
        return max(1 - a, min(a, b))
    if a <= b:
        return 1
    if family == "Lukasiewicz":
        return 1 - a + b
    if family == "Goedel":
        return b
    if family == "R0":
        return max(1 - a, b)
    if family == "Goguen":
        return b / a
    raise KeyError(family)


def _tn(family: str, a: float, b: float) -> float:
    if family in ("Zadeh", "Goedel"):
        return min(a, b)
    if family == "Lukasiewicz":
        return max(0, min(a, b) - (1 - max(a, b)))
    if family == "R0":
        return min(a, b) if a + b > 1 else 0
    if family == "Goguen":
        return a * b
    raise KeyError(family)


scalar_implication = _imp
scalar_tnorm = _tn


def _neg(v: Vector) -> Vector:
    return [1.0 - t for t in v]


def _pow(v: Vector, p: float) -> Vector:
    return [t ** p for t in v]


def oracle_premise(a: Vector, b: Vector, case: int, tilts: dict) -> Vector:
    table = {
        1: lambda: a, 2: lambda: _pow(a, 2), 3: lambda: _pow(a, 0.5), 4: lambda: _neg(a),
        5: lambda: tilts["fmp_premise"],
        6: lambda: _neg(b), 7: lambda: _neg(_pow(b, 2)), 8: lambda: _neg(_pow(b, 0.5)), 9: lambda: b,
        10: lambda: tilts["fmt_premise"],
    }
    return list(table[case]())


def oracle_targets(a: Vector, b: Vector, case: int, tilts: dict) -> tuple[Vector, Vector]:
    """``(hedged, plain)`` targets."""
    hedged = {
        1: b, 2: _pow(b, 2), 3: _pow(b, 0.5), 4: _neg(b), 5: tilts.get("fmp_target"),
        6: _neg(a), 7: _neg(_pow(a, 2)), 8: _neg(_pow(a, 0.5)), 9: a, 10: tilts.get("fmt_target"),
    }[case]
    plain = b if case in (2, 3) else _neg(a) if case in (7, 8) else hedged
    return list(hedged), list(plain)


def oracle_rpcf(c: Vector, t: Vector) -> float:
    total = 0.0
    for x, y in zip(c, t):
        total += abs(x - y)
    return (1.0 - total / len(t)) * 100.0


def cri_fmp(a, b, p, fam) -> Vector:
    out = []
    for y in range(len(b)):
        best = 0.0
        for x in range(len(a)):
            best = max(best, _tn(fam, p[x], _imp(fam, a[x], b[y])))
        out.append(best)
    return out


def cri_fmt(a, b, p, fam) -> Vector:
    out = []
    for x in range(len(a)):
        best = 0.0
        for y in range(len(b)):
            best = max(best, _tn(fam, p[y], _imp(fam, a[x], b[y])))
        out.append(best)
    return out


def transposed_cri_fmt(a, b, p, fam) -> Vector:
    """``max_y B*(y) (x) (A(y) -> B(x))``: reproduces the printed CRI FMT columns.

    Only meaningful when both universes have the same size.
    """
    out = []
    for x in range(len(a)):
        best = 0.0
        for y in range(len(b)):
            best = max(best, _tn(fam, p[y], _imp(fam, a[y], b[x])))
        out.append(best)
    return out


def tip_fmt(a, b, p, fam) -> Vector:
    out = []
    for x in range(len(a)):
        worst = 1.0
        for y in range(len(b)):
            worst = min(worst, _imp(fam, _imp(fam, a[x], b[y]), p[y]))
        out.append(worst)
    return out


def qip_fmp(a, b, p, fam) -> Vector:
    out = []
    for y in range(len(b)):
        best = 0.0
        for x in range(len(a)):
            lead = _tn(fam, p[x], _imp(fam, p[x], a[x]))
            best = max(best, _tn(fam, lead, _imp(fam, a[x], b[y])))
        out.append(best)
    return out


def qip_fmt(a, b, p, fam) -> Vector:
    out = []
    for x in range(len(a)):
        best = 0.0
        for y in range(len(b)):
            lead = _tn(fam, a[x], _imp(fam, a[x], b[y]))
            best = max(best, _tn(fam, lead, _imp(fam, b[y], p[y])))
        out.append(best)
    return out


def _dm(u: Vector, v: Vector) -> float:
    return math.sqrt(sum((s - t) ** 2 for s, t in zip(u, v)) / len(u))


def aars(source: Vector, p: Vector, reference: Vector, more_or_less: bool) -> Vector:
    s = 1.0 / (1.0 + _dm(p, reference))
    return [min(1.0, t / s) if more_or_less else t * s for t in source]


def dmm(p: Vector, antecedent: Vector, base: Vector, three_valued: bool) -> Vector:
    if all(min(s, t) == 0.0 for s, t in zip(p, antecedent)):
        return [0.0] * len(base)
    dm = _dm(p, antecedent)
    quasi = []
    for k in range(len(base)):
        d = p[k] - antecedent[k]
        sign = 1.0 if d > 0 else -1.0 if d < 0 else (0.0 if three_valued else 1.0)
        quasi.append(base[k] + dm * sign)
    hi, lo = max(quasi), min(quasi)
    if hi == lo:
        return [0.0] * len(base)
    return [(q - lo) / (hi - lo) for q in quasi]


def _dmm_base(a, b, case, tilts) -> Vector:
    if case in (1, 2, 3):
        return b
    if case == 4:
        return _neg(b)
    if case in (6, 7, 8):
        return _neg(a)
    if case == 9:
        return a
    return tilts["fmp_target"] if case == 5 else tilts["fmt_target"]


def oracle_conclusion(method: str, option: str, a: Vector, b: Vector, case: int, tilts: dict) -> Vector:
    p = oracle_premise(a, b, case, tilts)
    fmt = case > 5
    if method in ("CRI", "TIP"):
        if not fmt:
            return cri_fmp(a, b, p, option)
        return (cri_fmt if method == "CRI" else tip_fmt)(a, b, p, option)
    if method == "QIP":
        return (qip_fmt if fmt else qip_fmp)(a, b, p, option)
    if method == "AARS":
        mol = option == "more-or-less"
        return aars(a, p, b, mol) if fmt else aars(b, p, a, mol)
    three = option == "P(+1,0,-1)"
    return dmm(p, _neg(b) if fmt else a, _dmm_base(a, b, case, tilts), three)


def tilts_for(config: ExperimentConfig) -> dict:
    def vec(v):
        return None if v is None else list(v)

    tilts = {
        "fmp_premise": vec(config.tilted_fmp_premise),
        "fmp_target": vec(config.tilted_fmp_target),
        "fmt_premise": vec(config.tilted_fmt_premise),
        "fmt_target": vec(config.tilted_fmt_target),
    }
    if config.fmt_tilt == "negated" and tilts["fmt_premise"] is not None:
        tilts["fmt_premise"] = _neg(tilts["fmt_premise"])
        tilts["fmt_target"] = _neg(tilts["fmt_target"])
    return tilts


def oracle_score(config: ExperimentConfig, conclusion: Vector, case: int) -> tuple[float, Vector]:
    a, b = list(config.antecedent), list(config.consequent)
    hedged, plain = oracle_targets(a, b, case, tilts_for(config))
    if config.target_mode is TargetMode.HEDGED:
        return oracle_rpcf(conclusion, hedged), hedged
    if config.target_mode is TargetMode.PLAIN:
        return oracle_rpcf(conclusion, plain), plain
    scored = [(oracle_rpcf(conclusion, t), t) for t in (hedged, plain)]
    return max(scored, key=lambda st: st[0])


def oracle_cell(config: ExperimentConfig, label: str, case: int) -> tuple[Vector, float]:
    """Conclusion and score for one ``(variant label, case)`` through the scalar route."""
    method, option = label.split("-", 1)
    a, b = list(config.antecedent), list(config.consequent)
    conclusion = oracle_conclusion(method, option, a, b, case, tilts_for(config))
    return conclusion, oracle_score(config, conclusion, case)[0]


@dataclass(frozen=True)
class Discrepancy:
    verdict: str
    label: str
    class_id: Optional[int]
    case: Optional[int]
    quantity: str
    oracle: object
    reference: object
    delta: float
    note: str = ""

    def describe(self) -> str:
        where = f"case {self.case}" if self.case is not None else f"class {self.class_id}"
        return (f"{self.verdict:18s} {self.label:20s} {where:8s} {self.quantity:10s} "
                f"oracle={_fmt(self.oracle)} reference={_fmt(self.reference)} delta={self.delta:.4g}"
                + (f"  [{self.note}]" if self.note else ""))


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(f"{t:.4f}" for t in v) + "]"
    return f"{v:.4f}" if isinstance(v, float) else str(v)


# sup/inf compositions are exact max/min reductions and must agree bit-for-bit;
# DMM and AARS go through sqrt and division in a different order
_CLOSE = 1e-12


def _cross_check(config: ExperimentConfig, report: Report) -> tuple[list[Discrepancy], dict]:
    a, b = list(config.antecedent), list(config.consequent)
    tilts = tilts_for(config)
    bugs: list[Discrepancy] = []
    oracle_cells: dict[tuple[str, int], tuple[Vector, float]] = {}
    for row in report.rows:
        expected = oracle_conclusion(row.method, row.family, a, b, row.case, tilts)
        score, _ = oracle_score(config, expected, row.case)
        oracle_cells[(row.label, row.case)] = (expected, score)
        got = row.conclusion.tolist()
        exact = row.method in ("CRI", "TIP", "QIP")
        delta = max(abs(s - t) for s, t in zip(got, expected))
        if (got != expected) if exact else delta > _CLOSE:
            bugs.append(Discrepancy(BUG, row.label, None, row.case, "conclusion", got, expected, delta,
                                    "implementation and oracle conclusions differ"))
        if abs(row.rpcf - score) > _CLOSE:
            bugs.append(Discrepancy(BUG, row.label, None, row.case, "rpcf", row.rpcf, score,
                                    abs(row.rpcf - score), "implementation and oracle scores differ"))
    return bugs, oracle_cells


def _oracle_aggregate(cells: dict, label: str, class_id: int, quantity: str) -> Optional[float]:
    from ..evaluation import class_cases

    fmp_cases, fmt_cases = class_cases(class_id)
    try:
        fmp = sum(cells[(label, c)][1] for c in fmp_cases) / len(fmp_cases)
        fmt = sum(cells[(label, c)][1] for c in fmt_cases) / len(fmt_cases)
    except KeyError:
        return None
    return {"fmp": fmp, "fmt": fmt, "overall": (fmp + fmt) / 2.0}[quantity]


def fixtures_apply(config: ExperimentConfig) -> bool:
    """Published values only describe the default rule scored against hedged targets."""
    return (config.uses_default_rule and config.target_mode is TargetMode.HEDGED
            and config.fmt_tilt == "negated"
            and tuple(config.tilted_fmp_premise) == (1.0, 0.2, 0.0, 0.0, 0.0)
            and tuple(config.tilted_fmt_premise) == (0.0, 0.0, 0.0, 0.2, 1.0))


def _transposed_note(config: ExperimentConfig, cell: GoldenCell, tolerance: float) -> str:
    """Confirm the transposed-relation reading against the printed CRI FMT value."""
    fam = cell.label.split("-", 1)[1]
    a, b = list(config.antecedent), list(config.consequent)
    tilts = tilts_for(config)

    def score(case):
        p = oracle_premise(a, b, case, tilts)
        hedged, _ = oracle_targets(a, b, case, tilts)
        return transposed_cri_fmt(a, b, p, fam), oracle_rpcf(transposed_cri_fmt(a, b, p, fam), hedged)

    fmt_cases = (6, 7, 8, 9) if cell.class_id == 1 else (6, 7, 8, 10)
    if cell.case is not None:
        vec, value = score(cell.case)
        ok = (max(abs(s - t) for s, t in zip(vec, cell.value())) <= config.vector_tolerance
              if cell.is_vector else printed_match(value, cell.printed, tolerance))
    elif cell.quantity == "fmt":
        ok = printed_match(sum(score(c)[1] for c in fmt_cases) / 4, cell.printed, max(tolerance, cell.band))
    else:
        return ""
    return "transposed relation reproduces the printed value" if ok else ""


def _compare_fixture(config: ExperimentConfig, cell: GoldenCell, cells: dict, tolerance: float):
    if cell.case is not None:
        if (cell.label, cell.case) not in cells:
            return None
        vec, score = cells[(cell.label, cell.case)]
        if cell.is_vector:
            printed = cell.value()
            delta = max(abs(s - t) for s, t in zip(vec, printed))
            ok = delta <= config.vector_tolerance
            oracle_value = vec
        else:
            delta = abs(score - cell.value())
            ok = printed_match(score, cell.printed, max(tolerance, cell.band))
            oracle_value = score
    else:
        oracle_value = _oracle_aggregate(cells, cell.label, cell.class_id, cell.quantity)
        if oracle_value is None:
            return None
        delta = abs(oracle_value - cell.value())
        ok = printed_match(oracle_value, cell.printed, max(tolerance, cell.band))
    if ok:
        verdict, note = MATCHES, ""
    elif cell.status == VERIFIED:
        verdict, note = BUG, "disagrees with a value the oracle previously confirmed"
    else:
        verdict, note = ERRATUM_LABEL, f"{cell.status}: {cell.note}"
        if "transposed" in cell.note and cell.quantity != "overall":
            extra = _transposed_note(config, cell, tolerance)
            note = f"{note}; {extra}" if extra else note
    return Discrepancy(verdict, cell.label, cell.class_id, cell.case, cell.quantity,
                       oracle_value, cell.value(), delta, note)


def oracle_check(config: ExperimentConfig, tolerance: Optional[float] = None) -> list[Discrepancy]:
    """Audit a suite through the independent route.

    Always cross-checks every implementation cell against the oracle
    (mismatches become ``implementation-bug`` records). When the config is the
    published default, also emits one record per published cell, labelled
    ``matches-paper``, ``paper-erratum`` or ``implementation-bug``.
    """
    tolerance = config.tolerance if tolerance is None else tolerance
    report = run_suite(config)
    records, cells = _cross_check(config, report)
    if not fixtures_apply(config):
        return records
    labels = set(report.labels)
    for cell in GOLDEN:
        if cell.label not in labels or cell.class_id not in config.classes:
            continue
        record = _compare_fixture(config, cell, cells, tolerance)
        if record is not None:
            records.append(record)
    return records


def has_bugs(records: list[Discrepancy]) -> bool:
    return any(r.verdict == BUG for r in records)


__all__ = [
    "MATCHES", "ERRATUM_LABEL", "BUG", "Discrepancy", "oracle_check", "has_bugs",
    "oracle_cell", "tilts_for", "oracle_conclusion", "oracle_premise", "oracle_targets",
    "oracle_rpcf", "oracle_score", "scalar_implication", "scalar_tnorm",
    "transposed_cri_fmt", "fixtures_apply", "parse_vector",
]
