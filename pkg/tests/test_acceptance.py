"""Acceptance criteria 1-8, one pass/fail line each.

Every published figure is checked on two routes: the vectorised
implementation and the scalar-loop oracle. Both must meet the bar. Printed
figures are strings so their precision is known; ``printed_match`` accepts an
absolute match within the tolerance, or for one-decimal figures the
two-then-one-decimal rounding the tables use.
"""

import itertools
import sys
from fractions import Fraction

import numpy as np
import pytest

from fuzzyreason.core import FAMILIES, RESIDUAL_FAMILIES, implies, tnorm
from fuzzyreason.evaluation import rpcf_single
from fuzzyreason.harness import load_config, oracle_check, run_suite
from fuzzyreason.harness.golden import GOLDEN, parse_vector, printed_match
from fuzzyreason.harness.oracle import (
    BUG,
    ERRATUM_LABEL,
    oracle_cell,
    scalar_implication,
    scalar_tnorm,
)
from fuzzyreason.inference import DmmBase, FuzzyRule, SignForm, dmm_fmp, euclid_dm, qip_fmp, qip_fmt

RESIDUAL = [f.name for f in RESIDUAL_FAMILIES]
TOL = 0.05
VEC_TOL = 5e-3
CLASS2_TOL = 0.5
DMM_FMP_TOL = 0.4
DMM3, DMM2 = "DMM-P(+1,0,-1)", "DMM-P(+1,-1)"


class Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.results: list[tuple[str, bool, str]] = []

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.results.append((name, bool(ok), detail))

    def failures(self) -> list[str]:
        return [f"{name} ({detail})" if detail else name for name, ok, detail in self.results if not ok]

    @property
    def ok(self) -> bool:
        return bool(self.results) and not self.failures()

    def line(self) -> str:
        passed = sum(ok for _, ok, _ in self.results)
        head = (f"criterion {self.number} {'PASS' if self.ok else 'FAIL'}  {self.title} "
                f"({passed}/{len(self.results)} checks)")
        failed = self.failures()
        if not failed:
            return head
        shown = "; ".join(failed[:3]) + (f"; and {len(failed) - 3} more" if len(failed) > 3 else "")
        return f"{head}; failing: {shown}"


@pytest.fixture(scope="module")
def config():
    return load_config().replace(classes=(1, 2))


@pytest.fixture(scope="module")
def report(config):
    return run_suite(config)


@pytest.fixture(scope="module")
def records(config):
    return oracle_check(config)


def _score(crit, config, report, label, case, printed, tol=TOL):
    impl = report.row(label, case).rpcf
    _, orc = oracle_cell(config, label, case)
    crit.check(f"{label} case {case} rpcf", printed_match(impl, printed, tol) and printed_match(orc, printed, tol),
               f"implementation {impl:.4f}, oracle {orc:.4f}, printed {printed}")


def _oracle_aggregate(config, label, class_id, quantity):
    cases = {1: ((1, 2, 3, 4), (6, 7, 8, 9)), 2: ((1, 2, 3, 5), (6, 7, 8, 10))}[class_id]
    fmp, fmt = (sum(oracle_cell(config, label, c)[1] for c in group) / 4 for group in cases)
    return {"fmp": fmp, "fmt": fmt, "overall": (fmp + fmt) / 2}[quantity]


def _aggregate(crit, config, report, label, quantity, printed, tol=TOL, class_id=1):
    agg = report.aggregate(label, class_id)
    impl = {"fmp": agg.fmp_aggregate, "fmt": agg.fmt_aggregate, "overall": agg.overall}[quantity]
    orc = _oracle_aggregate(config, label, class_id, quantity)
    crit.check(f"{label} class {class_id} {quantity}",
               printed_match(impl, printed, tol) and printed_match(orc, printed, tol),
               f"implementation {impl:.4f}, oracle {orc:.4f}, printed {printed}")


def _vector(crit, config, report, label, case, printed):
    want = parse_vector(printed) if isinstance(printed, str) else printed
    impl = report.row(label, case).conclusion.tolist()
    orc, _ = oracle_cell(config, label, case)
    gap = max(max(abs(s - t) for s, t in zip(v, want)) for v in (impl, orc))
    crit.check(f"{label} case {case} conclusion", gap <= VEC_TOL,
               f"max gap {gap:.4f} against {list(want)}")


def _finish(crit, record_criterion):
    record_criterion(crit.number, crit.line())
    print(crit.line())
    assert crit.ok, crit.line()


def test_criterion_1_qip_reproduction(config, report, records, record_criterion):
    crit = Criterion(1, "QIP reproduction")
    for fam in RESIDUAL:
        label = f"QIP-{fam}"
        for case, printed in zip((1, 2, 3, 4), ("100", "95.8", "95.1", "26")):
            _score(crit, config, report, label, case, printed)
        _aggregate(crit, config, report, label, "fmp", "79.21")
        for case, printed in ((6, "26"), (7, "21.8"), (9, "100")):
            _score(crit, config, report, label, case, printed)
        impl8 = report.row(label, 8).rpcf
        orc8 = oracle_cell(config, label, 8)[1]
        crit.check(f"{label} case 8 rpcf is the oracle value", abs(impl8 - orc8) <= 1e-12 and abs(orc8 - 30.95) <= TOL,
                   f"implementation {impl8:.4f}, oracle {orc8:.4f}")
        _aggregate(crit, config, report, label, "fmt", "44.69")
    logged = [r for r in records if r.label == "QIP-Lukasiewicz" and r.class_id == 1 and r.verdict == ERRATUM_LABEL]
    crit.check("check logs the 42.95 case 8 erratum",
               any(r.case == 8 and r.quantity == "rpcf" and r.reference == 42.95 for r in logged))
    crit.check("check logs the 47.69 FMT aggregate erratum",
               any(r.quantity == "fmt" and r.reference == 47.69 for r in logged))
    _finish(crit, record_criterion)


def test_criterion_2_cri_reproduction(config, report, record_criterion):
    crit = Criterion(2, "CRI reproduction")
    for fam, printed in zip(("Lukasiewicz", "Goedel", "R0", "Goguen"), ("88.73", "92.45", "84.23", "92.45")):
        _aggregate(crit, config, report, f"CRI-{fam}", "fmp", printed)
    for fam in RESIDUAL:
        _aggregate(crit, config, report, f"CRI-{fam}", "fmt", "61.81")
    for cell in GOLDEN:
        if cell.table == "cri" and cell.class_id == 1 and cell.is_vector and cell.label.split("-", 1)[1] in RESIDUAL:
            _vector(crit, config, report, cell.label, cell.case, cell.printed)
    _finish(crit, record_criterion)


def test_criterion_3_tip_reproduction(config, report, record_criterion):
    crit = Criterion(3, "TIP reproduction")
    for fam in RESIDUAL:
        same = all(report.row(f"TIP-{fam}", c).conclusion == report.row(f"CRI-{fam}", c).conclusion
                   for c in (1, 2, 3, 4, 5))
        crit.check(f"TIP-{fam} FMP equals CRI-{fam} FMP", same)
        for case, printed in zip((6, 7, 8, 9), ("26", "21.8", "30.95", "100")):
            _score(crit, config, report, f"TIP-{fam}", case, printed)
        _aggregate(crit, config, report, f"TIP-{fam}", "fmt", "44.69")
    _finish(crit, record_criterion)


def test_criterion_4_aars_reproduction(config, report, record_criterion):
    crit = Criterion(4, "AARS reproduction")
    ml, red = "AARS-more-or-less", "AARS-reduction"
    _aggregate(crit, config, report, ml, "fmp", "77.10")
    _aggregate(crit, config, report, red, "fmp", "76.43")
    _aggregate(crit, config, report, ml, "fmt", "37.14")
    _aggregate(crit, config, report, red, "fmt", "39.2")
    _vector(crit, config, report, ml, 6, "[1, 0.574, 0, 0, 0]")
    _vector(crit, config, report, red, 6, "[0.523, 0.157, 0, 0, 0]")
    _finish(crit, record_criterion)


def test_criterion_5_dmm_reproduction(config, report, records, record_criterion):
    crit = Criterion(5, "DMM reproduction")
    _vector(crit, config, report, DMM3, 2, "[0.0859, 0, 0.0859, 0.36, 1]")
    _score(crit, config, report, DMM3, 2, "91.16")
    _score(crit, config, report, DMM3, 3, "92.83")
    _vector(crit, config, report, DMM3, 6, "[0, 0.7, 1, 1, 1]")
    _vector(crit, config, report, DMM3, 7, "[0, 0.64, 0.914, 1, 0.914]")
    _vector(crit, config, report, DMM3, 8, "[0, 0.7, 1, 0.889, 1]")
    _aggregate(crit, config, report, DMM3, "fmp", "88.06", tol=DMM_FMP_TOL)
    for label in (DMM3, DMM2):
        impl = report.aggregate(label, 1).fmt_aggregate
        orc = _oracle_aggregate(config, label, 1, "fmt")
        crit.check(f"{label} FMT aggregate equals the oracle", abs(impl - orc) <= 1e-12,
                   f"implementation {impl:.4f}, oracle {orc:.4f}")
        crit.check(f"check logs the {label} FMT aggregate",
                   any(r.label == label and r.class_id == 1 and r.quantity == "fmt" for r in records))
    _finish(crit, record_criterion)


def test_criterion_6_class1_ranking(config, report, record_criterion):
    crit = Criterion(6, "class 1 ranking and CRI overall rows")
    order = ("DMM", "CRI", "TIP", "QIP", "AARS")
    overall = {m: [report.aggregate(lab, 1).overall for lab in report.labels if lab.startswith(m + "-")]
               for m in order}
    for hi, lo in zip(order, order[1:]):
        # every variant of the higher method beats every variant of the lower one
        crit.check(f"{hi} above {lo}", min(overall[hi]) > max(overall[lo]),
                   f"{hi} min {min(overall[hi]):.3f}, {lo} max {max(overall[lo]):.3f}")
    for fam, printed in (("Goedel", "77.131"), ("Goguen", "77.131"), ("Lukasiewicz", "75.273"), ("R0", "73.023")):
        _aggregate(crit, config, report, f"CRI-{fam}", "overall", printed)
    _finish(crit, record_criterion)


def test_criterion_7_class2_aggregates(config, report, record_criterion):
    crit = Criterion(7, "class 2 aggregates")
    for label, printed in (("CRI-Goedel", "86.38"), ("QIP-Lukasiewicz", "61.45"),
                           ("AARS-more-or-less", "56.59"), (DMM3, "95.02")):
        _aggregate(crit, config, report, label, "overall", printed, tol=CLASS2_TOL, class_id=2)
    _finish(crit, record_criterion)


def test_criterion_8_property_suites(config, records, record_criterion):
    crit = Criterion(8, "property suites")
    tenths = [Fraction(k, 10) for k in range(11)]
    for fam in RESIDUAL_FAMILIES:
        # exact rationals through the scalar closed forms, no slack
        exact_bad = sum((scalar_tnorm(fam.name, a, b) <= c) != (a <= scalar_implication(fam.name, b, c))
                        for a, b, c in itertools.product(tenths, repeat=3))
        crit.check(f"{fam.name} residuation on the 11^3 grid in exact arithmetic", exact_bad == 0,
                   f"{exact_bad} violations")
        # float kernels: 0.1 etc. are not representable, so allow rounding-level slack
        grid = [float(t) for t in tenths]
        gaps = [max(tnorm(fam, a, b) - c, a - implies(fam, b, c))
                for a, b, c in itertools.product(grid, repeat=3)
                if (tnorm(fam, a, b) <= c) != (a <= implies(fam, b, c))]
        crit.check(f"{fam.name} residuation on the 11^3 grid in float kernels",
                   all(g <= 1e-12 for g in gaps),
                   f"{len(gaps)} raw disagreements, largest gap {max(gaps, default=0):.2e}")
    rule = FuzzyRule([1, 0.3, 0, 0, 0], [0, 0, 0, 0.3, 1])
    for fam in RESIDUAL_FAMILIES:
        crit.check(f"QIP-{fam.name} recoverability is exact",
                   qip_fmp(rule, rule.antecedent, fam).conclusion == rule.consequent
                   and qip_fmt(rule, rule.consequent, fam).conclusion == rule.antecedent)
    rng = np.random.default_rng(2024)
    base = rule.consequent.memberships
    exact = measured = 0
    for _ in range(1000):
        premise = rng.random(5)
        trace = dmm_fmp(rule, premise, DmmBase.PLAIN, SignForm.TWO_VALUED).intermediates
        dist = euclid_dm(premise, rule.antecedent)
        # scaling by +-1 is exact, so each component moves by exactly DM
        exact += (np.all(np.abs(trace.sign) == 1) and trace.distance == dist
                  and np.array_equal(trace.quasi, base + dist * trace.sign))
        shift = trace.quasi - base
        measured += abs(np.sqrt(np.mean(shift ** 2)) - dist) <= 1e-12 * max(dist, 1e-300)
    crit.check("two-valued DMM shifts every component by exactly DM", exact == 1000, f"{exact}/1000")
    crit.check("two-valued DMM measured shift equals DM to 1e-12", measured == 1000, f"{measured}/1000")
    in_range = iff = 0
    for k in range(1000):
        c = rng.random(5)
        t = c.copy() if k % 3 == 0 else rng.random(5)
        score = rpcf_single(c, t)
        in_range += 0.0 <= score <= 100.0
        iff += (score == 100.0) == bool(np.array_equal(c, t))
    crit.check("RPCF within [0, 100]", in_range == 1000, f"{in_range}/1000")
    crit.check("RPCF is 100 exactly on equal pairs", iff == 1000, f"{iff}/1000")
    bugs = [r for r in records if r.verdict == BUG]
    crit.check("check reports no implementation bugs", not bugs, f"{len(bugs)} bug records")
    _finish(crit, record_criterion)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
