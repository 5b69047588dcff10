"""Published reference values for the default rule, one record per printed cell.

Values are kept as the printed strings so rounding can be judged against the
digits actually shown. Each cell carries a status:

``verified``
    the independent oracle reproduces the printed value within tolerance.
``erratum``
    the oracle disagrees and the cause is identified (see ``note``).
``unreconstructable``
    the oracle disagrees and no reading of the method reproduces the value.

Regression tests assert the oracle-confirmed numbers; erratum and
unreconstructable cells are only reported by ``check``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Optional

VERIFIED = "verified"
ERRATUM = "erratum"
UNRECONSTRUCTABLE = "unreconstructable"

QUANTITIES = ("conclusion", "rpcf", "fmp", "fmt", "overall")

# Class 2 intermediates were never printed, so only aggregates exist and they
# are compared within a wider band.
CLASS2_BAND = 0.5
# the one-rule DMM walkthrough prints 87.73 for the same suite its table prints 88.06
DMM_FMP_BAND = 0.4


@dataclass(frozen=True)
class GoldenCell:
    table: str
    label: str
    class_id: int
    case: Optional[int]
    quantity: str
    printed: str
    status: str = VERIFIED
    note: str = ""
    band: float = 0.0

    @property
    def is_vector(self) -> bool:
        return self.quantity == "conclusion"

    def value(self):
        return parse_vector(self.printed) if self.is_vector else float(self.printed)


def parse_vector(text: str) -> tuple[float, ...]:
    """``"[0, 0.7 1, 0.778, 1]"`` -> floats; commas and blanks both separate."""
    return tuple(float(t) for t in re.findall(r"-?\d+(?:\.\d+)?", text))


def _decimals(printed: str) -> int:
    _, _, frac = printed.partition(".")
    return len(frac)


def printed_match(value: float, printed: str, tolerance: float) -> bool:
    """Whether ``value`` is consistent with the printed figure.

    Accepts a plain ``|value - printed| <= tolerance`` or, for figures shown
    with fewer than two decimals, the double rounding used by the tables
    (first to two decimals, then half-up to the shown precision), which is
    how 95.046 appears as 95.1.
    """
    p = float(printed)
    if abs(value - p) <= tolerance:
        return True
    d = _decimals(printed)
    if d >= 2:
        return False
    two = Decimal(repr(round(value, 2)))
    return two.quantize(Decimal(1).scaleb(-d), rounding=ROUND_HALF_UP) == Decimal(printed)


_CRI_FMT_NOTE = ("printed conclusions are those of the transposed relation "
                 "max_y B*(y) (x) (A(y) -> B(x)); the implemented composition uses A(x) -> B(y)")


def _cells() -> list[GoldenCell]:
    cells: list[GoldenCell] = []

    def add(table, label, case, quantity, printed, status=VERIFIED, note="", class_id=1, band=0.0):
        cells.append(GoldenCell(table, label, class_id, case, quantity, printed, status, note, band))

    residual = ("Lukasiewicz", "Goedel", "R0", "Goguen")

    # QIP, Class 1
    for fam in residual:
        lab = f"QIP-{fam}"
        for case, rpcf in zip((1, 2, 3), ("100", "95.8", "95.1")):
            add("qip", lab, case, "conclusion", "[0, 0, 0, 0.3, 1]")
            add("qip", lab, case, "rpcf", rpcf)
        add("qip", lab, 4, "conclusion", "[0, 0, 0, 0.3, 1]", ERRATUM,
            "printed vector scores 12; the oracle conclusion scores the printed 26")
        add("qip", lab, 4, "rpcf", "26")
        add("qip", lab, None, "fmp", "79.21")
        for case in (6, 7, 8):
            add("qip", lab, case, "conclusion", "[0.3, 0.3, 0, 0, 0]")
        add("qip", lab, 9, "conclusion", "[1, 0.3, 0, 0, 0]")
        add("qip", lab, 6, "rpcf", "26")
        add("qip", lab, 7, "rpcf", "21.8")
        add("qip", lab, 8, "rpcf", "42.95", ERRATUM,
            "the printed conclusion [0.3, 0.3, 0, 0, 0] scores 30.95, as the TIP table prints for it")
        add("qip", lab, 9, "rpcf", "100")
        add("qip", lab, None, "fmt", "47.69", ERRATUM, "follows from the Case 8 slip (42.95 for 30.95)")

    # CRI and TIP share their FMP half
    fmp_case3 = {
        "Lukasiewicz": ("[0.248, 0.248, 0.248, 0.548, 1]", "85.14"),
        "Goedel": ("[0, 0, 0, 0.548, 1]", "100"),
        "R0": ("[0.548, 0.548, 0.548, 0.548, 1]", "67.14"),
        "Goguen": ("[0, 0, 0, 0.548, 1]", "100"),
    }
    fmp_agg = {"Lukasiewicz": "88.73", "Goedel": "92.45", "R0": "84.23", "Goguen": "92.45"}
    for table in ("cri", "tip"):
        for fam in residual:
            lab = f"{table.upper()}-{fam}"
            for case, rpcf in zip((1, 2), ("100", "95.8")):
                add(table, lab, case, "conclusion", "[0, 0, 0, 0.3, 1]")
                add(table, lab, case, "rpcf", rpcf)
            vec, rpcf = fmp_case3[fam]
            add(table, lab, 3, "conclusion", vec)
            add(table, lab, 3, "rpcf", rpcf)
            add(table, lab, 4, "conclusion", "[1, 1, 1, 1, 1]")
            add(table, lab, 4, "rpcf", "74")
            add(table, lab, None, "fmp", fmp_agg[fam])

    for fam in residual:
        lab = f"CRI-{fam}"
        for case, rpcf in zip((6, 7, 8), ("74", "78.2", "69.05")):
            add("cri", lab, case, "conclusion", "[1, 1, 1, 1, 1]", ERRATUM, _CRI_FMT_NOTE)
            add("cri", lab, case, "rpcf", rpcf, ERRATUM, _CRI_FMT_NOTE)
        add("cri", lab, 9, "conclusion", "[1, 1, 1, 1, 1]")
        add("cri", lab, 9, "rpcf", "26")
        add("cri", lab, None, "fmt", "61.81", ERRATUM, _CRI_FMT_NOTE)

        lab = f"TIP-{fam}"
        for case, rpcf in zip((6, 7, 8), ("26", "21.8", "30.95")):
            add("tip", lab, case, "conclusion", "[0, 0, 0, 0, 0]")
            add("tip", lab, case, "rpcf", rpcf)
        add("tip", lab, 9, "conclusion", "[1, 0.3, 0, 0, 0]")
        add("tip", lab, 9, "rpcf", "100")
        add("tip", lab, None, "fmt", "44.69")

    # AARS
    aars = {
        "AARS-more-or-less": {
            1: ("[0, 0, 0, 0.3, 1]", "100"), 2: ("[0, 0, 0, 0.328, 1]", "95.24"),
            3: ("[0, 0, 0, 0.333, 1]", "95.71"), 4: ("[0, 0, 0, 0.574, 1]", "17.47"),
            6: ("[1, 0.574, 0, 0, 0]", "17.47"), 7: ("[1, 0.581, 0, 0, 0]", "13.41"),
            8: ("[1, 0.569, 0, 0, 0]", "17.66"), 9: ("[1, 0.3, 0, 0, 0]", "100"),
            "fmp": "77.10", "fmt": "37.14",
        },
        "AARS-reduction": {
            1: ("[0, 0, 0, 0.3, 1]", "100"), 2: ("[0, 0, 0, 0.274, 0.914]", "94.60"),
            3: ("[0, 0, 0, 0.27, 0.9]", "92.45"), 4: ("[0, 0, 0, 0.157, 0.523]", "18.68"),
            6: ("[0.523, 0.157, 0, 0, 0]", "18.68"), 7: ("[0.517, 0.155, 0, 0, 0]", "14.57"),
            8: ("[0.527, 0.158, 0, 0, 0]", "23.57"), 9: ("[1, 0.3, 0, 0, 0]", "100"),
            "fmp": "76.43", "fmt": "39.2",
        },
    }
    for lab, values in aars.items():
        for case in (1, 2, 3, 4, 6, 7, 8, 9):
            vec, rpcf = values[case]
            add("aars", lab, case, "conclusion", vec)
            add("aars", lab, case, "rpcf", rpcf)
        add("aars", lab, None, "fmp", values["fmp"])
        add("aars", lab, None, "fmt", values["fmt"])

    # DMM
    three, two = "DMM-P(+1,0,-1)", "DMM-P(+1,-1)"
    case9_vec = "no base, sign form or contrapositive reading reproduces the printed Case 9 conclusion"
    dmm = [
        (three, 1, "[0, 0, 0, 0.3, 1]", "100", VERIFIED, ""),
        (three, 2, "[0.086, 0, 0.086, 0.36, 1]", "91.16", VERIFIED, ""),
        (three, 3, "[0, 0.111, 0, 0.3, 1]", "92.83", VERIFIED, ""),
        (three, 4, "[0, 0.646, 0.646, 0.752, 1]", "68.25", ERRATUM,
         "printed vector scores 44.80; the oracle conclusion [0, 1, 1, 0.836, 0.452] scores the printed 68.25"),
        (two, 1, "[0, 0, 0, 0.3, 1]", "100", VERIFIED, ""),
        (two, 2, "[0.158, 0, 0.158, 0.41, 1]", "87.26", VERIFIED, ""),
        (two, 3, "[0, 0, 0, 0.3, 1]", "95.05", VERIFIED, ""),
        (two, 4, "[0, 1, 1, 0.84, 0.45]", "68.25", VERIFIED, ""),
        (three, 6, "[0, 0.7, 1, 1, 1]", "100", VERIFIED, ""),
        (three, 7, "[0, 0.64, 0.914, 1, 0.914]", "91.16", VERIFIED, ""),
        (three, 8, "[0, 0.7, 1, 0.889, 1]", "92.83", VERIFIED, ""),
        (three, 9, "[0, 0.11, 0, 0.3, 1]", "68.25", UNRECONSTRUCTABLE, case9_vec),
        (two, 6, "[0, 0.7, 1, 1, 1]", "100", VERIFIED, ""),
        (two, 7, "[0, 0.7, 1, 1, 1]", "95.80", VERIFIED, ""),
        (two, 8, "[0, 0.7, 1, 0.778, 1]", "90.61", VERIFIED, ""),
        (two, 9, "[0.56, 0, 0, 0.13, 1]", "85.51", UNRECONSTRUCTABLE, case9_vec),
    ]
    for lab, case, vec, rpcf, status, note in dmm:
        add("dmm", lab, case, "conclusion", vec, status, note)
        # Case 4 and Case 9 scores of the three-valued form match the oracle conclusion
        rpcf_ok = status == VERIFIED or (lab == three and case in (4, 9))
        add("dmm", lab, case, "rpcf", rpcf, VERIFIED if rpcf_ok else status, "" if rpcf_ok else note)
    add("dmm", three, None, "fmp", "88.06", band=DMM_FMP_BAND)
    add("dmm", three, None, "fmt", "88.06")
    add("dmm", two, None, "fmp", "87.64")
    add("dmm", two, None, "fmt", "92.98", UNRECONSTRUCTABLE, "depends on the unreconstructable Case 9 score 85.51")

    # Class 1 comparison
    cri_fmt = ("61.81", ERRATUM, _CRI_FMT_NOTE)
    qip_fmt = ("47.69", ERRATUM, "carries the QIP Case 8 slip")
    comparison1 = [
        (three, "88.06", ("88.06", VERIFIED, ""), ("88.06", VERIFIED, "")),
        (two, "87.64", ("92.98", UNRECONSTRUCTABLE, "depends on the Case 9 score 85.51"),
         ("90.31", UNRECONSTRUCTABLE, "depends on the Case 9 score 85.51")),
        ("CRI-Goedel", "92.45", cri_fmt, ("77.131", ERRATUM, _CRI_FMT_NOTE)),
        ("CRI-Goguen", "92.45", cri_fmt, ("77.131", ERRATUM, _CRI_FMT_NOTE)),
        ("CRI-Lukasiewicz", "88.73", cri_fmt, ("75.273", ERRATUM, _CRI_FMT_NOTE)),
        ("CRI-R0", "84.23", cri_fmt, ("73.023", ERRATUM, _CRI_FMT_NOTE)),
        ("CRI-Zadeh", "78.38", cri_fmt, ("70.098", ERRATUM, _CRI_FMT_NOTE)),
        ("TIP-Goedel", "92.45", ("44.69", VERIFIED, ""), ("68.570", VERIFIED, "")),
        ("TIP-Goguen", "92.45", ("44.69", VERIFIED, ""), ("68.570", VERIFIED, "")),
        ("TIP-Lukasiewicz", "88.73", ("44.69", VERIFIED, ""), ("66.711", VERIFIED, "")),
        # printed under the QIP heading but carries the TIP-R0 figures
        ("TIP-R0", "84.23", ("44.69", VERIFIED, ""), ("64.461", VERIFIED, "")),
        *((f"QIP-{fam}", "79.21", qip_fmt, ("63.450", ERRATUM, "carries the QIP Case 8 slip"))
          for fam in residual),
        ("AARS-reduction", "76.43", ("39.20", VERIFIED, ""), ("57.818", VERIFIED, "")),
        ("AARS-more-or-less", "77.10", ("37.14", VERIFIED, ""), ("57.121", VERIFIED, "")),
    ]
    for lab, fmp, (fmt, fmt_status, fmt_note), (overall, o_status, o_note) in comparison1:
        add("comparison", lab, None, "fmp", fmp, band=DMM_FMP_BAND if lab == three else 0.0)
        add("comparison", lab, None, "fmt", fmt, fmt_status, fmt_note)
        add("comparison", lab, None, "overall", overall, o_status, o_note)

    # Class 2 comparison
    copied = "same figure as the Zadeh row; the oracle gives a distinct value"
    qip_fmp = "differs from the other QIP rows although all four families give the same Case 1-3, 5 conclusions"
    dmm2 = "no reading of the tilted cases reproduces this figure"
    comparison2 = [
        ("CRI-Zadeh", ("81.35",), ("74.30", ERRATUM, _CRI_FMT_NOTE), ("77.83", ERRATUM, _CRI_FMT_NOTE)),
        ("CRI-Lukasiewicz", ("81.35", ERRATUM, copied), ("74.30", ERRATUM, _CRI_FMT_NOTE),
         ("77.83", ERRATUM, _CRI_FMT_NOTE)),
        ("CRI-Goedel", ("98.45",), ("74.30", ERRATUM, _CRI_FMT_NOTE), ("86.38", ERRATUM, _CRI_FMT_NOTE)),
        ("CRI-R0", ("81.35", ERRATUM, copied), ("74.30", ERRATUM, _CRI_FMT_NOTE),
         ("77.83", ERRATUM, _CRI_FMT_NOTE)),
        ("CRI-Goguen", ("98.45",), ("74.30", ERRATUM, _CRI_FMT_NOTE), ("86.38", ERRATUM, _CRI_FMT_NOTE)),
        ("TIP-Lukasiewicz", ("94.70",), ("25.70",),
         ("62.01", ERRATUM, "not the mean of its own FMP and FMT columns (60.20)")),
        ("TIP-Goedel", ("98.45",), ("25.70",), ("62.08",)),
        ("TIP-R0", ("90.20",), ("25.70",), ("57.95",)),
        ("TIP-Goguen", ("98.45",), ("25.70",), ("62.08",)),
        ("QIP-Lukasiewicz", ("97.20",), ("25.70",), ("61.45",)),
        ("QIP-Goedel", ("97.20",), ("25.70",), ("61.45",)),
        ("QIP-R0", ("95.85", ERRATUM, qip_fmp), ("25.70",), ("60.78", ERRATUM, qip_fmp)),
        ("QIP-Goguen", ("96.20", ERRATUM, qip_fmp), ("25.70",), ("60.95", ERRATUM, qip_fmp)),
        ("AARS-more-or-less", ("97.17",), ("16.01",), ("56.59",)),
        ("AARS-reduction", ("96.10",), ("18.40",), ("57.25",)),
        (three, ("93.95", UNRECONSTRUCTABLE, dmm2),
         ("96.08", UNRECONSTRUCTABLE, "would need a Case 10 score above 100"), ("95.02",)),
        (two, ("93.97", UNRECONSTRUCTABLE, dmm2), ("89.13", UNRECONSTRUCTABLE, dmm2),
         ("91.55", UNRECONSTRUCTABLE, dmm2)),
    ]
    for lab, *triple in comparison2:
        for quantity, entry in zip(("fmp", "fmt", "overall"), triple):
            printed, status, note = entry if len(entry) == 3 else (entry[0], VERIFIED, "")
            add("comparison", lab, None, quantity, printed, status, note, class_id=2, band=CLASS2_BAND)
    return cells


GOLDEN: tuple[GoldenCell, ...] = tuple(_cells())


def cells_for(label: Optional[str] = None, class_id: Optional[int] = None,
              table: Optional[str] = None) -> tuple[GoldenCell, ...]:
    return tuple(
        c for c in GOLDEN
        if (label is None or c.label == label)
        and (class_id is None or c.class_id == class_id)
        and (table is None or c.table == table)
    )


def row_note(label: str, case: int) -> str:
    """Annotation for a report row whose published cell is not verified."""
    notes = (f"{c.status}: {c.note}" for c in GOLDEN
             if c.label == label and c.case == case and c.status != VERIFIED)
    return "; ".join(dict.fromkeys(notes))
