#!/usr/bin/env python3
"""CRI modus tollens under both orientations of the rule relation.

The standard FMT composition reads R[x, y] = A(x) -> B(y). The published CRI
FMT columns (all-ones conclusions, 61.81 for every family) come out only when
the relation is transposed, i.e. R[y, x] = A(y) -> B(x). This prints both so
the difference can be inspected cell by cell.
"""

import sys

from fuzzyreason.harness import load_config
from fuzzyreason.harness.oracle import (
    cri_fmt,
    oracle_premise,
    oracle_rpcf,
    oracle_targets,
    tilts_for,
    transposed_cri_fmt,
)

FAMILIES = ("Lukasiewicz", "Goedel", "R0", "Goguen")


def main() -> int:
    config = load_config()
    a, b = list(config.antecedent), list(config.consequent)
    tilts = tilts_for(config)
    for fam in FAMILIES:
        totals = {"standard": 0.0, "transposed": 0.0}
        print(f"CRI-{fam}")
        for case in (6, 7, 8, 9):
            p = oracle_premise(a, b, case, tilts)
            target, _ = oracle_targets(a, b, case, tilts)
            for name, fn in (("standard", cri_fmt), ("transposed", transposed_cri_fmt)):
                out = fn(a, b, p, fam)
                score = oracle_rpcf(out, target)
                totals[name] += score / 4
                vec = ", ".join(f"{t:.3f}" for t in out)
                print(f"  case {case} {name:10s} [{vec}] {score:7.2f}")
        print(f"  FMT aggregate: standard {totals['standard']:.2f}, transposed {totals['transposed']:.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
