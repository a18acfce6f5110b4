"""Generate the non-Pappus fixture from its wiring diagram.

The lines dual to a rational Pappus configuration give a realizable wiring
diagram; its sweep is first checked against exact feasibility of the lifted
normals.  Splitting the triple point of the Pappus line into three simple
crossings gives the non-Pappus diagram, whose sweep is written as NONPAP.cov.
"""

import sys
from pathlib import Path

from mhgarside.arrangement import covectors_from_hyperplanes, format_covectors
from mhgarside.fixtures import FIXTURE_DIR
from mhgarside.wiring import format_wiring, non_pappus, sweep_covectors


def main(out=FIXTURE_DIR):
    out = Path(out)
    broken, parent, normals = non_pappus()
    if sweep_covectors(parent) != covectors_from_hyperplanes(normals):
        raise SystemExit("sweep of the realizable parent disagrees with exact feasibility")
    fl = sweep_covectors(broken)
    note = "non-Pappus arrangement of 9 pseudolines (wires bottom-to-top at the far left)"
    (out / "NONPAP.wiring").write_text(format_wiring(broken, comment=note), encoding="utf-8")
    (out / "NONPAP.cov").write_text(format_covectors(fl, comment=note + "\ngenerated by scripts/make_nonpappus.py"),
                                    encoding="utf-8")
    print(f"NONPAP: {len(fl)} covectors, {len(fl.topes)} topes")


if __name__ == "__main__":
    main(*sys.argv[1:])
