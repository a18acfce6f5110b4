"""Write the bundled arrangement fixtures (one normal per line)."""

import sys
from pathlib import Path

from mhgarside.arrangement import format_arrangement
from mhgarside.fixtures import FIXTURE_DIR, dihedral_normals

FIXED = {
    "S4": ("braid arrangement of S4, essentialized: x_i - x_j in coordinates of simple roots",
           [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1)]),
    "GEN4": ("four generic planes through the origin of R^3",
             [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]),
}


def main(out=FIXTURE_DIR):
    out = Path(out)
    for m in range(2, 9):
        text = format_arrangement(dihedral_normals(m), comment=f"{m} central lines in the plane")
        (out / f"I2{m}.arr").write_text(text, encoding="utf-8")
    for name, (comment, normals) in FIXED.items():
        (out / f"{name}.arr").write_text(format_arrangement(normals, comment=comment), encoding="utf-8")


if __name__ == "__main__":
    main(*sys.argv[1:])
