"""Distribution report over an allcurves-format file.

Parses each line, infers the torsion structure from the labeled order plus
the computed 2-torsion rank, classifies the curve, and prints the per-torsion
distribution over the twelve classes. Cells forbidden by the torsion
structure are always exactly zero.
"""

import pathlib
import sys

from rmm import TorsionStructure, allowed_rmm, distribution_from_lines

default = pathlib.Path(__file__).parent.parent / "tests" / "data" / "allcurves_fixture.txt"
path = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else default

with path.open() as fh:
    report, results = distribution_from_lines(fh)

print(f"{len(results)} curves classified, {len(report.skipped)} lines skipped")
header = ["T", "n"] + [f"R{i}" for i in range(1, 13)]
print(("{:>7}" * len(header)).format(*header))
for torsion in sorted(report.rows, key=lambda t: t.value):
    row = report.rows[torsion]
    cells = [row.get(i, 0) for i in range(1, 13)]
    print(("{:>7}" * len(header)).format(torsion.value, report.totals[torsion], *cells))

assert report.forbidden_cells_zero()
for torsion, row in report.rows.items():
    assert set(row) <= allowed_rmm(torsion)
print("all forbidden cells are zero")

for lineno, _line, reason in report.skipped:
    print(f"skipped line {lineno}: {reason}", file=sys.stderr)
