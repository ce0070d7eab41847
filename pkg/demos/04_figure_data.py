"""Series behind the reliability and derivative plots of the 3-by-5 pair.

Writes hammock35.csv next to this script; any plotting tool can take it
from there.  The dual columns are read at 1 - p, so the first derivatives
coincide and the second derivatives are mirror images.
"""

import csv
from pathlib import Path

from mmnrel.cli import main

out = Path(__file__).with_name("hammock35.csv")
main(["plotdata", "--hammock", "3x5", "--deriv", "1", "--deriv", "2", "--samples", "201", "--out", str(out)])

with out.open() as fh:
    rows = list(csv.DictReader(fh))
mid = rows[len(rows) // 2]
print(f"wrote {len(rows)} rows to {out.name}")
print("at p = 1/2:", {k: mid[k] for k in ("Rel(p)", "Rel_dual(1-p)", "d1_Rel(p)", "d1_Rel_dual(1-p)")})
