"""
Recompute both golden tables and show where each number comes from.

Run:  python3 demos/reproduce_tables.py [--jobs 4]
"""

import argparse
import time

from realselfdual.tables import render_diff, render_text, reproduce_table

parser = argparse.ArgumentParser()
parser.add_argument("--jobs", type=int, default=1)
jobs = parser.parse_args().jobs

for table_id, transpose in ((1, False), (1, True), (2, False)):
    start = time.perf_counter()
    report = reproduce_table(table_id, jobs=jobs, transpose=transpose)
    elapsed = time.perf_counter() - start
    print(render_text(report))
    print(f"-> {'all rows match' if report.ok else 'MISMATCH'} in {elapsed:.2f}s")
    if not report.ok:
        print(render_diff(report))
    print()

# a multi-valued cell lists one bound per pairing class, leftmost class first
report = reproduce_table(2)
row = next(r for r in report.rows if r.label == "(0,1,0)^4,(0,0,1)^4")
for cell in row.cells:
    for item in cell.computed:
        print(f"c={cell.c}  {item['pairing']:<22} bound {item['bound']}")
