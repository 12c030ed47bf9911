"""
How tight are the bounds on A(n, d)?
====================================

For a few sizes we print the best certified lower and upper bound, then
the exact value wherever the brute-force oracle can reach it.  The growth
constants C_delta and c_delta are written to a CSV for plotting.
"""

from __future__ import annotations

import csv
import sys

from treecodes import bounds
from treecodes.oracle import exact_A

for n in (4, 5):
    for d in range(1, n):
        table = bounds.bounds_table(n, d)
        r = exact_A(n, d)
        lo, hi = table.best_lower, table.best_upper
        print(f"A({n},{d}) = {r.value:4d}   in [{lo.rounded} ({lo.name}), {hi.rounded} ({hi.name})]")

print()
for n, d in [(8, 5), (11, 8), (15, 11), (18, 5), (30, 20)]:
    table = bounds.bounds_table(n, d)
    lo, hi = table.best_lower, table.best_upper
    print(f"A({n},{d}) in [{lo.rounded}, {hi.rounded}]   lower from {lo.name}, upper from {hi.name}")

# the refined n-3 bound against the generic chain, as n grows
print()
for n in (13, 20, 40, 80):
    explicit = next(b for b in bounds.explicit_upper_bounds(n) if b.name == "explicit_n_minus_3")
    generic = bounds.second_upper_bound(n, n - 3)
    print(f"n={n:3d}: refined {explicit.rounded:6d}   generic chain {generic.rounded:8d}")

out = sys.argv[1] if len(sys.argv) > 1 else "curves.csv"
with open(out, "w", newline="") as fh:
    w = csv.writer(fh)
    w.writerow(["delta", "C_delta", "c_delta"])
    for p in bounds.delta_curve():
        w.writerow([p.delta, p.C_delta, p.c_delta])
print(f"\nwrote {out}")
