"""Perfect sets get rare as n grows: exact counts for tiny slices, sampled trend beyond."""
import sys

from fideal import bound_report, enumerate_exact
from fideal.density import format_trend_csv, trend_report

for n, d in ((4, 2), (5, 2), (5, 3)):
    ex = enumerate_exact(n, d)
    print(f"({n},{d}) exact over {ex.total}: lp {ex.lp}  up {ex.up}  perfect {ex.perfect}  f-ideal {ex.fideal}")

b = bound_report(4, 2)
print(f"lp bound at (4,2): {b.lp_lower_bound:.6f} (exact 16/20 = 0.8)")

rows = trend_report(2, [8, 9, 12, 13, 16, 17, 20], trials=10**4, seed=1)
sys.stdout.write(format_trend_csv(rows))
