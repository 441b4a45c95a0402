"""
How many partitions of n lie in the image of pre_2?
===================================================

Each factorisation n + 1 = (a+1)(b+1) yields an image partition (ab, a, b)
of n, giving a divisor-count lower bound.  The census computes the exact
number by searching all preimages and compares the two.
"""

from prekmaps import divisor_witnesses, pre2_exact, pre2_lower_bound
from prekmaps.census import CensusSummary, pre2_sweep, summary_csv

rec = pre2_exact(23)
print("images of weight 23:", [tuple(p) for p in rec.images])
print("exact", rec.exact_count, "lower bound", pre2_lower_bound(23))
for pre, img in divisor_witnesses(23):
    print("  witness", tuple(pre), "->", tuple(img))

summary = CensusSummary()
records = list(pre2_sweep(60, summary))
print(summary_csv(records[:12]), end="")
print("n <= 60 with exactly one image:", summary.count_one)
print("lower bound violated anywhere:", bool(summary.bound_violations))
