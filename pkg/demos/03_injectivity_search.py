"""
Exhaustive injectivity checks
=============================

pre_2 has no collisions on all partitions of n (checked here to n = 28)
nor on 4-, 5- and 6-part partitions.  pre_3 on 3-part partitions fails
for most n; the sweep lists where it still holds.
"""

import tempfile

from prekmaps import SweepCache, cross_length_check, duality_check, find_collisions, sweep

print("pre_2 injective on P(n), n <= 28:",
      all(find_collisions(n, 2).injective for n in range(29)))
print("pre_2 injective on 4/5/6 parts, n <= 40:",
      all(find_collisions(n, 2, l).injective for n in range(41) for l in (4, 5, 6)))

# Different lengths never collide: the images have different part counts.
print("cross-length distinct at n=20, k=2:", cross_length_check(20, 2).ok)

# pre_k and pre_{l-k} identify exactly the same l-part partitions.
print("duality at n=20, l=5, k=2:", duality_check(20, 5, 2).ok)

# The sweep keeps finished reports in a JSON-lines cache and resumes from it.
with tempfile.TemporaryDirectory() as tmp:
    cache = SweepCache(tmp)
    injective = [r.n for r in sweep(3, 120, 3, 3, cache=cache) if r.injective]
    print("pre_3 injective on 3-part partitions for n =", injective)
    print("cached units:", len(cache))
