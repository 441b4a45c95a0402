"""
Collision families for k >= 3
=============================

Generate the closed-form families of distinct k-part partitions that share
a pre_k image, validate each pair from scratch, and confirm the exhaustive
search finds them too.
"""

from prekmaps import (
    PQFamilyParams,
    find_collisions,
    gen_alpha_beta,
    gen_coprime_triple,
    gen_pq_family,
    gen_scaled_triple,
    validate_pair,
)

for k in range(3, 7):
    pair = gen_alpha_beta(k)
    print(f"k={k}: {pair.first} and {pair.second} -> {pair.shared_image}", validate_pair(pair).ok)

for m in (1, 2, 3):
    pair = gen_scaled_triple(m)
    print(f"scaled m={m}: {pair.first} {pair.second} weight {pair.weight} image {pair.shared_image}")

for m in (3, 4, 5):
    pair = gen_coprime_triple(m)
    print(f"coprime m={m}: {pair.first} {pair.second} image {pair.shared_image}")

pair = gen_pq_family(PQFamilyParams(p=5, q=2, m=4, k=4))
print("p=5, q=2, m=4, k=4:", pair.first, pair.second, pair.shared_image, validate_pair(pair).ok)

# The exhaustive search over 3-part partitions of 13 finds exactly one class.
report = find_collisions(13, 3, length_filter=3)
for cls in report.classes:
    print("n=13 class:", cls.image, "<-", ", ".join(map(str, cls.preimages)))
