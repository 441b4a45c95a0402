"""
The pre_k maps
==============

pre_k sends a partition to the partition formed by every product of k of
its parts (taken at distinct positions).  This script walks through the
basic behaviour and the identities that tie the maps together.
"""

from math import comb, prod

from prekmaps import Partition, complement_image, e2_sum, make_partition, pre_k

# Repeated parts count once per position, so 7*4 shows up twice.
lam = make_partition([4, 7, 4])
print("lambda        ", lam)
print("pre_2(lambda) ", pre_k(lam, 2).image)

# Too few parts gives the empty partition; pre_1 is the identity.
print("pre_2((5,))   ", pre_k(Partition((5,)), 2).image)
print("pre_1((3,2,1))", pre_k(Partition((3, 2, 1)), 1).image)

# An l-part partition has C(l, k) image parts, and the image product is a
# fixed power of the part product.
lam = Partition((5, 3, 2, 2, 1))
l = len(lam)
for k in range(1, l + 1):
    img = pre_k(lam, k).image
    print(f"k={k}: {len(img)} parts (C({l},{k}) = {comb(l, k)}), "
          f"product {prod(img)} = {prod(lam)}^{comb(l - 1, k - 1)}")

# Dividing the part product by each part of pre_k recovers pre_{l-k}.
for k in range(1, l):
    assert complement_image(lam, k) == pre_k(lam, l - k).image
print("complement identity holds for", lam)

# The pre_2 image weight is e_2 of the parts, available in closed form.
print("e_2(5,3,1) =", e2_sum(Partition((5, 3, 1))))
