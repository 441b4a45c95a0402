"""The pre_k maps: products of k distinct-index parts of a partition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

from .partitions import Partition, make_partition

__all__ = ["PrekResult", "pre_k", "image", "product_of_parts", "e2_sum", "complement_image"]


@dataclass(frozen=True)
class PrekResult:
    image: Partition
    source_length: int
    k: int

    @property
    def part_count(self) -> int:
        """C(source_length, k), which is also ``image.length``."""
        return comb(self.source_length, self.k)

    @property
    def degenerate(self) -> bool:
        return self.source_length < self.k


def image(lam: Partition, k: int) -> Partition:
    """Image partition of ``lam`` under pre_k.

    Repeated parts count once per index tuple, so ``(7, 4, 4)`` under pre_2
    gives ``28`` twice and ``16`` once.  Fewer than ``k`` parts gives the
    empty partition.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return Partition(lam)
    if len(lam) < k:
        return Partition()
    # combinations of a decreasing tuple are emitted in index order; sorting is still needed
    return Partition(sorted((prod(c) for c in combinations(lam, k)), reverse=True))


def pre_k(lam: Partition, k: int) -> PrekResult:
    return PrekResult(image(lam, k), len(lam), k)


def product_of_parts(lam: Partition) -> int:
    return prod(lam)


def e2_sum(lam: Partition) -> int:
    """Weight of the pre_2 image, via ((sum x)^2 - sum x^2) / 2."""
    s = sum(lam)
    return (s * s - sum(x * x for x in lam)) // 2


def complement_image(lam: Partition, k: int) -> Partition:
    """Divide the total part product by each part of the pre_k image.

    For ``1 <= k < len(lam)`` the result is the pre_{len(lam)-k} image.
    """
    if k < 1 or k >= len(lam):
        raise ValueError(f"complement needs 1 <= k < length, got k={k}, length={len(lam)}")
    total = product_of_parts(lam)
    return make_partition(total // x for x in image(lam, k))
