"""Closed-form families of pre_k collisions.

Each generator builds the two raw part tuples from its formulas, records
whether they were already weakly decreasing, and canonicalises them.  The
claimed weight and shared image are likewise computed from the closed
forms, so :func:`validate_pair` can check them against a fresh pre_k
evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .partitions import Partition, is_prime, make_partition
from .prek import image
from .verdict import PASS, Verdict

__all__ = [
    "PQFamilyParams",
    "CounterexamplePair",
    "gen_alpha_beta",
    "gen_scaled_triple",
    "gen_coprime_triple",
    "gen_pq_family",
    "validate_pair",
    "min_m",
]


def min_m(p: int, q: int) -> int:
    """Smallest integer m with m >= (p-1)/(q-1)."""
    return -(-(p - 1) // (q - 1))


@dataclass(frozen=True)
class PQFamilyParams:
    p: int
    q: int
    m: int
    k: int = 3

    def __post_init__(self):
        if not (is_prime(self.p) and is_prime(self.q)):
            raise ValueError(f"p and q must be prime, got p={self.p}, q={self.q}")
        if self.p <= self.q:
            raise ValueError(f"need p > q, got p={self.p}, q={self.q}")
        if self.m < min_m(self.p, self.q):
            raise ValueError(f"m={self.m} is below the bound {min_m(self.p, self.q)}")
        if self.k < 3:
            raise ValueError("k must be at least 3")


@dataclass(frozen=True)
class CounterexamplePair:
    first: Partition
    second: Partition
    weight: int
    k: int
    shared_image: Partition
    family: str = ""
    params: dict = field(default_factory=dict, compare=False)
    raw_sorted: bool = True

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "k": self.k,
            "weight": self.weight,
            "first": list(self.first),
            "second": list(self.second),
            "shared_image": list(self.shared_image),
        }


def _pair(raw1, raw2, weight, k, img, family, params) -> CounterexamplePair:
    raw_sorted = all(list(r) == sorted(r, reverse=True) for r in (raw1, raw2))
    return CounterexamplePair(
        make_partition(raw1),
        make_partition(raw2),
        weight,
        k,
        Partition((img,)),
        family,
        params,
        raw_sorted,
    )


def gen_alpha_beta(k: int) -> CounterexamplePair:
    """(6, 6, 1^(k-2)) and (9, 2, 2, 1^(k-3)): k-part partitions of k + 10 with image (36)."""
    if k < 3:
        raise ValueError("k must be at least 3")
    return _pair(
        (6, 6) + (1,) * (k - 2),
        (9, 2, 2) + (1,) * (k - 3),
        k + 10, k, 36, "alpha_beta", {"k": k},
    )


def gen_scaled_triple(m: int) -> CounterexamplePair:
    """(6m, 6m, m) and (9m, 2m, 2m), weight 13m, pre_3 image (36 m^3)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return _pair(
        (6 * m, 6 * m, m), (9 * m, 2 * m, 2 * m),
        13 * m, 3, 36 * m**3, "scaled_triple", {"m": m},
    )


def gen_coprime_triple(m: int) -> CounterexamplePair:
    """(3m, 2m-1, 2) and (4m-2, m, 3), weight 5m+1, pre_3 image (6m(2m-1))."""
    if m < 3:
        raise ValueError("m must be at least 3")
    return _pair(
        (3 * m, 2 * m - 1, 2), (4 * m - 2, m, 3),
        5 * m + 1, 3, 6 * m * (2 * m - 1), "coprime_triple", {"m": m},
    )


def gen_pq_family(params: PQFamilyParams) -> CounterexamplePair:
    p, q, m, k = params.p, params.q, params.m, params.k
    a = 1 + m * (p - 1)
    b = 1 + m * (q - 1)
    ones = (1,) * (k - 3)
    return _pair(
        (q * a, b, p) + ones,
        (p * b, a, q) + ones,
        p + q + k + m * (p * q - 1) - 2,
        k,
        p * q * a * b,
        "pq",
        {"p": p, "q": q, "m": m, "k": k},
    )


def validate_pair(pair: CounterexamplePair, require_sorted: bool = True) -> Verdict:
    """Re-check every pair invariant with an independent pre_k evaluation.

    With ``require_sorted`` the generator's raw tuples must already have been
    weakly decreasing.
    """
    a, b, k = pair.first, pair.second, pair.k
    if a == b:
        return Verdict(False, "not distinct", (a, b))
    if a.weight != b.weight:
        return Verdict(False, "weights differ", (a, b))
    if a.weight != pair.weight:
        return Verdict(False, "weight does not match the closed form", (a, pair.weight))
    if len(a) != len(b):
        return Verdict(False, "lengths differ", (a, b))
    ia, ib = image(a, k), image(b, k)
    if ia != ib:
        return Verdict(False, "images differ", (ia, ib))
    if ia != pair.shared_image:
        return Verdict(False, "image does not match the closed form", (ia, pair.shared_image))
    if require_sorted and not pair.raw_sorted:
        return Verdict(False, "raw tuple was not weakly decreasing", (a, b))
    return PASS


def parts_gcd(p: Partition) -> int:
    g = 0
    for x in p:
        g = gcd(g, x)
    return g
