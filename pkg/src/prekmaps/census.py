"""Counting the partitions of n that lie in the image of pre_2."""

from __future__ import annotations

import csv
import io
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .collisions import SCHEMA_VERSION, image_key
from .partitions import Partition, divisor_pairs, is_square, make_partition, tau
from .prek import image

__all__ = [
    "CensusRecord",
    "CensusSummary",
    "pre2_lower_bound",
    "divisor_witnesses",
    "e2_preimages",
    "pre2_exact",
    "pre2_sweep",
    "summary_csv",
]


@dataclass(frozen=True)
class CensusRecord:
    n: int
    exact_count: int
    lower_bound: int
    images: tuple[Partition, ...]
    divisor_witnesses: tuple[tuple[Partition, Partition], ...]

    @property
    def gap(self) -> int:
        return self.exact_count - self.lower_bound

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "exact_count": self.exact_count,
            "lower_bound": self.lower_bound,
            "images": [list(p) for p in self.images],
            "divisor_witnesses": [
                {"preimage": list(pre), "image": list(img)} for pre, img in self.divisor_witnesses
            ],
        }


@dataclass
class CensusSummary:
    n_max: int = 0
    count_one: list[int] = field(default_factory=list)
    bound_violations: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.bound_violations

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "count_one": list(self.count_one),
            "bound_violations": list(self.bound_violations),
        }


def pre2_lower_bound(n: int) -> int:
    """Divisor lower bound: half of tau(n+1), rounded up (the round-up only happens for squares)."""
    if n < 1:
        raise ValueError("n must be positive")
    t = tau(n + 1)
    return (t + 1) // 2 if is_square(n + 1) else t // 2


def divisor_witnesses(n: int) -> list[tuple[Partition, Partition]]:
    """One (preimage, image) pair per factorisation n + 1 = (a+1)(b+1), a >= b >= 0.

    ``b = 0`` gives the preimage (n, 1); otherwise (a, b, 1) maps to
    (ab, a, b) and the image weight is ab + a + b = n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for d, e in divisor_pairs(n + 1):
        a, b = e - 1, d - 1
        pre = make_partition((a, 1)) if b == 0 else make_partition((a, b, 1))
        out.append((pre, image(pre, 2)))
    return out


def e2_preimages(n: int) -> Iterator[Partition]:
    """Every partition with at least two parts whose pre_2 image has weight ``n``.

    Parts are placed in decreasing order; appending a part ``x`` to a prefix
    with sum ``s`` raises the image weight by ``x * s``, so the running weight
    only grows and branches that exceed ``n`` are cut.
    """
    prefix: list[int] = []

    def grow(s: int, e: int, cap: int) -> Iterator[Partition]:
        if e == n and len(prefix) >= 2:
            yield Partition(prefix)
        # further parts add at least s each
        if e + s > n:
            return
        hi = cap if s == 0 else min(cap, (n - e) // s)
        for x in range(hi, 0, -1):
            prefix.append(x)
            yield from grow(s + x, e + x * s, x)
            prefix.pop()

    # a lone first part x needs a partner y >= 1 with x * y <= n
    return grow(0, 0, n)


def pre2_exact(n: int) -> CensusRecord:
    if n < 1:
        raise ValueError("n must be positive")
    images: dict[bytes, Partition] = {}
    for lam in e2_preimages(n):
        img = image(lam, 2)
        images.setdefault(image_key(img), img)
    ordered = tuple(sorted(images.values(), reverse=True))
    return CensusRecord(
        n=n,
        exact_count=len(ordered),
        lower_bound=pre2_lower_bound(n),
        images=ordered,
        divisor_witnesses=tuple(divisor_witnesses(n)),
    )


def pre2_sweep(
    n_max: int, summary: CensusSummary | None = None, jobs: int = 1
) -> Iterator[CensusRecord]:
    """Yield census records for n = 1..n_max in order, filling ``summary`` as it goes."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if summary is None:
        summary = CensusSummary()
    summary.n_max = n_max
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from _tally(pool.map(pre2_exact, range(1, n_max + 1)), summary)
    else:
        yield from _tally(map(pre2_exact, range(1, n_max + 1)), summary)


def _tally(records, summary: CensusSummary) -> Iterator[CensusRecord]:
    for rec in records:
        n = rec.n
        if rec.exact_count == 1:
            summary.count_one.append(n)
        if rec.exact_count < rec.lower_bound:
            summary.bound_violations.append(n)
        yield rec


def summary_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "exact", "lower_bound", "gap"])
    for r in records:
        w.writerow([r.n, r.exact_count, r.lower_bound, r.gap])
    return buf.getvalue()
