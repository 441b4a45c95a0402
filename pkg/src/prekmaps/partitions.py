"""Canonical integer partitions, enumeration streams and divisor helpers.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers.  Every function in the package accepts and returns partitions in
this canonical form, so multiset equality is plain tuple equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from math import isqrt

__all__ = [
    "Partition",
    "make_partition",
    "enumerate_partitions",
    "enumerate_partitions_with_length",
    "partition_count",
    "tau",
    "divisor_pairs",
    "is_prime",
    "is_square",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    The constructor validates but does not sort; use :func:`make_partition`
    to canonicalise an arbitrary multiset.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        self = super().__new__(cls, parts)
        prev = None
        for x in self:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"parts must be integers, got {x!r}")
            if x < 1:
                raise ValueError(f"parts must be positive, got {x}")
            if prev is not None and x > prev:
                raise ValueError(f"parts must be weakly decreasing: {tuple(self)}")
            prev = x
        return self

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def scaled(self, m: int) -> "Partition":
        """Multiply every part by ``m``."""
        if m < 1:
            raise ValueError("scale factor must be positive")
        return Partition(m * x for x in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def make_partition(values: Iterable[int]) -> Partition:
    """Return the canonical (weakly decreasing) partition of a multiset."""
    vals = list(values)
    for v in vals:
        if v == 0:
            raise ValueError("a partition cannot contain a zero part")
    return Partition(sorted(vals, reverse=True))


def _descending(n: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
    if n == 0:
        yield Partition(prefix)
        return
    for x in range(min(n, cap), 0, -1):
        prefix.append(x)
        yield from _descending(n - x, x, prefix)
        prefix.pop()


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse lexicographic order.

    The first partition is ``(n)`` and the last is ``(1, ..., 1)``; ``n = 0``
    yields only the empty partition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _descending(n, n, [])


def _with_length(n: int, slots: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
    if slots == 0:
        if n == 0:
            yield Partition(prefix)
        return
    # the next part must leave room for slots-1 ones and can't be below the average
    hi = min(cap, n - (slots - 1))
    lo = -(-n // slots)
    for x in range(hi, lo - 1, -1):
        prefix.append(x)
        yield from _with_length(n - x, slots - 1, x, prefix)
        prefix.pop()


def enumerate_partitions_with_length(n: int, l: int) -> Iterator[Partition]:
    """Yield the partitions of ``n`` with exactly ``l`` parts, reverse lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if l < 1:
        raise ValueError("length must be at least 1")
    return _with_length(n, l, n, [])


def partition_count(n: int) -> int:
    """Number of partitions of ``n`` by the standard coin-change recurrence."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def divisor_pairs(n: int) -> list[tuple[int, int]]:
    """Unordered factorisations ``d * (n // d) = n`` with ``d <= n // d``, ascending in ``d``."""
    if n < 1:
        raise ValueError("divisor_pairs needs a positive integer")
    return [(d, n // d) for d in range(1, isqrt(n) + 1) if n % d == 0]


def tau(n: int) -> int:
    """Number of positive divisors of ``n`` (trial division up to the square root)."""
    if n < 1:
        raise ValueError("tau needs a positive integer")
    count = 0
    for d, e in divisor_pairs(n):
        count += 1 if d == e else 2
    return count
