"""Exhaustive injectivity testing of pre_k on partitions of n."""

from __future__ import annotations

import json
import logging
import os
from collections import defaultdict
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .partitions import Partition, enumerate_partitions, enumerate_partitions_with_length
from .prek import image
from .schema import SCHEMA_VERSION
from .verdict import PASS, Verdict

__all__ = [
    "SCHEMA_VERSION",
    "WITNESS_CAP",
    "image_key",
    "group_by_image",
    "CollisionClass",
    "InjectivityReport",
    "find_collisions",
    "SweepCache",
    "sweep",
    "cross_length_check",
    "duality_check",
]

logger = logging.getLogger(__name__)

# preimage lists are truncated to this many entries when serialised
WITNESS_CAP = 16


def image_key(p: Partition) -> bytes:
    """Canonical byte encoding: 8-byte part count, then each part as a
    4-byte byte-length followed by its big-endian magnitude."""
    chunks = [len(p).to_bytes(8, "big")]
    for x in p:
        mag = x.to_bytes((x.bit_length() + 7) // 8, "big")
        chunks.append(len(mag).to_bytes(4, "big"))
        chunks.append(mag)
    return b"".join(chunks)


def group_by_image(partitions: Iterable[Partition], k: int) -> dict[bytes, list[Partition]]:
    """Bucket partitions by the exact key of their pre_k image, preserving input order."""
    groups: dict[bytes, list[Partition]] = defaultdict(list)
    for lam in partitions:
        groups[image_key(image(lam, k))].append(lam)
    return dict(groups)


@dataclass(frozen=True)
class CollisionClass:
    image: Partition
    preimages: tuple[Partition, ...]

    def to_dict(self, cap: int | None = WITNESS_CAP) -> dict:
        shown = self.preimages if cap is None else self.preimages[:cap]
        return {
            "image": list(self.image),
            "preimage_count": len(self.preimages),
            "preimages": [list(p) for p in shown],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CollisionClass":
        return cls(Partition(d["image"]), tuple(Partition(p) for p in d["preimages"]))


@dataclass(frozen=True)
class InjectivityReport:
    n: int
    k: int
    length_filter: int | None
    partitions_examined: int
    degenerate_count: int
    classes: tuple[CollisionClass, ...] = field(default=())

    @property
    def injective(self) -> bool:
        return not self.classes

    def to_dict(self, cap: int | None = WITNESS_CAP) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "k": self.k,
            "length_filter": "all" if self.length_filter is None else self.length_filter,
            "partitions_examined": self.partitions_examined,
            "degenerate_count": self.degenerate_count,
            "injective": self.injective,
            "classes": [c.to_dict(cap) for c in self.classes],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InjectivityReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
        lf = d["length_filter"]
        report = cls(
            n=d["n"],
            k=d["k"],
            length_filter=None if lf == "all" else lf,
            partitions_examined=d["partitions_examined"],
            degenerate_count=d["degenerate_count"],
            classes=tuple(CollisionClass.from_dict(c) for c in d["classes"]),
        )
        if report.injective != d["injective"]:
            raise ValueError("injective flag disagrees with classes")
        return report


def _candidates(n: int, length_filter: int | None) -> Iterator[Partition]:
    if length_filter is None:
        return enumerate_partitions(n)
    return enumerate_partitions_with_length(n, length_filter)


def find_collisions(n: int, k: int, length_filter: int | None = None) -> InjectivityReport:
    """Exhaustively search for distinct partitions of ``n`` sharing a pre_k image.

    Partitions with fewer than ``k`` parts all map to the empty partition; they
    are counted in ``degenerate_count`` and never form a collision class.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if length_filter is not None and length_filter < 1:
        raise ValueError("length_filter must be positive")
    examined = 0
    degenerate = 0
    groups: dict[bytes, list[Partition]] = defaultdict(list)
    for lam in _candidates(n, length_filter):
        examined += 1
        if len(lam) < k:
            degenerate += 1
            continue
        groups[image_key(image(lam, k))].append(lam)
    classes = [
        CollisionClass(image(members[0], k), tuple(members))
        for members in groups.values()
        if len(members) > 1
    ]
    classes.sort(key=lambda c: c.image, reverse=True)
    return InjectivityReport(n, k, length_filter, examined, degenerate, tuple(classes))


def _unit(args: tuple[int, int, int | None]) -> InjectivityReport:
    return find_collisions(*args)


class SweepCache:
    """Append-only JSON-lines store of finished reports.

    Records are keyed by (n, k, length_filter, schema_version).  Lines that
    fail to parse or validate are logged and ignored, so the affected units
    are recomputed and a fresh record is appended.
    """

    FILENAME = "collisions.jsonl"

    def __init__(self, directory: str | os.PathLike):
        self.path = Path(directory) / self.FILENAME
        self.corrupt_lines = 0
        self._reports: dict[tuple, InjectivityReport] = {}
        self._load()

    @staticmethod
    def key(n: int, k: int, length_filter: int | None) -> tuple:
        return (n, k, length_filter, SCHEMA_VERSION)

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    report = InjectivityReport.from_dict(json.loads(line))
                except (ValueError, KeyError, TypeError) as exc:
                    self.corrupt_lines += 1
                    logger.warning("%s:%d: corrupt cache record ignored (%s)", self.path, lineno, exc)
                    continue
                self._reports[self.key(report.n, report.k, report.length_filter)] = report

    def get(self, n: int, k: int, length_filter: int | None) -> InjectivityReport | None:
        return self._reports.get(self.key(n, k, length_filter))

    def put(self, report: InjectivityReport) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        line = json.dumps(report.to_dict(cap=None), sort_keys=True, separators=(",", ":"))
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(line + "\n")
        self._reports[self.key(report.n, report.k, report.length_filter)] = report

    def __len__(self) -> int:
        return len(self._reports)


def sweep(
    n_from: int,
    n_to: int,
    k: int,
    length_filter: int | None = None,
    cache: SweepCache | None = None,
    jobs: int = 1,
) -> Iterator[InjectivityReport]:
    """Yield one report per n in ``[n_from, n_to]``, ascending.

    Reports already present in ``cache`` are reused; the rest are computed
    (in a process pool when ``jobs > 1``) and appended to the cache.
    """
    if n_from > n_to:
        raise ValueError("n_from must not exceed n_to")
    n_from = max(n_from, 0)
    ns = list(range(n_from, n_to + 1))
    cached = {n: cache.get(n, k, length_filter) for n in ns} if cache else {}
    missing = [n for n in ns if cached.get(n) is None]

    if jobs > 1 and len(missing) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            fresh = pool.map(_unit, [(n, k, length_filter) for n in missing])
            yield from _merge(ns, cached, missing, fresh, cache)
    else:
        fresh = (find_collisions(n, k, length_filter) for n in missing)
        yield from _merge(ns, cached, missing, fresh, cache)


def _merge(ns, cached, missing, fresh, cache):
    fresh = iter(fresh)
    for n in ns:
        report = cached.get(n)
        if report is None:
            report = next(fresh)
            if cache is not None:
                cache.put(report)
        yield report


def cross_length_check(n: int, k: int) -> Verdict:
    """No two partitions of ``n`` with different lengths (both >= k) share a pre_k image."""
    if k < 1:
        raise ValueError("k must be at least 1")
    groups = group_by_image((lam for lam in enumerate_partitions(n) if len(lam) >= k), k)
    for members in groups.values():
        if len({len(m) for m in members}) > 1:
            return Verdict(False, "partitions of different lengths share an image", tuple(members))
    return PASS


def _classes(groups: dict[bytes, list[Partition]]) -> dict[Partition, frozenset[Partition]]:
    out = {}
    for members in groups.values():
        cls = frozenset(members)
        for m in members:
            out[m] = cls
    return out


def duality_check(n: int, l: int, k: int) -> Verdict:
    """Check that pre_k and pre_{l-k} induce the same equivalence on l-part partitions of n."""
    if not 1 <= k < l:
        raise ValueError(f"duality needs 1 <= k < l, got k={k}, l={l}")
    parts = list(enumerate_partitions_with_length(n, l))
    left = _classes(group_by_image(parts, k))
    right = _classes(group_by_image(parts, l - k))
    for lam in parts:
        if left[lam] != right[lam]:
            diff = left[lam].symmetric_difference(right[lam])
            other = min(diff, key=tuple)
            return Verdict(False, f"pre_{k} and pre_{l - k} disagree", (lam, other))
    return PASS
