"""Batch checks for each published result, shared by the CLI and the test suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from .census import CensusSummary, pre2_exact, pre2_lower_bound, pre2_sweep
from .collisions import SweepCache, duality_check, find_collisions, sweep
from .families import (
    PQFamilyParams,
    gen_alpha_beta,
    gen_coprime_triple,
    gen_pq_family,
    gen_scaled_triple,
    min_m,
    parts_gcd,
    validate_pair,
)
from .partitions import Partition, enumerate_partitions_with_length, is_prime
from .prek import complement_image, image

__all__ = ["SuiteResult", "SUITES", "DEFAULT_BOUNDS", "run_suite", "PROBLEM1_THRESHOLD"]

PROBLEM1_THRESHOLD = 18

DEFAULT_BOUNDS = {
    "thm1": 50,
    "thm3": 20,
    "thm4": 60,
    "thm5": 200,
    "conj12": 28,
    "problem1": 120,
    "problem3": 100,
}


@dataclass
class SuiteResult:
    suite: str
    n_max: int
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, what: str, **witness) -> None:
        self.failures.append({"what": what, **witness})

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            "details": self.details,
        }


def _check_pair(res: SuiteResult, pair) -> None:
    res.checked += 1
    v = validate_pair(pair)
    if not v:
        res.fail(v.clause, pair=pair.to_dict())


def thm1(bound: int = 50, **_) -> SuiteResult:
    """Collision families for k >= 3 plus the exhaustive n = 13 witness."""
    res = SuiteResult("thm1", bound)
    for k in range(3, 9):
        _check_pair(res, gen_alpha_beta(k))
    for m in range(1, bound + 1):
        pair = gen_scaled_triple(m)
        _check_pair(res, pair)
        if pair.shared_image != Partition((36 * m**3,)):
            res.fail("scaled image is not 36m^3", m=m)
    for m in range(3, bound + 1):
        pair = gen_coprime_triple(m)
        _check_pair(res, pair)
        if parts_gcd(pair.first) != 1 or parts_gcd(pair.second) != 1:
            res.fail("coprime family member has gcd > 1", m=m)
    primes = [p for p in range(2, 14) if is_prime(p)]
    for q in primes:
        for p in primes:
            if p <= q:
                continue
            for m in range(min_m(p, q), 11):
                for k in range(3, 7):
                    _check_pair(res, gen_pq_family(PQFamilyParams(p, q, m, k)))

    report = find_collisions(13, 3, 3)
    expected = {Partition((6, 6, 1)), Partition((9, 2, 2))}
    if len(report.classes) != 1 or set(report.classes[0].preimages) != expected \
            or report.classes[0].image != Partition((36,)):
        res.fail("n=13, 3 parts: expected exactly the class {(6,6,1),(9,2,2)} -> (36)",
                 report=report.to_dict())
    for k in range(3, 7):
        res.checked += 1
        if find_collisions(k + 10, k, k).injective:
            res.fail("expected non-injectivity at n = k + 10", k=k)
    res.details["pairs_validated"] = res.checked
    return res


def thm3(bound: int = 20, max_length: int = 6, **_) -> SuiteResult:
    """pre_k and pre_{l-k} identify the same l-part partitions; complement equals pre_{l-k}."""
    res = SuiteResult("thm3", bound)
    for n in range(bound + 1):
        for l in range(2, max_length + 1):
            parts = list(enumerate_partitions_with_length(n, l))
            for k in range(1, l):
                res.checked += 1
                v = duality_check(n, l, k)
                if not v:
                    res.fail(v.clause, n=n, l=l, k=k, witnesses=v.to_dict()["witnesses"])
                for lam in parts:
                    if complement_image(lam, k) != image(lam, l - k):
                        res.fail("complement differs from pre_{l-k}", partition=list(lam), k=k)
    return res


def thm4(bound: int = 60, **_) -> SuiteResult:
    res = SuiteResult("thm4", bound)
    for n in range(bound + 1):
        for l in (4, 5, 6):
            res.checked += 1
            rep = find_collisions(n, 2, l)
            if not rep.injective:
                res.fail("pre_2 collision", report=rep.to_dict())
    return res


def conj12(bound: int = 28, **_) -> SuiteResult:
    res = SuiteResult("conj12", bound)
    for n in range(bound + 1):
        res.checked += 1
        rep = find_collisions(n, 2)
        if not rep.injective:
            res.fail("pre_2 collision", report=rep.to_dict())
    return res


def thm5(bound: int = 200, **_) -> SuiteResult:
    res = SuiteResult("thm5", bound)
    for n in range(1, bound + 1):
        rec = pre2_exact(n)
        res.checked += 1
        if rec.exact_count < rec.lower_bound:
            res.fail("exact count below divisor bound", n=n, exact=rec.exact_count,
                     lower_bound=rec.lower_bound)
        missing = {img for _, img in rec.divisor_witnesses} - set(rec.images)
        if missing:
            res.fail("divisor witness image not found by census", n=n,
                     images=[list(m) for m in sorted(missing)])
    spots = {23: 4, 35: 5}
    for n, want in spots.items():
        got = pre2_lower_bound(n)
        if got != want:
            res.fail("lower bound spot check", n=n, expected=want, got=got)
    if bound >= 23:
        listed = [Partition((11, 11, 1)), Partition((14, 7, 2)), Partition((15, 5, 3))]
        found = set(pre2_exact(23).images)
        for img in listed:
            if img not in found:
                res.fail("listed image of 23 missing", image=list(img))
    return res


def problem1(bound: int = 120, cache: SweepCache | None = None, jobs: int = 1, **_) -> SuiteResult:
    """Which n keep pre_3 injective on 3-part partitions; any n > 18 is flagged."""
    res = SuiteResult("problem1", bound)
    injective = []
    for rep in sweep(3, bound, 3, 3, cache=cache, jobs=jobs):
        res.checked += 1
        if rep.injective:
            injective.append(rep.n)
    res.details["injective_n"] = injective
    late = [n for n in injective if n > PROBLEM1_THRESHOLD]
    if late:
        res.fail(f"injective for n > {PROBLEM1_THRESHOLD}", n=late)
    return res


def problem3(bound: int = 100, jobs: int = 1, **_) -> SuiteResult:
    res = SuiteResult("problem3", bound)
    summary = CensusSummary()
    for _rec in pre2_sweep(bound, summary, jobs=jobs):
        res.checked += 1
    res.details["count_one"] = summary.count_one
    for n in summary.bound_violations:
        res.fail("exact count below divisor bound", n=n)
    return res


SUITES = {
    "thm1": thm1,
    "thm3": thm3,
    "thm4": thm4,
    "thm5": thm5,
    "conj12": conj12,
    "problem1": problem1,
    "problem3": problem3,
}


def run_suite(name: str, n_max: int | None = None, **kw) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    bound = DEFAULT_BOUNDS[name] if n_max is None else n_max
    return SUITES[name](bound, **kw)
