import pytest

from prekmaps.census import (
    CensusSummary,
    divisor_witnesses,
    e2_preimages,
    pre2_exact,
    pre2_lower_bound,
    pre2_sweep,
    summary_csv,
)
from prekmaps.collisions import image_key
from prekmaps.partitions import Partition, enumerate_partitions
from prekmaps.prek import e2_sum, image

from oracles import prek_multiset

# |Pre_2(n)| for n = 1..30, frozen from the fully independent brute force in
# oracles.py (all partitions of every weight s <= n + 1, images by bitmask)
EXACT_1_TO_30 = [1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3, 5, 2, 4, 4, 4, 4, 6, 3, 5, 6, 5, 5, 7, 4, 7, 6]


@pytest.fixture(autouse=True)
def _gate(search_bound_lemma):
    assert search_bound_lemma


def _oracle_images(n):
    """Census via plain enumeration: every partition of every weight up to n + 1."""
    found = {}
    for s in range(2, n + 2):
        for lam in enumerate_partitions(s):
            if len(lam) < 2:
                continue
            img = image(lam, 2)
            if sum(img) == n:
                found[image_key(img)] = img
    return set(found.values())


def test_lower_bound_examples():
    assert pre2_lower_bound(23) == 4
    assert pre2_lower_bound(35) == 5
    assert pre2_lower_bound(1) == 1
    with pytest.raises(ValueError):
        pre2_lower_bound(0)


def test_divisor_witnesses_23():
    wit = divisor_witnesses(23)
    assert {w[0] for w in wit} == {(23, 1), (11, 1, 1), (7, 2, 1), (5, 3, 1)}
    assert {w[1] for w in wit} == {(23,), (11, 11, 1), (14, 7, 2), (15, 5, 3)}


def test_divisor_witnesses_small():
    assert divisor_witnesses(1) == [((1, 1), (1,))]
    wit = divisor_witnesses(8)
    assert {w[0] for w in wit} == {(8, 1), (2, 2, 1)}
    assert {w[1] for w in wit} == {(8,), (4, 2, 2)}
    with pytest.raises(ValueError):
        divisor_witnesses(0)


def test_divisor_witness_images_have_weight_n():
    for n in range(1, 500):
        for pre, img in divisor_witnesses(n):
            assert sum(img) == n and image(pre, 2) == img


def test_divisor_witness_images_distinct():
    for n in range(1, 10**4 + 1):
        imgs = [img for _, img in divisor_witnesses(n)]
        assert len(set(imgs)) == len(imgs), f"duplicate witness image at n={n}"
        assert len(imgs) == pre2_lower_bound(n)


def test_pre2_exact_small():
    rec = pre2_exact(1)
    assert rec.exact_count == 1 and rec.images == ((1,),)
    rec = pre2_exact(2)
    assert rec.exact_count == 1 and rec.images == ((2,),)
    with pytest.raises(ValueError):
        pre2_exact(0)


def test_pre2_exact_23():
    rec = pre2_exact(23)
    assert {(23,), (11, 11, 1), (14, 7, 2), (15, 5, 3)} <= set(rec.images)
    assert rec.exact_count == 5
    assert (6, 6, 4, 3, 2, 2) in rec.images
    assert rec.lower_bound == 4 and rec.gap == 1


def test_frozen_counts():
    assert [pre2_exact(n).exact_count for n in range(1, 31)] == EXACT_1_TO_30


@pytest.mark.parametrize("n", range(1, 31))
def test_completeness_against_enumeration(n):
    assert set(pre2_exact(n).images) == _oracle_images(n)


def test_pruned_search_finds_every_preimage():
    for n in range(1, 26):
        want = sorted(
            lam for s in range(2, n + 2) for lam in enumerate_partitions(s)
            if len(lam) >= 2 and e2_sum(lam) == n
        )
        assert sorted(e2_preimages(n)) == want


def test_soundness():
    for n in range(1, 80):
        rec = pre2_exact(n)
        assert rec.exact_count == len(rec.images) == len(set(rec.images))
        for img in rec.images:
            assert sum(img) == n
            # find a preimage again from scratch
            assert any(
                sorted(prek_multiset(lam, 2).elements(), reverse=True) == list(img)
                for lam in e2_preimages(n)
            )


def test_exact_count_meets_divisor_bound_and_contains_witnesses():
    for rec in pre2_sweep(200):
        assert rec.exact_count >= rec.lower_bound
        assert {img for _, img in rec.divisor_witnesses} <= set(rec.images)


def test_sweep_summary():
    summary = CensusSummary()
    recs = list(pre2_sweep(2, summary))
    assert [r.exact_count for r in recs] == [1, 1]
    assert summary.count_one == [1, 2] and summary.ok
    summary = CensusSummary()
    recs = list(pre2_sweep(100, summary))
    assert [r.n for r in recs] == list(range(1, 101))
    assert recs[22].exact_count >= 4
    assert summary.count_one == [1, 2, 4]


def test_sweep_parallel_matches_serial():
    assert list(pre2_sweep(40, jobs=3)) == list(pre2_sweep(40))


def test_summary_csv():
    text = summary_csv(pre2_sweep(3))
    assert text == "n,exact,lower_bound,gap\n1,1,1,0\n2,1,1,0\n3,2,2,0\n"


def test_record_to_dict():
    d = pre2_exact(8).to_dict()
    assert d["n"] == 8 and d["exact_count"] == len(d["images"])
    assert {"preimage": [2, 2, 1], "image": [4, 2, 2]} in d["divisor_witnesses"]
