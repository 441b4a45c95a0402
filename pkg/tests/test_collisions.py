import json

import pytest
from hypothesis import given, strategies as st

from prekmaps.collisions import (
    SweepCache,
    cross_length_check,
    duality_check,
    find_collisions,
    group_by_image,
    image_key,
    sweep,
)
from prekmaps.partitions import (
    Partition,
    enumerate_partitions,
    enumerate_partitions_with_length,
    make_partition,
)

from oracles import collision_pairs_brute, partitions_brute

partitions = st.lists(st.integers(1, 2**70), max_size=6).map(make_partition)


@given(partitions, partitions)
def test_image_key_is_exact(a, b):
    assert (image_key(a) == image_key(b)) == (a == b)


def test_image_key_separates_tricky_cases():
    cases = [(), (1,), (1, 1), (1, 1, 1), (256,), (65536,), (255, 1), (2**64,)]
    assert len({image_key(Partition(p)) for p in cases}) == len(cases)


def test_group_by_image_n13():
    groups = group_by_image(enumerate_partitions_with_length(13, 3), 3)
    assert groups[image_key(Partition((36,)))] == [(9, 2, 2), (6, 6, 1)]


def test_group_by_image_singleton_and_injective():
    assert list(group_by_image([Partition((4, 1))], 2).values()) == [[(4, 1)]]
    groups = group_by_image((p for p in enumerate_partitions(10) if len(p) >= 2), 2)
    assert all(len(v) == 1 for v in groups.values())


def test_find_collisions_n13():
    rep = find_collisions(13, 3, 3)
    assert not rep.injective
    assert rep.partitions_examined == 14
    assert len(rep.classes) == 1
    cls = rep.classes[0]
    assert cls.image == (36,)
    assert set(cls.preimages) == {(6, 6, 1), (9, 2, 2)}


def test_find_collisions_n14_k4():
    rep = find_collisions(14, 4, 4)
    assert any(set(c.preimages) == {(6, 6, 1, 1), (9, 2, 2, 1)} and c.image == (36,) for c in rep.classes)


def test_find_collisions_all_lengths():
    rep = find_collisions(23, 2)
    assert rep.injective
    assert rep.partitions_examined == 1255
    assert rep.degenerate_count == 1  # only (23) has fewer than two parts
    assert rep.length_filter is None


def test_length_filter_below_k_is_all_degenerate():
    rep = find_collisions(10, 3, 2)
    assert rep.injective and rep.degenerate_count == rep.partitions_examined == 5


def test_report_classes_sorted_and_consistent():
    for n in range(3, 40):
        rep = find_collisions(n, 3, 3)
        imgs = [c.image for c in rep.classes]
        assert imgs == sorted(imgs, reverse=True)
        for c in rep.classes:
            assert len({p.weight for p in c.preimages}) == 1
            assert len({len(p) for p in c.preimages}) == 1


def _pairs_from_report(rep):
    out = set()
    for c in rep.classes:
        ps = list(c.preimages)
        for i in range(len(ps)):
            for j in range(i + 1, len(ps)):
                out.add(frozenset((tuple(ps[i]), tuple(ps[j]))))
    return out


@pytest.mark.parametrize("n", range(0, 19))
def test_exact_against_pairwise_oracle(n):
    brute = partitions_brute(n) if n <= 11 else [tuple(p) for p in enumerate_partitions(n)]
    for k in (2, 3, 4):
        genuine = [p for p in brute if len(p) >= k]
        assert _pairs_from_report(find_collisions(n, k)) == collision_pairs_brute(genuine, k)
        for l in range(k, min(n, 7) + 1):
            same_len = [p for p in genuine if len(p) == l]
            assert _pairs_from_report(find_collisions(n, k, l)) == collision_pairs_brute(same_len, k)


def test_report_determinism():
    a = json.dumps(find_collisions(30, 3, 3).to_dict(), sort_keys=True)
    b = json.dumps(find_collisions(30, 3, 3).to_dict(), sort_keys=True)
    assert a == b


def test_witness_cap_in_serialisation():
    # pre_1 never collides; use pre_3 on 3-part partitions of a large n to get big classes
    rep = find_collisions(120, 3, 3)
    big = max(rep.classes, key=lambda c: len(c.preimages))
    d = big.to_dict()
    assert d["preimage_count"] == len(big.preimages)
    assert len(d["preimages"]) == min(16, len(big.preimages))


def test_k_plus_one_parts_never_collide():
    for k in range(2, 6):
        for n in range(0, 41):
            assert find_collisions(n, k, k + 1).injective


def test_alpha_beta_weights_collide():
    for k in range(3, 7):
        assert not find_collisions(k + 10, k, k).injective


def test_pre2_injective_four_five_six_parts_small():
    for n in range(0, 31):
        for l in (4, 5, 6):
            assert find_collisions(n, 2, l).injective


def test_cross_length():
    assert cross_length_check(13, 3)
    assert cross_length_check(10, 2)
    assert cross_length_check(0, 2)
    for n in range(0, 21):
        for k in range(1, 5):
            assert cross_length_check(n, k)


def test_duality():
    v = duality_check(13, 3, 1)
    assert v.ok
    assert duality_check(20, 5, 2).ok
    assert duality_check(12, 4, 2).ok
    # the pre_3 collision at 13 is not a pre_2 or pre_1 collision
    assert find_collisions(13, 2, 3).injective and find_collisions(13, 1, 3).injective
    with pytest.raises(ValueError):
        duality_check(10, 3, 3)


def test_sweep_order_and_consistency():
    reps = list(sweep(13, 13, 3, 3))
    assert reps == [find_collisions(13, 3, 3)]
    reps = list(sweep(1, 28, 2))
    assert [r.n for r in reps] == list(range(1, 29))
    assert all(r.injective for r in reps)
    with pytest.raises(ValueError):
        list(sweep(5, 4, 2))


def test_sweep_problem1_range():
    injective = [r.n for r in sweep(3, 120, 3, 3) if r.injective]
    assert injective == [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 18]


def test_sweep_parallel_matches_serial():
    serial = list(sweep(3, 40, 3, 3))
    parallel = list(sweep(3, 40, 3, 3, jobs=3))
    assert serial == parallel


def test_cache_roundtrip_and_resume(tmp_path):
    cache = SweepCache(tmp_path)
    cold = list(sweep(3, 30, 3, 3, cache=cache))
    assert len(cache) == 28

    warm_cache = SweepCache(tmp_path)
    calls = []
    import prekmaps.collisions as mod

    original = mod.find_collisions
    mod.find_collisions = lambda *a: calls.append(a) or original(*a)
    try:
        warm = list(sweep(3, 32, 3, 3, cache=warm_cache))
    finally:
        mod.find_collisions = original
    assert warm[:28] == cold
    assert [a[0] for a in calls] == [31, 32]
    cold_json = [json.dumps(r.to_dict(), sort_keys=True) for r in cold]
    warm_json = [json.dumps(r.to_dict(), sort_keys=True) for r in warm[:28]]
    assert cold_json == warm_json


def test_cache_keys_include_k_and_filter(tmp_path):
    cache = SweepCache(tmp_path)
    list(sweep(10, 12, 3, 3, cache=cache))
    assert cache.get(10, 3, 3) is not None
    assert cache.get(10, 3, None) is None
    assert cache.get(10, 2, 3) is None


def test_cache_corruption_recomputed(tmp_path, caplog):
    cache = SweepCache(tmp_path)
    list(sweep(10, 12, 3, 3, cache=cache))
    lines = cache.path.read_text().splitlines()
    lines[1] = lines[1][: len(lines[1]) // 2]  # truncate n=11
    lines.append('{"schema_version": 99, "n": 13}')
    cache.path.write_text("\n".join(lines) + "\n")

    fresh = SweepCache(tmp_path)
    assert fresh.corrupt_lines == 2
    assert "corrupt cache record" in caplog.text
    assert fresh.get(11, 3, 3) is None and fresh.get(10, 3, 3) is not None
    reps = list(sweep(10, 12, 3, 3, cache=fresh))
    assert reps == [find_collisions(n, 3, 3) for n in (10, 11, 12)]
    assert SweepCache(tmp_path).get(11, 3, 3) == find_collisions(11, 3, 3)
