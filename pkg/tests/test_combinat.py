import itertools
from math import comb

import pytest

from preleibniz.combinat import (ALL, permutation_sign, r_map, s_map, shuffle_moving_last,
                                 shuffle_with_first, shuffles)


def brute_sign(perm):
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def test_empty_shuffle():
    (s,) = shuffles(0, 0)
    assert s.perm == () and s.sign == 1


def test_shuffles_of_one_and_one():
    got = {(s.perm, s.sign) for s in shuffles(1, 1)}
    assert got == {((1, 2), 1), ((2, 1), -1)}


def test_shuffle_count_2_2():
    assert len(shuffles(2, 2)) == 6


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5) if p + q <= 6])
def test_shuffles_are_block_increasing_with_correct_sign(p, q):
    sh = shuffles(p, q)
    assert len(sh) == comb(p + q, p)
    assert len({s.perm for s in sh}) == len(sh)
    assert [s.perm for s in sh] == sorted(s.perm for s in sh)
    for s in sh:
        assert list(s.perm[:p]) == sorted(s.perm[:p])
        assert list(s.perm[p:]) == sorted(s.perm[p:])
        assert s.sign == brute_sign(s.perm) == permutation_sign(s.perm)


@pytest.mark.parametrize("n", range(1, 7))
def test_permutation_sign_matches_inversion_count(n):
    for perm in itertools.permutations(range(1, n + 1)):
        assert permutation_sign(perm) == brute_sign(perm)


def test_box_maps_first_slot():
    (s,) = shuffles(0, 1)
    assert [r_map(2, 1, 2, s, r) for r in (1, 2, 3)] == [1, 1, 2]
    assert [s_map(2, 1, 2, s, r) for r in (1, 2, 3)] == [1, 2, ALL]


def test_box_maps_second_slot_identity_shuffle():
    s = shuffles(1, 1)[0]
    assert s.perm == (1, 2)
    assert [r_map(2, 2, 2, s, r) for r in (1, 2, 3)] == [1, 2, 2]
    assert [s_map(2, 2, 2, s, r) for r in (1, 2, 3)] == [ALL, 1, 2]


@pytest.mark.parametrize("k", range(1, 5))
def test_single_box(k):
    (s,) = shuffles(0, k - 1)
    assert all(r_map(1, 1, k, s, r) == 1 for r in range(1, k + 1))
    assert [s_map(1, 1, k, s, r) for r in range(1, k + 1)] == list(range(1, k + 1))


def all_layouts(max_total=6):
    for m in range(1, 5):
        for n in range(1, 5):
            if m + n - 1 > max_total:
                continue
            for i in range(1, m + 1):
                for s in shuffles(i - 1, n - 1):
                    yield m, i, n, s


def test_boxes_partition_the_colors():
    for m, i, n, s in all_layouts():
        colors = range(1, m + n)
        boxes = [r_map(m, i, n, s, r) for r in colors]
        for k in range(1, m + 1):
            assert boxes.count(k) == (n if k == i else 1)
        singles = [r for r in colors if s_map(m, i, n, s, r) is not ALL]
        assert singles == [r for r in colors if r_map(m, i, n, s, r) == i]
        assert sorted(s_map(m, i, n, s, r) for r in singles) == list(range(1, n + 1))


@pytest.mark.parametrize("r", [0, 4, -1])
def test_out_of_range_color(r):
    (s,) = shuffles(0, 1)
    with pytest.raises(ValueError):
        r_map(2, 1, 2, s, r)
    with pytest.raises(ValueError):
        s_map(2, 1, 2, s, r)


def test_named_shuffles_are_shuffles():
    for n in range(1, 6):
        for i in range(1, n + 1):
            assert shuffle_with_first(n, i) in shuffles(1, n - 1)
    for j in range(2, 6):
        for i in range(1, j):
            assert shuffle_moving_last(j, i) in shuffles(j - 2, 1)
