from fractions import Fraction

import pytest

from bgrank import (
    EnumerationBoundError,
    expand_product,
    enumerate_partitions,
    pair_count,
    partition_count,
    pj_enumerate,
    pj_formula,
    rank_exists,
    rank_range,
)
from bgrank.counting import pair_count_by_enumeration
from conftest import brute_partitions


def test_enumerate_small():
    assert list(enumerate_partitions(0)) == [()]
    assert [tuple(p) for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert sum(1 for _ in enumerate_partitions(10)) == 42


def test_enumerate_matches_oracle_and_recurrence():
    for n in range(31):
        listed = [tuple(p) for p in enumerate_partitions(n)]
        assert listed == sorted(set(listed), reverse=True)
        assert len(listed) == partition_count(n)
        if n <= 20:
            assert listed == list(brute_partitions(n))


@pytest.mark.parametrize("n, count", [(-3, 0), (0, 1), (5, 7), (10, 42), (28, 3718), (100, 190569292)])
def test_partition_count(n, count):
    assert partition_count(n) == count


def test_partition_count_is_exact_beyond_64_bits():
    # p(1000), a long-known value
    assert partition_count(1000) == 24061467864032622473692149727991
    assert partition_count(500) > 2**64


@pytest.mark.parametrize(
    "n, count", [(0, 1), (2, 5), (5, 36), (7, 110), (-1, 0), (Fraction(5, 2), 0), (2.5, 0), (4.0, 20), (Fraction(10, 2), 36)]
)
def test_pair_count(n, count):
    assert pair_count(n) == count


def test_pair_count_matches_pair_enumeration():
    for n in range(16):
        direct = sum(1 for k in range(n + 1) for _ in brute_partitions(k) for _ in brute_partitions(n - k))
        assert pair_count(n) == direct == pair_count_by_enumeration(n)


def test_pair_count_matches_series():
    series = expand_product([(1, -2)], 300)
    assert [pair_count(n) for n in range(301)] == list(series.coeffs)


@pytest.mark.parametrize("n, j, count", [(1, 1, 1), (2, 0, 2), (13, -1, 36), (6, 2, 1)])
def test_pj_enumerate(n, j, count):
    assert pj_enumerate(n, j) == count


def test_pj_enumerate_bound():
    with pytest.raises(EnumerationBoundError):
        pj_enumerate(41, 1)
    with pytest.raises(EnumerationBoundError):
        pj_enumerate(12, 0, bound=10)


@pytest.mark.parametrize("n, j, count", [(13, -1, 36), (6, 2, 1), (2, 1, 0), (4, -2, 0), (13, 1, 65)])
def test_pj_formula(n, j, count):
    assert pj_formula(n, j) == count


def test_theorem_on_small_weights():
    for n in range(21):
        for j in range(-5, 6):
            assert pj_enumerate(n, j) == pj_formula(n, j)


@pytest.mark.parametrize("n, j, exists", [(6, 2, True), (5, 2, False), (4, -2, False), (0, 0, True), (3, -1, True)])
def test_rank_exists(n, j, exists):
    assert rank_exists(n, j) is exists
    assert (pj_formula(n, j) > 0) is exists


@pytest.mark.parametrize("n, ranks", [(0, [0]), (1, [1]), (13, [-1, 1]), (15, [-1, 1, 3]), (21, [-3, -1, 1, 3]), (6, [0, 2])])
def test_rank_range(n, ranks):
    assert rank_range(n) == ranks


def test_rank_range_sums_to_partition_count():
    for n in range(201):
        assert sum(pj_formula(n, j) for j in rank_range(n)) == partition_count(n)
