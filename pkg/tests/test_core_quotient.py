import random

import pytest
from hypothesis import given

from bgrank import (
    Decomposition,
    DominoPosition,
    InvalidDominoError,
    Partition,
    Staircase,
    bg_rank,
    compose,
    core_height_for_rank,
    decompose,
    is_staircase,
    remove_domino,
    removable_dominoes,
    staircase_bg_rank,
    two_core_by_removal,
)
from bgrank.core_quotient import Orientation, random_chooser
from conftest import brute_partitions, cells, diagram_to_partition, is_diagram, partitions

H, V = Orientation.HORIZONTAL, Orientation.VERTICAL


def removals_by_cells(p):
    """Oracle: try every adjacent cell pair and keep those leaving a diagram."""
    found = set()
    cs = cells(p)
    for i, j in cs:
        for orientation, other in ((H, (i, j + 1)), (V, (i + 1, j))):
            if other in cs and is_diagram(cs - {(i, j), other}):
                found.add((DominoPosition(i, j, orientation), diagram_to_partition(cs - {(i, j), other})))
    return found


def test_removable_examples():
    assert removable_dominoes(Partition((2,))) == [DominoPosition(1, 1, H)]
    assert removable_dominoes(Partition((1, 1))) == [DominoPosition(1, 1, V)]
    assert removable_dominoes(Partition((2, 1))) == []
    assert removable_dominoes(Partition((2, 2))) == [DominoPosition(1, 2, V), DominoPosition(2, 1, H)]


def test_remove_examples():
    assert remove_domino(Partition((2,)), DominoPosition(1, 1, H)) == Partition()
    assert remove_domino(Partition((2, 2)), DominoPosition(1, 2, V)) == Partition((1, 1))
    assert remove_domino(Partition((2, 2)), DominoPosition(2, 1, H)) == Partition((2,))


def test_remove_rejects_invalid_position():
    # the first column of 2+2 cannot go: it would leave cells hanging
    with pytest.raises(InvalidDominoError):
        remove_domino(Partition((2, 2)), DominoPosition(1, 1, V))
    with pytest.raises(InvalidDominoError):
        remove_domino(Partition((2, 1)), DominoPosition(1, 1, H))


def test_removable_matches_cell_oracle():
    for n in range(15):
        for parts in brute_partitions(n):
            p = Partition(parts)
            got = {(d, remove_domino(p, d)) for d in removable_dominoes(p)}
            assert got == removals_by_cells(p)


def test_domino_removal_preserves_bg_rank(small_partitions):
    for n in range(21):
        for p in small_partitions[n]:
            rank = bg_rank(p)
            for d in removable_dominoes(p):
                assert bg_rank(remove_domino(p, d)) == rank


@pytest.mark.parametrize(
    "parts, core",
    [((4, 3, 3, 1, 1, 1), (2, 1)), ((3, 2, 1), (3, 2, 1)), ((2, 2), ()), ((), ())],
)
def test_two_core_examples(parts, core):
    assert two_core_by_removal(Partition(parts)) == Partition(core)


def test_core_independent_of_removal_order():
    rng = random.Random(20261018)
    for n in range(19):
        for parts in brute_partitions(n):
            p = Partition(parts)
            core = two_core_by_removal(p)
            assert is_staircase(core) is not None
            assert core == decompose(p).core.as_partition()
            for _ in range(50):
                assert two_core_by_removal(p, random_chooser(rng)) == core


def test_decompose_examples():
    assert decompose(Partition((2, 2))) == Decomposition(Staircase(0), Partition((1,)), Partition((1,)))
    assert decompose(Partition((3, 2, 1))) == Decomposition(Staircase(3), Partition(), Partition())
    assert decompose(Partition()) == Decomposition(Staircase(0), Partition(), Partition())
    d = decompose(Partition((4, 3, 3, 1, 1, 1)))
    assert d.core.height == 2
    assert d.q0.weight + d.q1.weight == 5


def test_compose_examples():
    assert compose(Decomposition(Staircase(0), Partition((1,)), Partition((1,)))) == Partition((2, 2))
    assert compose(Decomposition(Staircase(3), Partition(), Partition())) == Partition((3, 2, 1))
    assert compose(Decomposition(Staircase(0), Partition(), Partition())) == Partition()


def test_decomposition_json():
    assert decompose(Partition((2, 2))).to_dict() == {"core_height": 0, "q0": "1", "q1": "1"}


def test_round_trip_and_weight_identity():
    for n in range(23):
        for parts in brute_partitions(n):
            p = Partition(parts)
            d = decompose(p)
            assert compose(d) == p
            assert d.weight == n
            assert staircase_bg_rank(d.core.height) == bg_rank(p)


def test_compose_is_a_bijection_onto_partitions():
    # every triple of composed weight <= 22 comes back unchanged, and distinct triples give distinct partitions
    for n in range(23):
        seen = set()
        for k in range(8):
            core = Staircase(k)
            rest = n - core.weight
            if rest < 0 or rest % 2:
                continue
            half = rest // 2
            for a in range(half + 1):
                for q0 in brute_partitions(a):
                    for q1 in brute_partitions(half - a):
                        d = Decomposition(core, Partition(q0), Partition(q1))
                        p = compose(d)
                        assert p.weight == n
                        assert decompose(p) == d
                        seen.add(p)
        assert len(seen) == sum(1 for _ in brute_partitions(n))


@given(partitions(max_weight=80))
def test_round_trip_random(p):
    d = decompose(p)
    assert compose(d) == p
    assert d.core.as_partition() == two_core_by_removal(p)


@pytest.mark.parametrize("j, height", [(1, 1), (-1, 2), (0, 0), (2, 3), (-2, 4)])
def test_core_height_for_rank(j, height):
    assert core_height_for_rank(j) == height


def test_core_height_weight():
    for j in range(-10, 11):
        k = core_height_for_rank(j)
        assert Staircase(k).weight == j * (2 * j - 1)
        assert staircase_bg_rank(k) == j
