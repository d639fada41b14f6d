import pytest
from hypothesis import given, strategies as st

from sqw.errors import PrefixTooShort
from sqw.partitions import (ParamSeq, conjugate, contains, differences, enumerate_partitions,
                            grid_point_lin, grid_point_q, interlaces, interlacing_above,
                            interlacing_below, part, partition, partitions_in_box)
from sqw.scalar import Q

from strategies import partitions_small

# partition numbers p(0..8)
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partition_canonical_form():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])


def test_part_reads_zero_past_end():
    assert part((3, 1), 1) == 3 and part((3, 1), 3) == 0 and part((), 1) == 0


def test_interlacing_examples():
    assert interlaces((3, 1), (2,))
    assert not interlaces((3, 1), (3, 2))
    assert interlaces((), ())


def test_enumeration_examples():
    assert enumerate_partitions(2, 2) == ((), (1,), (2,), (1, 1))
    assert enumerate_partitions(1, 3) == ((), (1,), (2,), (3,))
    assert enumerate_partitions(0, 5) == ((),)


def test_enumeration_counts():
    for w, count in enumerate(PARTITION_NUMBERS):
        assert sum(1 for lam in enumerate_partitions(w, w) if sum(lam) == w) == count


def test_enumeration_order_is_weight_then_revlex():
    parts = enumerate_partitions(3, 5)
    keys = [(sum(l), tuple(-p for p in l)) for l in parts]
    assert keys == sorted(keys)


def test_box_enumeration():
    assert sorted(partitions_in_box(2, 2)) == sorted([(), (1,), (2,), (1, 1), (2, 1), (2, 2)])


@given(partitions_small)
def test_conjugation_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(partitions_small)
def test_interlacing_generators(lam):
    below = list(interlacing_below(lam))
    assert all(interlaces(lam, mu) for mu in below)
    assert len(below) == len(set(below))
    count = 1
    for r in range(1, len(lam) + 1):
        count *= part(lam, r) - part(lam, r + 1) + 1
    assert len(below) == count
    for nu in interlacing_above(lam, part(lam, 1) + 2):
        assert interlaces(nu, lam) and contains(nu, lam)


def test_differences():
    assert differences((4, 2, 1), 4) == [2, 1, 1, 0]


def test_param_sequence_views():
    A = ParamSeq.of([2, 3, 5, 7], "a")
    assert A[0] == 2 and A.shift(2)[0] == 5 and A.bar()[1] == Q(1, 3)
    assert A.shift(1).bar().prefix(2) == (Q(1, 3), Q(1, 5))
    assert A.shift(1).materialize().values == (3, 5, 7)
    with pytest.raises(PrefixTooShort):
        A.shift(2)[2]


def test_grid_points():
    A = ParamSeq.of([9, 3, 5], "a")
    assert grid_point_q(A, 2, (), 2) == (3, 5)
    assert grid_point_q(A, 2, (2, 1), 2) == (6, 10)
    assert grid_point_q(A, Q(1, 3), (1,), 1) == (1,)
    C = ParamSeq.of([9, 3, 5], "c")
    assert grid_point_lin(C, 2, (), 2) == (3, 5)
    assert grid_point_lin(C, 2, (2, 1), 2) == (5, 7)
    assert grid_point_lin(C, 1, (3,), 1) == (6,)
