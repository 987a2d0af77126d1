from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from osctab.errors import BoundExceededError, PartitionParseError
from osctab.partitions import (
    as_partition,
    conjugate,
    covers_down,
    covers_up,
    enumerate_syt,
    format_partition,
    num_syt,
    parse_partition,
    partitions_of_size,
    partitions_up_to,
    size,
)


@st.composite
def partition_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


def cells(partition):
    return {(r, c) for r, part in enumerate(partition) for c in range(part)}


def test_parse_format_examples():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("-") == ()
    assert parse_partition("") == ()
    assert format_partition(()) == "-"
    assert format_partition((3, 1, 1)) == "3,1,1"


def test_parse_rejects_increasing():
    with pytest.raises(PartitionParseError):
        parse_partition("1,2")
    with pytest.raises(PartitionParseError):
        parse_partition("2,-1")


def test_as_partition_strips_trailing_zeros():
    assert as_partition([3, 1, 0, 0]) == (3, 1)


def test_covers_up_examples():
    assert covers_up(()) == [(1,)]
    assert covers_up((1,)) == [(2,), (1, 1)]
    assert covers_up((2, 1)) == [(3, 1), (2, 2), (2, 1, 1)]


def test_covers_down_examples():
    assert covers_down(()) == []
    assert covers_down((2, 1)) == [(1, 1), (2,)]
    assert covers_down((3, 3)) == [(3, 2)]


def test_covers_up_brute_force():
    # independent oracle: every partition of size+1 whose diagram contains ours
    for p in partitions_up_to(7):
        expected = {
            q for q in partitions_of_size(size(p) + 1) if cells(p) <= cells(q)
        }
        assert set(covers_up(p)) == expected
        assert len(covers_up(p)) == len(set(p)) + 1


def test_covers_duality():
    for p in partitions_up_to(10):
        for q in covers_down(p):
            assert p in covers_up(q)
        for q in covers_up(p):
            assert p in covers_down(q)


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3, 1)) == (2, 1, 1)


def test_conjugate_is_diagram_transpose():
    for p in partitions_up_to(8):
        assert cells(conjugate(p)) == {(c, r) for r, c in cells(p)}


@given(partition_strategy(max_n=12))
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p


@given(partition_strategy())
def test_parse_format_roundtrip(p):
    assert parse_partition(format_partition(p)) == p


def test_num_syt_examples():
    assert num_syt(()) == 1
    assert num_syt((2, 1)) == 2
    assert num_syt((3, 2)) == 5
    assert num_syt((5, 4, 1)) == 288


def test_num_syt_conjugation_invariant():
    for p in partitions_up_to(10):
        assert num_syt(p) == num_syt(conjugate(p))


def test_enumerate_syt_examples():
    assert list(enumerate_syt(())) == [()]
    assert list(enumerate_syt((1, 1))) == [((1,), (2,))]
    fillings = list(enumerate_syt((2, 1)))
    assert len(fillings) == 2
    assert ((1, 2), (3,)) in fillings and ((1, 3), (2,)) in fillings


def test_enumerate_syt_fillings_are_standard():
    for p in partitions_up_to(6):
        for filling in enumerate_syt(p):
            entries = sorted(x for row in filling for x in row)
            assert entries == list(range(1, size(p) + 1))
            for row in filling:
                assert list(row) == sorted(row)
            for r in range(1, len(filling)):
                for c in range(len(filling[r])):
                    assert filling[r][c] > filling[r - 1][c]


def test_num_syt_matches_enumeration():
    for p in partitions_up_to(8):
        assert num_syt(p) == sum(1 for _ in enumerate_syt(p))


def test_enumerate_syt_bound():
    with pytest.raises(BoundExceededError):
        list(enumerate_syt((7, 6), max_size=12))


def test_syt_squares_sum_to_factorial():
    for m in range(9):
        assert sum(num_syt(p) ** 2 for p in partitions_of_size(m)) == factorial(m)


def test_partitions_of_size_order_and_count():
    parts4 = list(partitions_of_size(4))
    assert parts4 == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for m, expected in enumerate(counts):
        assert sum(1 for _ in partitions_of_size(m)) == expected
