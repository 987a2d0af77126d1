import json
from fractions import Fraction
from pathlib import Path

import pytest

from osctab.errors import BoundExceededError, EmptyEnumerationError
from osctab.laurent import LaurentPolynomial
from osctab.partitions import partitions_up_to, size
from osctab.tableaux import (
    average_size_formula,
    average_weight_enumerated,
    average_weight_formula,
    count_formula,
    enumerate_ot,
    format_tableau,
    is_oscillating_tableau,
    parse_tableau,
    skew_denominator_scan,
    weight,
    weight_generating_function,
    weight_profile,
)

GOLDENS = json.loads((Path(__file__).parent / "data" / "goldens.json").read_text())


def test_enumerate_examples():
    assert list(enumerate_ot((), (), 2)) == [((), (1,), ())]
    walks = list(enumerate_ot((), (), 4))
    assert len(walks) == 3
    assert set(walks) == {
        ((), (1,), (), (1,), ()),
        ((), (1,), (2,), (1,), ()),
        ((), (1,), (1, 1), (1,), ()),
    }
    # documented depth-first order: box additions (largest part first) before removals
    assert walks == [
        ((), (1,), (2,), (1,), ()),
        ((), (1,), (1, 1), (1,), ()),
        ((), (1,), (), (1,), ()),
    ]
    assert list(enumerate_ot((), (1,), 2)) == []


def test_enumerated_walks_are_valid():
    for shape in partitions_up_to(3):
        for length in range(size(shape) % 2, 7, 2):
            for walk in enumerate_ot((), shape, length):
                assert is_oscillating_tableau(walk)
                assert walk[0] == ()
                assert walk[-1] == shape
                assert len(walk) == length + 1


def test_weight_examples():
    assert weight(((), (1,), ())) == 1
    assert weight(((), (1,), (2,), (1,), ())) == 4
    assert weight(((), (1,), (1, 1), (1,), ())) == 4


def test_text_roundtrip():
    t = ((), (1,), (1, 1), (1,), ())
    assert format_tableau(t) == "-|1|1,1|1|-"
    assert parse_tableau("-|1|1,1|1|-") == t


def test_count_formula_examples():
    assert count_formula((), 2) == 3
    assert count_formula((1,), 0) == 1
    assert count_formula((2, 1), 1) == 20


def test_count_matches_enumeration():
    for shape in partitions_up_to(4):
        for n in range(3):
            length = size(shape) + 2 * n
            assert count_formula(shape, n) == sum(
                1 for _ in enumerate_ot((), shape, length)
            )


def test_syt_special_case():
    # length exactly |shape| forces an all-additions walk
    for shape in partitions_up_to(6):
        from osctab.partitions import num_syt

        assert sum(1 for _ in enumerate_ot((), shape, size(shape))) == num_syt(shape)


def test_average_weight_formula_examples():
    assert average_weight_formula(0, 2) == Fraction(10, 3)
    assert average_weight_formula(1, 1) == Fraction(10, 3)
    assert average_weight_formula(0, 0) == 0


def test_average_size_formula_examples():
    assert average_size_formula(0, 2) == Fraction(2, 3)
    assert average_size_formula(1, 1) == Fraction(5, 6)
    assert average_size_formula(0, 0) == 0
    for k in range(6):
        for n in range(6):
            assert average_size_formula(k, n) == Fraction(n, 3) + Fraction(k, 2)


def test_numerator_factorizations():
    # 3 * average is integral: both product forms equal the doubled numerator
    for k in range(51):
        for n in range(51):
            doubled = 4 * n * n + 3 * k * k + 8 * k * n + 2 * n + 3 * k
            assert doubled == (2 * n + 3 * k) * (2 * n + k + 1)
            assert doubled % 2 == 0
            assert (3 * average_weight_formula(k, n)).denominator == 1


def test_average_weight_enumerated_examples():
    assert average_weight_enumerated((), (), 4) == Fraction(10, 3)
    golden = GOLDENS["skew_average_1_1_2"]
    assert average_weight_enumerated((1,), (1,), 2) == Fraction(
        golden["num"], golden["den"]
    )
    with pytest.raises(EmptyEnumerationError):
        average_weight_enumerated((), (1,), 2)


def test_weight_generating_function_examples():
    assert weight_generating_function((1,), 1) == LaurentPolynomial({1: 1})
    assert weight_generating_function((), 2) == LaurentPolynomial({1: 1})
    assert weight_generating_function((), 4) == LaurentPolynomial({2: 1, 4: 2})


def test_gf_consistent_with_enumeration():
    for shape in partitions_up_to(3):
        for length in range(10):
            gf = weight_generating_function(shape, length)
            walks = list(enumerate_ot((), shape, length))
            assert gf.eval_at_one() == len(walks)
            assert gf.derivative_at_one() == sum(weight(w) for w in walks)


def test_profile_matches_enumeration_histogram():
    for start in partitions_up_to(2):
        for shape in partitions_up_to(2):
            for length in range(7):
                histogram: dict[int, int] = {}
                for walk in enumerate_ot(start, shape, length):
                    w = weight(walk)
                    histogram[w] = histogram.get(w, 0) + 1
                profile = weight_profile(start, shape, length)
                assert {w: c for w, c in enumerate(profile) if c} == histogram


def test_enumeration_cap():
    with pytest.raises(BoundExceededError):
        list(enumerate_ot((), (), 8, max_output=10))


def test_skew_scan_plain_slice():
    golden = GOLDENS["skew_scan_0_4_8"]
    report = skew_denominator_scan(0, 4, 8)
    assert report.cases == golden["cases"]
    assert report.max_denominator == golden["max_denominator"]
    assert report.all_denominators_divide_3 is golden["all_divide_3"]


def test_skew_scan_finds_large_denominator():
    golden = GOLDENS["skew_scan_3_3_6"]
    report = skew_denominator_scan(3, 3, 6)
    assert report.max_denominator == golden["max_denominator"]
    witness = report.witness_exceeding_3
    expected = golden["witness_exceeding_3"]
    assert witness is not None
    assert list(witness.start) == expected["mu"]
    assert list(witness.shape) == expected["shape"]
    assert witness.length == expected["length"]
    assert str(witness.average) == expected["average"]


def test_skew_scan_trivial_case():
    report = skew_denominator_scan(0, 0, 0)
    assert report.cases == 1
    assert report.max_denominator == 1


def test_scan_agrees_with_enumerated_averages():
    report = skew_denominator_scan(2, 2, 4, keep_records=True)
    for case in report.records:
        assert case.average == average_weight_enumerated(
            case.start, case.shape, case.length
        )
