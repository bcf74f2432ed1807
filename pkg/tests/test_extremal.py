import math
from fractions import Fraction

import numpy as np
import pytest

from curve.partial_sums import partial_sum_table
from extremal.lemmas import (
    ALPHA,
    dyadic_decomposition,
    hoelder_constants,
    lemma_one,
    lemma_two,
)
from extremal.search import (
    PairRecord,
    check_block_shift_law,
    check_period_shift,
    conjecture_scan,
    hoelder_upper_check,
    hoelder_violations,
    ratio_bounds,
    window_min,
)
from utils.errors import InvalidInputError


def pair_keys(records):
    return [(r.m, r.n) for r in records]


SHORT_WINDOW_PAIRS_64 = [
    ((5, 11), (1, 0, 0, -1)),
    ((13, 19), (1, 0, 0, 1)),
    ((23, 29), (0, 1, -1, 0)),
    ((35, 41), (0, -1, 1, 0)),
    ((43, 49), (0, 1, 1, 0)),
    ((47, 53), (0, 1, 1, 0)),
    ((53, 59), (-1, 0, 0, 1)),
    ((11, 21), (1, 0, 0, 1)),
]


def crosses_block(m, n):
    return m // 16 != (n - 1) // 16


def test_short_window_minimum():
    result = window_min(4, 16, 64)
    assert result.min_sq_dist == 2
    assert [((r.m, r.n), r.diff) for r in result.pairs] == SHORT_WINDOW_PAIRS_64


def test_short_window_pairs_inside_a_block():
    result = window_min(4, 16, 64)
    inside = [(r.m, r.n) for r in result.pairs if not crosses_block(r.m, r.n)]
    assert inside == [(5, 11), (23, 29), (35, 41), (53, 59)]
    crossing = [(r.m, r.n) for r in result.pairs if crosses_block(r.m, r.n)]
    assert crossing == [(13, 19), (43, 49), (47, 53), (11, 21)]


def test_short_window_up_to_80():
    result = window_min(4, 16, 80)
    assert pair_keys(result.pairs) == [
        (5, 11), (13, 19), (23, 29), (35, 41), (43, 49), (47, 53), (53, 59),
        (61, 67), (69, 75), (11, 21),
    ]
    record = next(r for r in result.pairs if (r.m, r.n) == (61, 67))
    assert record.diff == (1, 0, 0, 1)
    assert record.sq_dist == 2


def test_long_window_minimum():
    result = window_min(16, 64, 256)
    assert result.min_sq_dist == 4
    assert pair_keys(result.pairs) == [(22, 42), (214, 234)]
    assert result.pairs[0].diff == (1, 1, 1, -1)


def test_window_results_do_not_depend_on_threads():
    single = window_min(16, 64, 1024, threads=1)
    pooled = window_min(16, 64, 1024, threads=8)
    assert single == pooled


@pytest.mark.parametrize("d_lo, d_hi, n_max", [(5, 5, 64), (-1, 4, 64), (64, 80, 64)])
def test_window_rejects_empty_ranges(d_lo, d_hi, n_max):
    with pytest.raises(InvalidInputError):
        window_min(d_lo, d_hi, n_max)


def test_pair_record_ratio():
    table = partial_sum_table(64)
    record = PairRecord.from_table(table, 22, 42)
    assert record.gap == 20
    assert record.sq_ratio == Fraction(1, 5)
    assert PairRecord.from_table(table, 0, 17).sq_ratio == Fraction(25, 17)


def test_ratio_bounds():
    bounds = ratio_bounds(256)
    assert bounds.min_ratio <= Fraction(1, 5)
    assert bounds.max_ratio >= Fraction(25, 17)
    assert all(p.sq_ratio == bounds.min_ratio for p in bounds.min_pairs)
    assert all(p.sq_ratio == bounds.max_ratio for p in bounds.max_pairs)
    assert ratio_bounds(256, threads=4) == bounds


def test_ratio_bounds_needs_two_terms():
    with pytest.raises(InvalidInputError):
        ratio_bounds(1)


def test_ratio_bounds_up_to_4096():
    bounds = ratio_bounds(4096, threads=4)
    assert bounds.min_ratio == Fraction(17, 147)
    assert [((p.m, p.n), p.diff, p.sq_dist) for p in bounds.min_pairs] == [
        ((2998, 4027), (7, -5, -6, 3), 119),
    ]
    assert bounds.max_ratio == Fraction(541, 205)
    assert pair_keys(bounds.max_pairs) == [(1843, 2253), (2867, 3277)]
    assert bounds.max_pairs[0].sq_dist == 1082


def test_conjecture_scan_reports_consistently():
    scan = conjecture_scan(512)
    assert scan.conjecture_survives == (scan.min_ratio >= Fraction(1, 5))
    assert scan.above_known_max == (scan.max_ratio > Fraction(25, 17))
    assert len(scan.min_witnesses) <= 10


def test_conjecture_scan_first_values():
    scan = conjecture_scan(42)
    assert scan.min_ratio == Fraction(1, 5)
    assert pair_keys(scan.min_witnesses) == [(11, 21), (22, 42)]
    assert scan.conjecture_survives
    short = conjecture_scan(17)
    assert short.max_ratio == Fraction(5, 3)
    assert short.max_ratio >= Fraction(25, 17)
    assert pair_keys(short.max_witnesses) == [(7, 13)]


def test_conjecture_scan_first_pair_below_one_fifth():
    assert conjecture_scan(83).conjecture_survives
    scan = conjecture_scan(84)
    assert not scan.conjecture_survives
    assert scan.min_ratio == Fraction(7, 45)
    assert pair_keys(scan.below_conjectured_min) == [(39, 84)]


def test_conjecture_scan_up_to_4096():
    scan = conjecture_scan(4096)
    assert scan.conjecture_survives is False
    assert scan.min_ratio == Fraction(17, 147)
    assert pair_keys(scan.below_conjectured_min) == [(2998, 4027)]
    assert scan.above_known_max


def test_hoelder_upper_bound_holds():
    report = hoelder_upper_check(4096, threads=2)
    assert report.passed


@pytest.mark.parametrize("gap", [1, 17, 2 ** 32])
def test_hoelder_violations_are_exact(gap):
    sq = np.array([0, 23 * gap, 24 * gap], dtype=np.int64)
    assert hoelder_violations(sq, gap).tolist() == [2]


def test_block_shift_law():
    assert check_block_shift_law(64).passed


def test_period_shift():
    assert check_period_shift(64).passed


class TestLemmaOne:
    def test_table_values(self):
        result = lemma_one()
        row0 = result.table.row(0)
        assert [row0[m] for m in range(9)] == [0, 1, 2, 3, 4, 7, 6, 9, 8]
        assert -1 not in row0

    def test_bounds_hold(self):
        result = lemma_one()
        assert result.report.passed
        assert result.table.bound(0) == 9
        assert result.table.bound(1) == 8

    def test_equality_for_odd_block_at_even_offsets(self):
        result = lemma_one()
        assert -8 in result.table.equality_at(1)
        assert 8 in result.table.equality_at(1)
        assert result.report.details["equality_only_at_odd_m"][1] is False

    def test_alpha(self):
        result = lemma_one()
        assert result.alpha == ALPHA
        assert float(result.alpha) == pytest.approx(1 / 5 - 2 * math.sqrt(2) / 15, abs=1e-15)
        assert float(result.alpha) == pytest.approx(0.0114381917, abs=1e-10)
        assert ALPHA.sign() == 1

    def test_series_truncation(self):
        result = lemma_one(depth_terms=3)
        assert result.alpha_series == Fraction(1) + Fraction(1, 16) + Fraction(1, 256)
        assert result.report.details["series_gap"] > 0

    def test_rejects_empty_series(self):
        with pytest.raises(InvalidInputError):
            lemma_one(depth_terms=0)


def test_lemma_two_holds_for_gap_sixteen():
    report = lemma_two(scan_max=1024)
    assert report.passed
    assert report.details["min_sq_dist"] >= 4


def test_lemma_two_up_to_4096():
    report = lemma_two(scan_max=4096)
    assert report.passed
    assert report.details["min_sq_dist"] == 4
    assert report.details["pair_count"] == 160
    first = report.details["pairs"][0]
    assert (first.m, first.n, first.diff) == (5, 21, (2, 0, 0, 0))


def test_lemma_two_fails_for_short_gaps():
    report = lemma_two(gap=5, scan_max=64)
    assert not report.passed
    assert report.details["min_sq_dist"] == 2
    assert (report.witnesses[0].m, report.witnesses[0].n) == (5, 11)


def test_lemma_two_thread_independence():
    assert lemma_two(scan_max=512, threads=1).to_dict() == lemma_two(scan_max=512, threads=6).to_dict()


def test_hoelder_constants():
    constants = hoelder_constants()
    assert constants.a_lower == pytest.approx(2 * float(ALPHA) / math.sqrt(34))
    assert constants.a_lower == pytest.approx(0.0039233, abs=1e-7)
    assert constants.b_upper == pytest.approx(2 * (1 + math.sqrt(2)))
    assert float(constants.b_upper_sq) == pytest.approx(constants.b_upper ** 2)


class TestDyadicDecomposition:
    def test_example(self):
        assert dyadic_decomposition(5, 11).pieces == [(5, 1), (6, 2), (8, 2), (10, 1)]
        assert dyadic_decomposition(0, 16).pieces == [(0, 16)]
        assert dyadic_decomposition(7, 7).pieces == []

    @pytest.mark.parametrize("m, n", [(0, 1), (3, 200), (22, 42), (1000, 4095), (61, 67)])
    def test_pieces_are_aligned_and_cover(self, m, n):
        pieces = dyadic_decomposition(m, n).pieces
        assert sum(length for _, length in pieces) == n - m
        assert all(start % length == 0 for start, length in pieces)
        lengths = [length for _, length in pieces]
        assert all(lengths.count(x) <= 2 for x in set(lengths))

    def test_triangle_bound(self, table_4096):
        for m, n in [(3, 200), (22, 42), (1000, 4095)]:
            diff = table_4096[n] - table_4096[m]
            assert math.sqrt(int(diff @ diff)) <= dyadic_decomposition(m, n).triangle_bound + 1e-9

    def test_rejects_reversed(self):
        with pytest.raises(InvalidInputError):
            dyadic_decomposition(5, 3)
