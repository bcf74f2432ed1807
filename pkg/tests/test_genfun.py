import numpy as np
import pytest

from genfun.columns import (
    column_series,
    coefficient_check,
    decomposition_check,
    functional_equation_check,
    letter_columns,
    norm_identity_check,
)
from genfun.polynomials import IntPoly, PolyVec4, norm_identity, norm_sum, quadruple, step, unit_circle
from sequence.generators import prefix, prefix_array
from utils.errors import InvalidInputError


class TestIntPoly:
    def test_trims_trailing_zeros(self):
        assert IntPoly((1, 2, 0, 0)).degree == 1
        assert IntPoly((0, 0)).coefficients == ()

    def test_shift_and_arithmetic(self):
        p = IntPoly((1, -1))
        assert p.shifted(2).coefficients == (0, 0, 1, -1)
        assert (p + IntPoly((0, 1, 3))).coefficients == (1, 0, 3)
        assert (p - p).coefficients == ()
        assert p.scaled(-2).coefficients == (-2, 2)

    def test_evaluation(self):
        assert IntPoly((1, 2))(2.0) == pytest.approx(5.0)
        assert IntPoly((1, 1, 1, 1))(1j) == pytest.approx(0.0)


def test_level_one_quadruple():
    quad = quadruple(1)
    assert quad.P.coefficients == (1, 1, 1, 1)
    assert quad.Q.coefficients == (1, -1, 1, -1)
    assert quad.R.coefficients == (1, 1, -1, -1)
    assert quad.T.coefficients == (1, -1, -1, 1)
    assert quad.level == 1


def test_step_from_base():
    assert step(PolyVec4.base()) == quadruple(1)


def test_P_holds_the_sequence():
    for level in range(5):
        expected = [int(s) for s in prefix(4 ** level)]
        assert list(quadruple(level).P.coefficients) == expected


def test_quadruple_depth_limit(env_settings):
    env_settings(QH_GENFUN_MAX_DEPTH=2)
    assert quadruple(2).level == 2
    with pytest.raises(InvalidInputError):
        quadruple(3)


def test_norm_identity_at_i():
    quad = quadruple(1)
    values = [abs(poly(1j)) ** 2 for poly in quad]
    assert values == pytest.approx([0.0, 0.0, 8.0, 8.0], abs=1e-12)
    assert norm_sum(quad, [1j])[0] == pytest.approx(16.0)


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_norm_identity_on_circle(level):
    assert norm_identity(level, samples=128) <= 1e-9 * 4 ** (level + 1)


def test_norm_identity_rejects_level_zero():
    with pytest.raises(InvalidInputError):
        norm_identity(0)


def test_unit_circle_points():
    points = unit_circle(8)
    assert np.allclose(np.abs(points), 1.0)
    assert points[2] == pytest.approx(1j)


def test_first_column_is_the_sequence():
    assert column_series(0, 256) == prefix(256)


def test_columns_from_letters_match_columns_from_signs():
    direct = np.array([[int(s) for s in column_series(c, 256)] for c in range(4)])
    assert np.array_equal(letter_columns(256), direct)


def test_column_series_rejects_bad_index():
    with pytest.raises(InvalidInputError):
        column_series(4, 8)


def test_column_checks_pass():
    assert functional_equation_check(1024).passed
    assert decomposition_check(1024).passed
    assert coefficient_check(5).passed
    assert norm_identity_check(4).passed


def test_functional_equation_detects_corruption(monkeypatch):
    import genfun.columns as columns

    def corrupted(length):
        signs = prefix_array(length).copy()
        signs[4 * 9 + 2] = -signs[4 * 9 + 2]
        return signs

    monkeypatch.setattr(columns, "prefix_array", corrupted)
    report = columns.functional_equation_check(64)
    assert not report.passed
    assert report.witnesses


def test_decomposition_check_compares_letter_columns(monkeypatch):
    import genfun.columns as columns

    def corrupted(length):
        signs = prefix_array(length).copy()
        signs[4 * 9 + 2] = -signs[4 * 9 + 2]
        return signs

    monkeypatch.setattr(columns, "prefix_array", corrupted)
    report = columns.decomposition_check(64)
    assert not report.passed
    letters = [w for w in report.witnesses if w["relation"] == "S0 letters"]
    assert letters == [{"relation": "S0 letters", "column": 2, "index": 9}]
