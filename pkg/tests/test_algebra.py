from fractions import Fraction

import numpy as np
import pytest

from algebra.dyadic import Dyadic, vec_dyadic
from algebra.eigen import (
    EXPECTED_T_PRIME,
    FRAME,
    P0,
    Q0,
    Surd,
    eigen_relations,
    m_prime,
    project_plane_P,
    reflect_across_w0,
    reflect_through_P,
    t_prime,
)
from algebra.matrices import (
    Mat4,
    apply,
    apply_T_inverse,
    matrix_identities,
    matrix_M,
    matrix_T,
    walsh,
)
from utils.errors import InvalidInputError


class TestDyadic:
    def test_canonical_form(self):
        assert Dyadic(6, 2) == Dyadic(3, 1)
        assert Dyadic(8, 3) == Dyadic(1, 0)
        assert Dyadic(0, 5).exponent == 0

    def test_arithmetic(self):
        half = Dyadic(1, 1)
        assert half + half == Dyadic(1)
        assert Dyadic(3, 2) - Dyadic(1, 2) == half
        assert Dyadic(3, 1) * Dyadic(1, 2) == Dyadic(3, 3)
        assert (half * 4).is_integer()

    def test_conversions(self):
        assert Dyadic.from_fraction(Fraction(3, 8)) == Dyadic(3, 3)
        assert Dyadic.from_float(0.75).to_fraction() == Fraction(3, 4)
        assert str(Dyadic(3, 3)) == "3/8"
        with pytest.raises(InvalidInputError):
            Dyadic.from_fraction(Fraction(1, 3))

    def test_negative_exponent_rejected(self):
        with pytest.raises(InvalidInputError):
            Dyadic(1, -1)


def test_walsh_small_orders():
    assert walsh(1).tolist() == [[1, 1], [1, -1]]
    assert walsh(2).tolist() == [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_walsh_is_hadamard(n):
    w = walsh(n)
    assert np.array_equal(w @ w.T, (2 ** n) * np.eye(2 ** n, dtype=np.int64))
    half = w.shape[0] // 2
    if n > 1:
        prev = walsh(n - 1)
        assert np.array_equal(w[:half, :half], prev)
        assert np.array_equal(w[half:, half:], -prev)


def test_walsh_limits(env_settings):
    with pytest.raises(InvalidInputError):
        walsh(0)
    env_settings(QH_WALSH_MAX_ORDER=3)
    with pytest.raises(InvalidInputError):
        walsh(4)


def test_matrix_identities_hold():
    M, T = matrix_M(), matrix_T()
    assert T @ T == M
    assert M @ M == Mat4.identity(4)
    assert T.power(4) == Mat4.identity(4)
    assert matrix_identities().passed


def test_apply_examples():
    M, T = matrix_M(), matrix_T()
    assert apply(M, (1, 0, 0, 0)) == vec_dyadic((1, 1, 1, 1))
    assert apply(T, (3, 1, 1, 1)) == vec_dyadic((4, 2, 2, 0))
    assert apply(M, P0) == vec_dyadic((2, 2, 2, -2))


def test_apply_T_inverse():
    assert apply_T_inverse((4, 2, 2, 0)) == vec_dyadic((3, 1, 1, 1))
    half = apply_T_inverse((1, 0, 0, 0))
    assert apply(matrix_T(), half) == vec_dyadic((1, 0, 0, 0))
    assert apply_T_inverse((8, 4, -4, 12), times=4) == vec_dyadic((2, 1, -1, 3))


def test_apply_T_inverse_round_trips_random_vectors():
    rng = np.random.default_rng(7)
    T = matrix_T()
    for v in rng.integers(-50, 50, size=(50, 4)).tolist():
        assert apply_T_inverse(apply(T, v)) == vec_dyadic(v)


class TestSurd:
    def test_field_operations(self):
        r2 = Surd(0, 1)
        assert r2 * r2 == Surd(2)
        assert (Surd(1, 1) * Surd(1, -1)) == Surd(-1)
        assert float(Surd(12, 8)) == pytest.approx((2 * (1 + 2 ** 0.5)) ** 2)

    def test_sign(self):
        assert Surd(Fraction(1, 5), Fraction(-2, 15)).sign() == 1
        assert Surd(-3, 2).sign() == -1
        assert Surd(3, -2).sign() == 1
        assert Surd().sign() == 0


def test_eigen_relations_pass():
    report = eigen_relations()
    assert report.passed, report.witnesses


def test_w_basis_is_indirect():
    assert FRAME.w_orientation() == -1
    v = np.array([[float(x) for x in vec] for vec in FRAME.v_basis])
    assert np.linalg.det(v) == pytest.approx(1.0)


def test_matrices_in_eigen_bases():
    diagonal = [m_prime()[i][i] for i in range(4)]
    assert diagonal == [Surd(2), Surd(2), Surd(-2), Surd(-2)]
    assert t_prime() == EXPECTED_T_PRIME


def test_projection_onto_P():
    assert np.allclose(project_plane_P(P0), P0)
    assert np.allclose(project_plane_P(Q0), 0.0)


def test_reflection_through_P_is_half_M():
    rng = np.random.default_rng(11)
    half_m = matrix_M().to_array() / 2.0
    for v in rng.normal(size=(100, 4)):
        assert np.allclose(reflect_through_P(v), half_m @ v, atol=1e-12)


def test_w0_reflection_matches_T_over_sqrt2_on_P():
    t_scaled = matrix_T().to_array() / np.sqrt(2.0)
    rng = np.random.default_rng(3)
    for a, b in rng.normal(size=(20, 2)):
        v = a * np.array(P0, dtype=float) + b * np.array((1, 0, 0, 1), dtype=float)
        assert np.allclose(reflect_across_w0(v), t_scaled @ v, atol=1e-12)
