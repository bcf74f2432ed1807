"""Eigen-structure of M and T: the planes P (eigenvalue 2) and Q (eigenvalue -2).

Vectors that involve sqrt(2) are held exactly as ``Surd`` coordinates so the
identities can be checked without rounding; projections and reflections used
by the sphere code run in floating point.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

import numpy as np

from algebra.matrices import Mat4, apply_int, matrix_M, matrix_T
from utils.reports import CheckReport

Rational = Union[int, Fraction]

# Constants
SQRT2 = float(np.sqrt(2.0))
P0 = (1, 1, 1, -1)
P1 = (1, 0, 0, 1)
Q0 = (1, -1, -1, -1)
Q1 = (0, 1, -1, 0)


@dataclass(frozen=True)
class Surd:
    """a + b*sqrt(2) with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def of(cls, value: Union["Surd", Rational]) -> "Surd":
        return value if isinstance(value, Surd) else cls(Fraction(value))

    def __add__(self, other):
        other = Surd.of(other)
        return Surd(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Surd.of(other))

    def __rsub__(self, other):
        return Surd.of(other) - self

    def __mul__(self, other):
        other = Surd.of(other)
        return Surd(self.a * other.a + 2 * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(2)."""
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 0 if a == 0 and b == 0 else 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2
        dominant = a if a * a > 2 * b * b else b
        return 1 if dominant > 0 else -1

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * SQRT2

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt2"


SQRT2_SURD = Surd(0, 1)
HALF_SQRT2 = Surd(0, Fraction(1, 2))

SurdVec = Tuple[Surd, Surd, Surd, Surd]


def surd_scale(v: Sequence, factor) -> SurdVec:
    return tuple(Surd.of(x) * factor for x in v)


def surd_add(u: Sequence, v: Sequence) -> SurdVec:
    return tuple(Surd.of(x) + y for x, y in zip(u, v))


def surd_sub(u: Sequence, v: Sequence) -> SurdVec:
    return tuple(Surd.of(x) - y for x, y in zip(u, v))


def surd_dot(u: Sequence, v: Sequence) -> Surd:
    return sum((Surd.of(x) * y for x, y in zip(u, v)), Surd())


def surd_apply(mat: Mat4, v: Sequence) -> SurdVec:
    return tuple(sum((Surd.of(v[j]) * c for j, c in enumerate(row) if c), Surd()) for row in mat.rows)


def surd_vec_to_float(v: Sequence) -> np.ndarray:
    return np.array([float(x) for x in v])


@dataclass(frozen=True)
class EigenFrame:
    """Integer eigenvectors of M plus the orthonormal v and w bases built from them.

    v0 = p0/2, v1 = p1/sqrt2, v2 = q0/2, v3 = q1/sqrt2.
    w0, w1 = (v0 +- v1)/sqrt2 are the eigenvectors of T for +-sqrt2; w2 = v2 and
    w3 = v3 make T read sqrt2 * [[1,0,0,0],[0,-1,0,0],[0,0,0,-1],[0,0,1,0]].
    That w basis has determinant -1.
    """

    p0: Tuple[int, ...] = P0
    p1: Tuple[int, ...] = P1
    q0: Tuple[int, ...] = Q0
    q1: Tuple[int, ...] = Q1

    @property
    def integer_vectors(self) -> Tuple[Tuple[int, ...], ...]:
        return self.p0, self.p1, self.q0, self.q1

    @property
    def v_basis(self) -> Tuple[SurdVec, ...]:
        return (
            surd_scale(self.p0, Fraction(1, 2)),
            surd_scale(self.p1, HALF_SQRT2),
            surd_scale(self.q0, Fraction(1, 2)),
            surd_scale(self.q1, HALF_SQRT2),
        )

    @property
    def w_basis(self) -> Tuple[SurdVec, ...]:
        v0, v1, v2, v3 = self.v_basis
        return (
            surd_scale(surd_add(v0, v1), HALF_SQRT2),
            surd_scale(surd_sub(v0, v1), HALF_SQRT2),
            v2,
            v3,
        )

    def w_orientation(self) -> int:
        return int(round(np.linalg.det(np.array([surd_vec_to_float(w) for w in self.w_basis]))))


FRAME = EigenFrame()


def _matrix_in_basis(mat: Mat4, basis: Sequence[SurdVec]) -> Tuple[Tuple[Surd, ...], ...]:
    # Entry (i, j) is <b_i, mat b_j>; exact because the basis is orthonormal.
    images = [surd_apply(mat, b) for b in basis]
    return tuple(tuple(surd_dot(basis[i], images[j]) for j in range(4)) for i in range(4))


def m_prime() -> Tuple[Tuple[Surd, ...], ...]:
    """M in the v basis; equals diag(2, 2, -2, -2)."""
    return _matrix_in_basis(matrix_M(), FRAME.v_basis)


def t_prime() -> Tuple[Tuple[Surd, ...], ...]:
    """T in the w basis."""
    return _matrix_in_basis(matrix_T(), FRAME.w_basis)


EXPECTED_M_PRIME = tuple(
    tuple(Surd(d if i == j else 0) for j in range(4)) for i, d in enumerate((2, 2, -2, -2))
)
_T_PRIME_PATTERN = ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 0, -1), (0, 0, 1, 0))
EXPECTED_T_PRIME = tuple(tuple(SQRT2_SURD * x for x in row) for row in _T_PRIME_PATTERN)


def eigen_relations() -> CheckReport:
    """M p = 2p on P, M q = -2q on Q, orthogonality, norms, T on the eigenvectors and the w basis."""
    M, T = matrix_M(), matrix_T()
    frame = FRAME
    failures = []

    def expect(label, actual, expected):
        if tuple(actual) != tuple(expected):
            failures.append({"relation": label, "actual": actual, "expected": expected})

    for name, vec in (("p0", frame.p0), ("p1", frame.p1)):
        expect(f"M {name} = 2 {name}", apply_int(M, vec), tuple(2 * x for x in vec))
    for name, vec in (("q0", frame.q0), ("q1", frame.q1)):
        expect(f"M {name} = -2 {name}", apply_int(M, vec), tuple(-2 * x for x in vec))

    expect("T p0 = 2 p1", apply_int(T, frame.p0), tuple(2 * x for x in frame.p1))
    expect("T p1 = p0", apply_int(T, frame.p1), frame.p0)
    expect("T q0 = 2 q1", apply_int(T, frame.q0), tuple(2 * x for x in frame.q1))
    expect("T q1 = -q0", apply_int(T, frame.q1), tuple(-x for x in frame.q0))

    vectors = frame.integer_vectors
    gram = [[sum(a * b for a, b in zip(x, y)) for y in vectors] for x in vectors]
    expect("norms^2", [gram[i][i] for i in range(4)], [4, 2, 4, 2])
    off_diagonal = [(i, j) for i in range(4) for j in range(4) if i != j and gram[i][j]]
    expect("pairwise orthogonal", off_diagonal, [])

    for i, w in enumerate(frame.w_basis):
        for j, w2 in enumerate(frame.w_basis):
            dot = surd_dot(w, w2)
            if dot != Surd(1 if i == j else 0):
                failures.append({"relation": f"<w{i}, w{j}>", "actual": str(dot)})

    w0, w1 = frame.w_basis[:2]
    expect("T w0 = sqrt2 w0", surd_apply(T, w0), surd_scale(w0, SQRT2_SURD))
    expect("T w1 = -sqrt2 w1", surd_apply(T, w1), surd_scale(w1, -SQRT2_SURD))
    expect("M' = diag(2,2,-2,-2)", m_prime(), EXPECTED_M_PRIME)
    expect("T' in w basis", t_prime(), EXPECTED_T_PRIME)

    return CheckReport(
        name="eigen_relations",
        passed=not failures,
        details={"w_orientation": frame.w_orientation()},
        witnesses=[{k: str(v) if k != "relation" else v for k, v in f.items()} for f in failures],
    )


# Floating projections

_P_BASIS = np.array([P0, P1], dtype=float)
_P_PROJECTOR = _P_BASIS.T @ np.diag([1 / 4, 1 / 2]) @ _P_BASIS
_Q_BASIS = np.array([Q0, Q1], dtype=float)
_Q_PROJECTOR = _Q_BASIS.T @ np.diag([1 / 4, 1 / 2]) @ _Q_BASIS
W0 = surd_vec_to_float(FRAME.w_basis[0])


def project_plane_P(v: Sequence[float]) -> np.ndarray:
    return _P_PROJECTOR @ np.asarray(v, dtype=float)


def project_plane_Q(v: Sequence[float]) -> np.ndarray:
    return _Q_PROJECTOR @ np.asarray(v, dtype=float)


def reflect_through_P(v: Sequence[float]) -> np.ndarray:
    """Orthogonal symmetry fixing P and negating Q; equal to (M/2) v."""
    v = np.asarray(v, dtype=float)
    return 2.0 * project_plane_P(v) - v


def reflect_across_w0(v: Sequence[float]) -> np.ndarray:
    """Within P, the reflection fixing the line of w0; the Q component is left alone."""
    v = np.asarray(v, dtype=float)
    in_p = project_plane_P(v)
    return 2.0 * np.dot(v, W0) * W0 - in_p + (v - in_p)
