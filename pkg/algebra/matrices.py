"""Walsh matrices and the two fixed 4x4 matrices M and T.

M is the order-4 Walsh matrix; T is its square root (T @ T == M).
Matrices act on coordinates in the basis u0..u3.
"""
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from algebra.dyadic import Dyadic, Number, Vec4Dyadic, vec_halve
from utils.config import get_settings
from utils.errors import InvalidInputError
from utils.reports import CheckReport

# Constants
HADAMARD_2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
T_ROWS = (
    (1, 0, 1, 0),
    (1, 0, -1, 0),
    (0, 1, 0, 1),
    (0, 1, 0, -1),
)


@dataclass(frozen=True)
class Mat4:
    """A 4x4 integer matrix stored as a tuple of row tuples."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if len(rows) != 4 or any(len(row) != 4 for row in rows):
            raise InvalidInputError("Mat4 needs exactly 4 rows of 4 entries")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, scale: int = 1) -> "Mat4":
        return cls(tuple(tuple(scale if i == j else 0 for j in range(4)) for i in range(4)))

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def __matmul__(self, other: "Mat4") -> "Mat4":
        return Mat4(tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(4)) for j in range(4))
            for i in range(4)
        ))

    def __mul__(self, scalar: int) -> "Mat4":
        return Mat4(tuple(tuple(scalar * x for x in row) for row in self.rows))

    __rmul__ = __mul__

    def transpose(self) -> "Mat4":
        return Mat4(tuple(zip(*self.rows)))

    def power(self, exponent: int) -> "Mat4":
        if exponent < 0:
            raise InvalidInputError("Only nonnegative integer powers of a Mat4 are exact")
        result = Mat4.identity()
        for _ in range(exponent):
            result = result @ self
        return result


def walsh(order_exponent: int) -> np.ndarray:
    """Walsh matrix of size 2**n as the n-th Kronecker power of [[1, 1], [1, -1]]."""
    if order_exponent < 1:
        raise InvalidInputError(f"Walsh order exponent must be >= 1, got {order_exponent}")
    limit = get_settings().walsh_max_order
    if order_exponent > limit:
        raise InvalidInputError(
            f"Walsh order exponent {order_exponent} exceeds the configured limit {limit}"
        )
    result = HADAMARD_2
    for _ in range(order_exponent - 1):
        result = np.kron(result, HADAMARD_2)
    return result


WALSH_4 = tuple(tuple(int(x) for x in row) for row in walsh(2).tolist())


def matrix_M() -> Mat4:
    return Mat4(WALSH_4)


def matrix_T() -> Mat4:
    return Mat4(T_ROWS)


def apply(mat: Mat4, v: Sequence[Number]) -> Vec4Dyadic:
    """Exact product mat @ v; integer entries of v are promoted to dyadics."""
    coords = [Dyadic.of(x) for x in v]
    if len(coords) != 4:
        raise InvalidInputError("apply() needs a 4-vector")
    return tuple(
        sum((c * x for c, x in zip(row, coords) if c), Dyadic(0)) for row in mat.rows
    )


def apply_int(mat: Mat4, v: Iterable[int]) -> Tuple[int, ...]:
    v = tuple(v)
    return tuple(sum(c * x for c, x in zip(row, v)) for row in mat.rows)


_T_CUBED = matrix_T().power(3)


def apply_T_inverse(v: Sequence[Number], times: int = 1) -> Vec4Dyadic:
    """T^-times @ v, using T^-1 = T^3 / 4 and T^-4 = I / 4."""
    if times < 0:
        raise InvalidInputError("times must be nonnegative")
    result = tuple(Dyadic.of(x) for x in v)
    for _ in range(times % 4):
        result = vec_halve(apply(_T_CUBED, result), 2)
    return vec_halve(result, 2 * (times // 4))


def matrix_identities(max_walsh: int = 4) -> CheckReport:
    """T^2 = M, M^2 = 4I, T^4 = 4I, (M/2)(M/2)^T = I and Walsh orthogonality."""
    M, T = matrix_M(), matrix_T()
    checks = {
        "T^2 = M": (T @ T) == M,
        "M^2 = 4I": (M @ M) == Mat4.identity(4),
        "T^4 = 4I": T.power(4) == Mat4.identity(4),
        "M M^T = 4I": (M @ M.transpose()) == Mat4.identity(4),
        "T T^T = 2I": (T @ T.transpose()) == Mat4.identity(2),
    }
    for n in range(1, max_walsh + 1):
        w = walsh(n)
        checks[f"walsh({n}) orthogonal"] = bool(
            np.array_equal(w @ w.T, (1 << n) * np.eye(1 << n, dtype=np.int64))
        )
    failed = [name for name, ok in checks.items() if not ok]
    return CheckReport(
        name="matrix_identities",
        passed=not failed,
        details={"checked": list(checks)},
        witnesses=failed,
    )
