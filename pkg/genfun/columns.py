"""Column series f_c(z) = sum_m a_{4m+c} z^m and the equation F(z) = M(z) F(z^4)."""
from typing import List

import numpy as np

from algebra.matrices import WALSH_4
from genfun.polynomials import norm_identity, quadruple
from sequence.generators import prefix_array
from sequence.signs import Sign
from sequence.substitution import S0, fixed_point
from utils.errors import InvalidInputError
from utils.reports import CheckReport

# Constants
# relative tolerance by level for the floating norm identity
NORM_TOLERANCES = {1: 1e-9, 2: 1e-9, 3: 1e-9, 4: 1e-9, 5: 1e-6, 6: 1e-6}

_W = np.array(WALSH_4, dtype=np.int8)


def _columns(length: int) -> np.ndarray:
    """Shape (4, length): row c holds the first ``length`` coefficients of f_c."""
    if length < 1:
        raise InvalidInputError("length must be positive")
    return prefix_array(4 * length).reshape(length, 4).T


def column_series(c: int, length: int) -> List[Sign]:
    if c not in (0, 1, 2, 3):
        raise InvalidInputError(f"column index must be 0..3, got {c}")
    return [Sign(int(x)) for x in _columns(length)[c]]


def letter_columns(length: int) -> np.ndarray:
    """Same columns, read off the S0 fixed word: letter +/-x at m gives +/- W4[x][c]."""
    word = fixed_point(S0, length)
    signs = np.array([int(letter.sign) for letter in word], dtype=np.int8)
    rows = _W[[letter.index for letter in word]]
    return (signs[:, None] * rows).T


def functional_equation_check(length: int) -> CheckReport:
    """f_c[4m + j] == W4[c][j] f_j[m] for every coefficient index below ``length``."""
    cols = _columns(length)
    q = np.arange(length)
    m, j = q // 4, q % 4
    witnesses = []
    for c in range(4):
        expected = _W[c, j] * cols[j, m]
        bad = np.flatnonzero(cols[c] != expected)
        if bad.size:
            witnesses.append({"column": c, "index": int(bad[0]),
                              "expected": int(expected[bad[0]]), "actual": int(cols[c, bad[0]])})
    return CheckReport(
        name="functional_equation",
        passed=not witnesses,
        details={"coefficients": length},
        witnesses=witnesses,
    )


def decomposition_check(length: int) -> CheckReport:
    """f(z) = f_0(z^4) + z f_1(z^4) + z^2 f_2(z^4) + z^3 f_3(z^4), f_0 = f, and the S0 letters agree."""
    cols = _columns(length)
    interleaved = cols.T.reshape(-1)
    sequence = prefix_array(4 * length)
    witnesses = []
    bad = np.flatnonzero(interleaved != sequence)
    if bad.size:
        witnesses.append({"relation": "interleave", "index": int(bad[0])})
    bad = np.flatnonzero(cols[0] != sequence[:length])
    if bad.size:
        witnesses.append({"relation": "f0 = f", "index": int(bad[0])})
    bad = np.argwhere(letter_columns(length) != cols)
    if bad.size:
        witnesses.append({"relation": "S0 letters", "column": int(bad[0][0]), "index": int(bad[0][1])})
    return CheckReport(name="column_decomposition", passed=not witnesses,
                       details={"coefficients": length}, witnesses=witnesses)


def coefficient_check(max_level: int = 6) -> CheckReport:
    """Coefficients of P_n are the first 4^n terms of the sequence."""
    witnesses = []
    for level in range(max_level + 1):
        coeffs = quadruple(level).P.to_array()
        expected = prefix_array(4 ** level).astype(np.int64)
        if coeffs.shape != expected.shape or not np.array_equal(coeffs, expected):
            witnesses.append({"level": level})
    return CheckReport(name="polynomial_coefficients", passed=not witnesses,
                       details={"max_level": max_level}, witnesses=witnesses)


def norm_identity_check(max_level: int = 4, samples: int = 64) -> CheckReport:
    witnesses = []
    errors = {}
    for level in range(1, max_level + 1):
        relative = norm_identity(level, samples) / 4 ** (level + 1)
        errors[level] = relative
        if relative > NORM_TOLERANCES.get(level, 1e-6):
            witnesses.append({"level": level, "relative_error": relative})
    return CheckReport(name="norm_identity", passed=not witnesses,
                       details={"samples": samples, "relative_errors": errors}, witnesses=witnesses)
