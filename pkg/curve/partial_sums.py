"""Partial sums S(n) = a_0 u_0 + ... + a_{n-1} u_{(n-1) mod 4}."""
from typing import Iterator

import numpy as np

from algebra.dyadic import Vec4Z
from algebra.matrices import WALSH_4, walsh
from sequence.generators import prefix_array, walsh_prefix
from sequence.signs import digits4
from utils.config import get_settings
from utils.errors import InvalidInputError

# Constants
ORIGIN: Vec4Z = (0, 0, 0, 0)


def partial_sum(n: int) -> Vec4Z:
    """Exact S(n) in O(log n) steps.

    Reads the base-4 digits of n from the top, using
    S(4m + c) = M S(m) + a_m * sum_{i<c} W4[m mod 4][i] u_i
    and a_{4m+c} = a_m * W4[m mod 4][c].
    """
    if n < 0:
        raise InvalidInputError(f"partial_sum needs n >= 0, got {n}")
    s = [0, 0, 0, 0]
    sign = 1
    last = 0
    for c in reversed(digits4(n)):
        row = WALSH_4[last]
        s = [sum(WALSH_4[i][j] * s[j] for j in range(4)) for i in range(4)]
        for i in range(c):
            s[i] += sign * row[i]
        sign *= row[c]
        last = c
    return tuple(s)


def sum_stream(limit: int) -> Iterator[Vec4Z]:
    """Yield S(0), S(1), ..., S(limit)."""
    if limit < 0:
        raise InvalidInputError("limit must be nonnegative")
    signs = prefix_array(limit)
    s = [0, 0, 0, 0]
    yield tuple(s)
    for j in range(limit):
        s[j % 4] += int(signs[j])
        yield tuple(s)


def partial_sum_table(n_max: int) -> np.ndarray:
    """int64 array of shape (n_max + 1, 4); row n is S(n)."""
    if n_max < 0:
        raise InvalidInputError("n_max must be nonnegative")
    limit = get_settings().fast_index_limit
    if n_max > limit:
        raise InvalidInputError(f"n_max {n_max} exceeds the fast-path limit {limit}")
    return _cumulative(prefix_array(n_max), 4)


def general_partial_sums(order_exponent: int, limit: int) -> np.ndarray:
    """Partial sums of the order-2**k Walsh sequence in Z^(2**k); shape (limit + 1, 2**k)."""
    if limit < 0:
        raise InvalidInputError("limit must be nonnegative")
    size = walsh(order_exponent).shape[0]
    return _cumulative(walsh_prefix(order_exponent, limit), size)


def _cumulative(signs: np.ndarray, width: int) -> np.ndarray:
    steps = np.zeros((len(signs) + 1, width), dtype=np.int64)
    idx = np.arange(len(signs))
    steps[idx + 1, idx % width] = signs
    return np.cumsum(steps, axis=0)
