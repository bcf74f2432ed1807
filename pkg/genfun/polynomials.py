"""Polynomial quadruples (P_n, Q_n, R_n, T_n) with (P,Q,R,T)_{n+1} = M(z^(4^n)) (P,Q,R,T)_n.

M(z)[i][j] = W4[i][j] z^j, so one step is four shifted, signed copies.
"""
import time
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from algebra.matrices import WALSH_4
from utils.config import get_settings
from utils.errors import InvalidInputError
from utils.logger import logger

# Constants
DEFAULT_SAMPLES = 64


@dataclass(frozen=True)
class IntPoly:
    """Integer coefficients, index = degree, trailing zeros trimmed."""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def to_array(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=np.int64)

    def shifted(self, places: int) -> "IntPoly":
        """Multiply by z**places."""
        return IntPoly((0,) * places + self.coefficients) if self.coefficients else self

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (size - len(self.coefficients))
        b = other.coefficients + (0,) * (size - len(other.coefficients))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def scaled(self, factor: int) -> "IntPoly":
        return IntPoly(tuple(factor * c for c in self.coefficients))

    def __call__(self, z):
        return npoly.polyval(z, self.to_array().astype(float))


@dataclass(frozen=True)
class PolyVec4:
    P: IntPoly
    Q: IntPoly
    R: IntPoly
    T: IntPoly
    level: int = 0

    def __iter__(self) -> Iterable[IntPoly]:
        return iter((self.P, self.Q, self.R, self.T))

    @classmethod
    def base(cls) -> "PolyVec4":
        one = IntPoly.constant(1)
        return cls(one, one, one, one, 0)


def step(quad: PolyVec4) -> PolyVec4:
    """Level n -> level n + 1."""
    shift = 4 ** quad.level
    parts = list(quad)
    rows = []
    for row in WALSH_4:
        total = IntPoly(())
        for j, (sign, poly) in enumerate(zip(row, parts)):
            total = total + poly.shifted(j * shift).scaled(sign)
        rows.append(total)
    return PolyVec4(*rows, level=quad.level + 1)


def quadruple(level: int) -> PolyVec4:
    if level < 0:
        raise InvalidInputError("level must be nonnegative")
    limit = get_settings().genfun_max_depth
    if level > limit:
        raise InvalidInputError(f"level {level} exceeds the configured depth {limit}")
    quad = PolyVec4.base()
    for _ in range(level):
        quad = step(quad)
    return quad


def unit_circle(samples: int = DEFAULT_SAMPLES) -> np.ndarray:
    if samples < 1:
        raise InvalidInputError("samples must be positive")
    return np.exp(2j * np.pi * np.arange(samples) / samples)


def norm_sum(quad: PolyVec4, points: Sequence[complex]) -> np.ndarray:
    points = np.asarray(points, dtype=complex)
    return sum(np.abs(poly(points)) ** 2 for poly in quad)


def norm_identity(level: int, samples: int = DEFAULT_SAMPLES) -> float:
    """max |(|P|^2 + |Q|^2 + |R|^2 + |T|^2)(z) - 4^(level+1)| over the sampled unit circle."""
    if level < 1:
        raise InvalidInputError("norm_identity needs level >= 1")
    start = time.perf_counter()
    values = norm_sum(quadruple(level), unit_circle(samples))
    error = float(np.max(np.abs(values - 4 ** (level + 1))))
    logger.debug("Norm identity evaluated",
                 extra={"level": level, "samples": samples, "max_error": error,
                        "elapsed_s": round(time.perf_counter() - start, 4)})
    return error
