"""Radial projection to S^3, central projection onto x0 = 1, and the projective point model."""
import math
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from algebra.dyadic import Dyadic, vec_to_fraction
from curve.evaluation import Parameter, eval_dyadic
from sequence.generators import prefix_array
from utils.config import get_settings
from utils.errors import InvalidInputError, SingularInputError

UnitVec4 = Tuple[float, float, float, float]

# Constants
BASIS_ANCHORS = tuple(tuple(1.0 if i == j else 0.0 for j in range(4)) for i in range(4))


def normalize(v: Sequence[float]) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise SingularInputError("Cannot normalise the zero vector")
    return v / norm


def _positive(t: Parameter) -> Dyadic:
    t = Dyadic.of(t)
    if t <= 0:
        raise InvalidInputError(f"Projections need t > 0, got {t}")
    return t


def sphere_point(t: Parameter) -> UnitVec4:
    """S(t) / ||S(t)||."""
    exact = vec_to_fraction(eval_dyadic(_positive(t)))
    return tuple(normalize([float(x) for x in exact]).tolist())


def to_dyadic_grid(value: float, bits: int) -> Dyadic:
    """Round a positive float down onto the grid 2^-bits."""
    return Dyadic(math.floor(Fraction(value) * (1 << bits)), bits)


def closed_curve_samples(anchor: Parameter, count: int) -> List[Tuple[Dyadic, UnitVec4]]:
    """``count`` points of the closed curve, t geometric in [a, 16a]; both ends are exact."""
    a = _positive(anchor)
    if count < 1:
        raise InvalidInputError("count must be positive")
    if count == 1:
        return [(a, sphere_point(a))]
    bits = get_settings().dyadic_bits
    end = a * 16
    params = [a]
    for i in range(1, count - 1):
        params.append(max(a, to_dyadic_grid(float(a) * 16.0 ** (i / (count - 1)), a.exponent + bits)))
    params.append(end)
    return [(t, sphere_point(t)) for t in params]


def central_projection(t: Parameter) -> Tuple[float, float, float, float]:
    """S(t) / S_0(t), first coordinate exactly 1."""
    exact = vec_to_fraction(eval_dyadic(_positive(t)))
    if exact[0] == 0:
        raise SingularInputError(f"S_0({t}) = 0", index=t)
    return tuple(float(x / exact[0]) for x in exact)


def projective_denominators(steps: int) -> List[int]:
    """a_0 + ... + a_n for n < steps; each equals S_0(4(n + 1))."""
    if steps < 0:
        raise InvalidInputError("steps must be nonnegative")
    return np.cumsum(prefix_array(steps).astype(np.int64)).tolist()


def projective_sequence(anchors: Sequence[Sequence[float]] = BASIS_ANCHORS, steps: int = 16) -> List[Tuple[float, ...]]:
    """Points M_0 .. M_steps.

    M_0 = A_0 and M_{n+1} = ((a_0 + ... + a_{n-1}) M_n + a_n A_n) / (a_0 + ... + a_n),
    with A_{j+4} = A_j. M_1 = A_0 and M_2 = (A_0 + A_1) / 2.
    """
    if len(anchors) != 4:
        raise InvalidInputError("projective_sequence needs four anchor points")
    if steps < 1:
        raise InvalidInputError("steps must be positive")
    points = np.asarray(anchors, dtype=float)
    signs = prefix_array(steps).astype(np.int64)
    current = points[0].copy()
    out = [tuple(current.tolist())]
    before = 0
    for n in range(steps):
        after = before + int(signs[n])
        if after == 0:
            raise SingularInputError(f"a_0 + ... + a_{n} = 0", index=n)
        current = (before * current + signs[n] * points[n % 4]) / after
        out.append(tuple(current.tolist()))
        before = after
    return out
