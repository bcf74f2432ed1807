"""The double point of the closed spherical curve at t = 1/3 and t' = 4/3.

Both parameters are approached through base-4 repunits r_j = (4^j - 1) / 3:
t_k = r_k / 4^k and t'_k = r_{k+1} / 4^k. Their common limit direction is
(3, 1, 1, 1) / (2 sqrt3), a vector of the plane P.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from algebra.dyadic import Dyadic, Vec4Z, vec_to_fraction
from algebra.eigen import project_plane_Q, reflect_across_w0
from algebra.matrices import apply_int, matrix_T
from curve.evaluation import eval_dyadic
from curve.partial_sums import partial_sum
from spherical.projection import normalize
from utils.errors import InvalidInputError
from utils.reports import CheckReport

# Constants
LIMIT_VECTOR = (3, 1, 1, 1)
SHIFTED_LIMIT_VECTOR = (2, 1, 1, 0)
DEFAULT_DEPTH = 20
TRANSPORTED_LIMIT_VECTOR = (4, 2, 2, 0)
ANGLE_TOLERANCE = 1e-5
PLANE_TOLERANCE = 1e-9


def repunit(j: int) -> int:
    """(4^j - 1) / 3, written 11...1 in base 4."""
    return (4 ** j - 1) // 3


def angle_between(u: Sequence[float], v: Sequence[float]) -> float:
    u, v = normalize(u), normalize(v)
    return 2.0 * math.atan2(np.linalg.norm(u - v), np.linalg.norm(u + v))


def repunit_limit(k: int) -> Tuple[Fraction, ...]:
    """(S(r_{k+1}) + S(r_k)) / (3 * 2^(k-1)); equal to (1, 1/3, 1/3, 1/3) for every k."""
    if k < 1:
        raise InvalidInputError("k must be positive")
    total = [x + y for x, y in zip(partial_sum(repunit(k + 1)), partial_sum(repunit(k)))]
    scale = Fraction(1, 3 * 2 ** (k - 1))
    return tuple(x * scale for x in total)


@dataclass
class DoublePoint:
    depth: int
    repunit_points: List[Tuple[int, Vec4Z]]
    direction_third: np.ndarray
    direction_four_thirds: np.ndarray
    limit: np.ndarray

    @property
    def angle(self) -> float:
        return angle_between(self.direction_third, self.direction_four_thirds)

    @property
    def angle_to_limit(self) -> Tuple[float, float]:
        return (angle_between(self.direction_third, self.limit),
                angle_between(self.direction_four_thirds, self.limit))

    def to_dict(self):
        return {
            "depth": self.depth,
            "repunit_points": [{"j": j, "S": list(s)} for j, s in self.repunit_points],
            "direction_third": self.direction_third,
            "direction_four_thirds": self.direction_four_thirds,
            "limit": self.limit,
            "angle": self.angle,
            "angle_to_limit": list(self.angle_to_limit),
        }


def _direction(t: Dyadic) -> np.ndarray:
    return normalize([float(x) for x in vec_to_fraction(eval_dyadic(t))])


def double_point(depth: int = DEFAULT_DEPTH) -> DoublePoint:
    if depth < 2:
        raise InvalidInputError("double_point needs depth >= 2")
    points = [(j, partial_sum(repunit(j))) for j in range(1, depth + 2)]
    t = Dyadic(repunit(depth), 2 * depth)
    t_prime = Dyadic(repunit(depth + 1), 2 * depth)
    return DoublePoint(
        depth=depth,
        repunit_points=points,
        direction_third=_direction(t),
        direction_four_thirds=_direction(t_prime),
        limit=normalize(LIMIT_VECTOR),
    )


@dataclass
class ShiftedDoublePoint:
    depth: int
    direction_two_thirds: np.ndarray
    direction_eight_thirds: np.ndarray
    target: np.ndarray
    transported_limit: Tuple[int, ...]
    limit_q_component: float
    w0_mirror_error: float

    @property
    def angle(self) -> float:
        return angle_between(self.direction_two_thirds, self.direction_eight_thirds)

    @property
    def angle_to_target(self) -> Tuple[float, float]:
        return (angle_between(self.direction_two_thirds, self.target),
                angle_between(self.direction_eight_thirds, self.target))


def double_point_shifted(depth: int = DEFAULT_DEPTH) -> ShiftedDoublePoint:
    """The image double point S(2/3) = S(8/3), obtained by applying T.

    Also measures how far both limits are from P, and how closely the w0-axis
    reflection inside P swaps the two limit directions.
    """
    if depth < 2:
        raise InvalidInputError("double_point_shifted needs depth >= 2")
    t = Dyadic(repunit(depth), 2 * depth) * 2
    t_prime = Dyadic(repunit(depth + 1), 2 * depth) * 2
    transported = apply_int(matrix_T(), LIMIT_VECTOR)
    limit = normalize(LIMIT_VECTOR)
    target = normalize(SHIFTED_LIMIT_VECTOR)
    q_component = max(float(np.linalg.norm(project_plane_Q(limit))),
                      float(np.linalg.norm(project_plane_Q(target))))
    mirror_error = float(np.linalg.norm(reflect_across_w0(limit) - target))
    return ShiftedDoublePoint(
        depth=depth,
        direction_two_thirds=_direction(t),
        direction_eight_thirds=_direction(t_prime),
        target=target,
        transported_limit=transported,
        limit_q_component=q_component,
        w0_mirror_error=mirror_error,
    )


def double_point_check(depth: int = DEFAULT_DEPTH) -> CheckReport:
    """Both double points converge to their limits, and the limits lie in P."""
    point, shifted = double_point(depth), double_point_shifted(depth)
    third = Fraction(1, 3)
    witnesses = [{"relation": "repunit limit", "k": k}
                 for k in range(1, depth + 1) if repunit_limit(k) != (1, third, third, third)]
    angles = {
        "angle": point.angle,
        "angle_to_limit": max(point.angle_to_limit),
        "shifted_angle": shifted.angle,
        "shifted_angle_to_target": max(shifted.angle_to_target),
    }
    witnesses.extend({"relation": name, "value": value}
                     for name, value in angles.items() if not value < ANGLE_TOLERANCE)
    if shifted.transported_limit != TRANSPORTED_LIMIT_VECTOR:
        witnesses.append({"relation": "T (3,1,1,1)", "value": list(shifted.transported_limit)})
    if not shifted.limit_q_component < PLANE_TOLERANCE:
        witnesses.append({"relation": "limits in P", "value": shifted.limit_q_component})
    return CheckReport(
        name="double_point",
        passed=not witnesses,
        details={"depth": depth, **angles, "limit_q_component": shifted.limit_q_component},
        witnesses=witnesses,
    )
