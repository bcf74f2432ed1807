"""Evaluation of the continuous curve at dyadic and real parameters.

S(p / 2^k) = T^-k S(p) exactly; real parameters are rounded down to a dyadic
fine enough that the Hoelder bound keeps the result within the tolerance.
"""
import math
from fractions import Fraction
from typing import Tuple, Union

from algebra.dyadic import Dyadic, Vec4Dyadic, vec_dyadic, vec_to_float
from algebra.eigen import Surd
from algebra.matrices import apply_T_inverse
from curve.partial_sums import partial_sum
from utils.errors import InvalidInputError

Parameter = Union[int, Fraction, Dyadic]

# Constants
B_UPPER = 2.0 * (1.0 + math.sqrt(2.0))
B_UPPER_SQ = Surd(12, 8)


def eval_dyadic(t: Parameter) -> Vec4Dyadic:
    t = Dyadic.of(t)
    if t < 0:
        raise InvalidInputError(f"The curve is defined for t >= 0, got {t}")
    p, k = t.split()
    return apply_T_inverse(partial_sum(p), k)


def resolution_bits(tol: float) -> int:
    """Binary digits k with B_UPPER * sqrt(2^-k) <= tol."""
    return max(0, math.ceil(2.0 * math.log2(B_UPPER / tol)))


def eval_real(t: float, tol: float) -> Tuple[float, float, float, float]:
    if not (math.isfinite(t) and math.isfinite(tol)):
        raise InvalidInputError("t and tol must be finite")
    if t < 0:
        raise InvalidInputError(f"The curve is defined for t >= 0, got {t}")
    if tol <= 0:
        raise InvalidInputError(f"tol must be positive, got {tol}")
    if float(t).is_integer():
        return vec_to_float(vec_dyadic(partial_sum(int(t))))
    k = resolution_bits(tol)
    if math.ulp(t) > 2.0 ** -k:
        raise InvalidInputError(
            f"tol={tol} needs {k} binary digits of t, beyond the precision of t={t}"
        )
    exact = Fraction(t)
    numerator = math.floor(exact * (1 << k))
    return vec_to_float(eval_dyadic(Dyadic(numerator, k)))
