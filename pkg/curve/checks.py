"""Exact verifications of the curve's scaling laws, arc isometries and positivity."""
import time
from typing import List, Optional, Tuple

import numpy as np

from algebra.dyadic import Dyadic, vec_scale, vec_sub
from algebra.matrices import apply, matrix_M, matrix_T
from curve.evaluation import eval_dyadic
from curve.partial_sums import partial_sum_table
from sequence.signs import sign_at
from utils.config import get_settings
from utils.errors import InvalidInputError
from utils.logger import logger
from utils.reports import CheckReport

# Constants
MAX_WITNESSES = 5


def _random_dyadics(rng: np.random.Generator, count: int, max_bits: int, whole_max: int) -> List[Dyadic]:
    bits = rng.integers(0, max_bits + 1, size=count)
    values = []
    for k in bits.tolist():
        whole = int(rng.integers(0, whole_max + 1))
        frac = int(rng.integers(0, 1 << k)) if k else 0
        values.append(Dyadic((whole << k) + frac, k))
    return values


def check_arc_isometry(j: int, samples: int, max_bits: int = 16, seed: Optional[int] = None) -> CheckReport:
    """S(t+j) - S(s+j) == a_j (S(t+j0) - S(s+j0)) for dyadic 0 < s < t < 1, j0 = j mod 4."""
    if j < 0:
        raise InvalidInputError("j must be nonnegative")
    if samples < 1:
        raise InvalidInputError("samples must be positive")
    rng = np.random.default_rng(get_settings().seed if seed is None else seed)
    a_j = int(sign_at(j))
    j0 = j % 4
    witnesses = []
    for _ in range(samples):
        k = int(rng.integers(2, max_bits + 1))
        s_num, t_num = sorted(int(x) for x in rng.choice(np.arange(1, 1 << k), size=2, replace=False))
        s, t = Dyadic(s_num, k), Dyadic(t_num, k)
        lhs = vec_sub(eval_dyadic(t + j), eval_dyadic(s + j))
        rhs = vec_scale(vec_sub(eval_dyadic(t + j0), eval_dyadic(s + j0)), a_j)
        if lhs != rhs and len(witnesses) < MAX_WITNESSES:
            witnesses.append({"s": s, "t": t, "lhs": lhs, "rhs": rhs})
    return CheckReport(
        name=f"arc_isometry[j={j}]",
        passed=not witnesses,
        details={"j": j, "j0": j0, "a_j": a_j, "samples": samples},
        witnesses=witnesses,
    )


def first_coordinate_min(limit: int) -> Tuple[int, List[int]]:
    """Minimum of the u0 coordinate of S(n) over 0 <= n <= limit, and where it is attained."""
    if limit < 0:
        raise InvalidInputError("limit must be nonnegative")
    first = partial_sum_table(limit)[:, 0]
    minimum = int(first.min())
    return minimum, np.flatnonzero(first == minimum).tolist()


def check_self_similarity(samples: int = 1000, max_bits: int = 20, int_limit: int = 10_000,
                          seed: Optional[int] = None) -> CheckReport:
    """S(16t) = 4 S(t), S(4t) = M S(t) and S(2t) = T S(t), exactly.

    Random dyadic t with up to ``max_bits`` binary digits, plus every integer
    t <= int_limit through the partial-sum table.
    """
    start = time.perf_counter()
    M, T = matrix_M(), matrix_T()
    rng = np.random.default_rng(get_settings().seed if seed is None else seed)
    witnesses = []

    for t in _random_dyadics(rng, samples, max_bits, whole_max=64):
        base = eval_dyadic(t)
        laws = (
            ("S(2t) = T S(t)", eval_dyadic(t * 2), apply(T, base)),
            ("S(4t) = M S(t)", eval_dyadic(t * 4), apply(M, base)),
            ("S(16t) = 4 S(t)", eval_dyadic(t * 16), vec_scale(base, 4)),
        )
        for law, lhs, rhs in laws:
            if lhs != rhs and len(witnesses) < MAX_WITNESSES:
                witnesses.append({"law": law, "t": t, "lhs": lhs, "rhs": rhs})

    table = partial_sum_table(16 * int_limit)
    n = np.arange(int_limit + 1)
    base = table[n]
    integer_laws = (
        ("S(2n) = T S(n)", table[2 * n], base @ T.to_array().T),
        ("S(4n) = M S(n)", table[4 * n], base @ M.to_array().T),
        ("S(16n) = 4 S(n)", table[16 * n], 4 * base),
    )
    for law, lhs, rhs in integer_laws:
        bad = np.flatnonzero(np.any(lhs != rhs, axis=1))
        if bad.size:
            witnesses.append({"law": law, "t": int(bad[0]), "lhs": lhs[bad[0]], "rhs": rhs[bad[0]]})

    logger.info("Self-similarity checked",
                extra={"samples": samples, "int_limit": int_limit,
                       "elapsed_s": round(time.perf_counter() - start, 4)})
    return CheckReport(
        name="self_similarity",
        passed=not witnesses,
        details={"samples": samples, "max_bits": max_bits, "int_limit": int_limit},
        witnesses=witnesses,
    )


def check_dyadic_intervals(limit: int = 4096, max_k: int = 12) -> CheckReport:
    """||S((j+1) 2^k) - S(j 2^k)||^2 == 2^k whenever (j+1) 2^k <= limit."""
    table = partial_sum_table(limit)
    witnesses = []
    checked = 0
    for k in range(max_k + 1):
        step = 1 << k
        if step > limit:
            break
        ends = table[step:limit + 1:step]
        starts = table[0:limit + 1 - step:step][:len(ends)]
        sq = np.sum((ends - starts) ** 2, axis=1)
        checked += len(sq)
        bad = np.flatnonzero(sq != step)
        if bad.size:
            j = int(bad[0])
            witnesses.append({"k": k, "j": j, "sq_dist": int(sq[j]), "expected": step})
    return CheckReport(
        name="dyadic_intervals",
        passed=not witnesses,
        details={"limit": limit, "max_k": max_k, "intervals": checked},
        witnesses=witnesses,
    )
