"""Exhaustive searches over pairs m < n of partial sums.

Every search walks gaps d = n - m and compares the whole row block
S(d:) - S(:-d) at once. Gaps are split into contiguous chunks for the worker
pool; merging is a deterministic min/max reduction with ties ordered by
(n - m, m), so results do not depend on the thread count.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import numpy as np

from algebra.dyadic import Vec4Z
from curve.partial_sums import partial_sum_table
from sequence.signs import sign_at
from utils.config import get_settings
from utils.errors import InvalidInputError
from utils.logger import logger
from utils.reports import CheckReport

# Constants
CONJECTURED_MIN_RATIO = Fraction(1, 5)
KNOWN_MAX_RATIO = Fraction(25, 17)
MAX_WITNESSES = 10


@dataclass(frozen=True)
class PairRecord:
    m: int
    n: int
    diff: Vec4Z
    sq_dist: int

    @property
    def gap(self) -> int:
        return self.n - self.m

    @property
    def sq_ratio(self) -> Fraction:
        return Fraction(self.sq_dist, self.gap)

    @classmethod
    def from_table(cls, table: np.ndarray, m: int, n: int) -> "PairRecord":
        diff = tuple(int(x) for x in table[n] - table[m])
        return cls(m, n, diff, sum(x * x for x in diff))

    def to_dict(self):
        return {"m": self.m, "n": self.n, "diff": list(self.diff),
                "sq_dist": self.sq_dist, "sq_ratio": self.sq_ratio}


@dataclass
class WindowResult:
    d_lo: int
    d_hi: int
    n_max: int
    min_sq_dist: int
    pairs: List[PairRecord] = field(default_factory=list)


@dataclass
class RatioBounds:
    n_max: int
    min_ratio: Fraction
    min_pairs: List[PairRecord]
    max_ratio: Fraction
    max_pairs: List[PairRecord]


def _threads(threads: Optional[int]) -> int:
    return max(1, threads if threads is not None else get_settings().threads)


def _gap_chunks(gaps: Sequence[int], workers: int) -> List[Sequence[int]]:
    chunk = max(1, -(-len(gaps) // workers))
    return [gaps[i:i + chunk] for i in range(0, len(gaps), chunk)]


def map_gaps(worker: Callable[[Sequence[int]], list], gaps: Sequence[int], threads: Optional[int]) -> list:
    """Run ``worker`` over gap chunks and concatenate the results in gap order."""
    workers = _threads(threads)
    chunks = _gap_chunks(list(gaps), workers)
    if workers == 1 or len(chunks) <= 1:
        results = [worker(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(worker, chunks))
    return [item for part in results for item in part]


def gap_sq_dists(table: np.ndarray, gap: int) -> np.ndarray:
    diffs = table[gap:] - table[:-gap]
    return np.einsum("ij,ij->i", diffs, diffs)


def _extreme_per_gap(table: np.ndarray, gaps: Sequence[int], use_max: bool) -> list:
    out = []
    for gap in gaps:
        sq = gap_sq_dists(table, gap)
        value = int(sq.max() if use_max else sq.min())
        out.append((gap, value, np.flatnonzero(sq == value).tolist()))
    return out


def _pairs_for(table: np.ndarray, per_gap: list, keep: Callable[[int, int], bool]) -> List[PairRecord]:
    records = [PairRecord.from_table(table, m, m + gap)
               for gap, value, starts in per_gap if keep(gap, value) for m in starts]
    return sorted(records, key=lambda r: (r.gap, r.m))


def window_min(d_lo: int, d_hi: int, n_max: int, threads: Optional[int] = None) -> WindowResult:
    """Minimum of ||S(n) - S(m)||^2 over d_lo < n - m <= d_hi, 0 <= m < n <= n_max."""
    if not (0 <= d_lo < d_hi):
        raise InvalidInputError(f"Empty gap window ({d_lo}, {d_hi}]")
    if d_lo >= n_max:
        raise InvalidInputError(f"No pair with n <= {n_max} has gap above {d_lo}")
    start = time.perf_counter()
    table = partial_sum_table(n_max)
    gaps = range(d_lo + 1, min(d_hi, n_max) + 1)
    per_gap = map_gaps(lambda chunk: _extreme_per_gap(table, chunk, use_max=False), gaps, threads)
    minimum = min(value for _, value, _ in per_gap)
    pairs = _pairs_for(table, per_gap, lambda gap, value: value == minimum)
    logger.info("Window search finished",
                extra={"window": [d_lo, d_hi], "n_max": n_max, "min_sq_dist": minimum,
                       "pairs": len(pairs), "elapsed_s": round(time.perf_counter() - start, 4)})
    return WindowResult(d_lo, d_hi, n_max, minimum, pairs)


def ratio_bounds(n_max: int, threads: Optional[int] = None) -> RatioBounds:
    """Exact extremes of ||S(n) - S(m)||^2 / (n - m) over 0 <= m < n <= n_max."""
    if n_max < 2:
        raise InvalidInputError("ratio_bounds needs n_max >= 2")
    start = time.perf_counter()
    table = partial_sum_table(n_max)
    gaps = range(1, n_max + 1)
    lows = map_gaps(lambda chunk: _extreme_per_gap(table, chunk, use_max=False), gaps, threads)
    highs = map_gaps(lambda chunk: _extreme_per_gap(table, chunk, use_max=True), gaps, threads)
    min_ratio = min(Fraction(value, gap) for gap, value, _ in lows)
    max_ratio = max(Fraction(value, gap) for gap, value, _ in highs)
    result = RatioBounds(
        n_max=n_max,
        min_ratio=min_ratio,
        min_pairs=_pairs_for(table, lows, lambda gap, value: Fraction(value, gap) == min_ratio),
        max_ratio=max_ratio,
        max_pairs=_pairs_for(table, highs, lambda gap, value: Fraction(value, gap) == max_ratio),
    )
    logger.info("Ratio bounds computed",
                extra={"n_max": n_max, "min_ratio": str(min_ratio), "max_ratio": str(max_ratio),
                       "elapsed_s": round(time.perf_counter() - start, 4)})
    return result


@dataclass
class ConjectureScan:
    """Evidence about a = 1/sqrt5 and b >= 5/sqrt17; reports, never decides."""

    n_max: int
    min_ratio: Fraction
    max_ratio: Fraction
    below_conjectured_min: List[PairRecord]
    above_known_max: bool
    min_witnesses: List[PairRecord]
    max_witnesses: List[PairRecord]

    @property
    def conjecture_survives(self) -> bool:
        return not self.below_conjectured_min


def conjecture_scan(n_max: int, threads: Optional[int] = None) -> ConjectureScan:
    bounds = ratio_bounds(n_max, threads=threads)
    below = [p for p in bounds.min_pairs if p.sq_ratio < CONJECTURED_MIN_RATIO] \
        if bounds.min_ratio < CONJECTURED_MIN_RATIO else []
    return ConjectureScan(
        n_max=n_max,
        min_ratio=bounds.min_ratio,
        max_ratio=bounds.max_ratio,
        below_conjectured_min=below[:MAX_WITNESSES],
        above_known_max=bounds.max_ratio > KNOWN_MAX_RATIO,
        min_witnesses=bounds.min_pairs[:MAX_WITNESSES],
        max_witnesses=bounds.max_pairs[:MAX_WITNESSES],
    )


def hoelder_violations(sq: np.ndarray, gap: int) -> np.ndarray:
    """Indices where sq > (12 + 8 sqrt2) gap, decided exactly.

    8 sqrt2 > 11, so only entries with sq - 12 gap > 11 gap can violate; those are
    squared as Python ints.
    """
    excess = sq - 12 * gap
    candidates = np.flatnonzero(excess > 11 * gap)
    return np.array([i for i in candidates.tolist() if int(excess[i]) ** 2 > 128 * gap * gap],
                    dtype=np.int64)


def hoelder_upper_check(n_max: int, threads: Optional[int] = None) -> CheckReport:
    """||S(n) - S(m)||^2 <= (12 + 8 sqrt2)(n - m), decided in integers.

    With e = sq - 12 d the bound reads e <= 8 sqrt2 d, i.e. e <= 0 or e^2 <= 128 d^2.
    """
    if n_max < 1:
        raise InvalidInputError("n_max must be positive")
    table = partial_sum_table(n_max)

    def worker(chunk):
        found = []
        for gap in chunk:
            bad = hoelder_violations(gap_sq_dists(table, gap), gap)
            found.extend((gap, int(m)) for m in bad[:MAX_WITNESSES])
        return found

    violations = map_gaps(worker, range(1, n_max + 1), threads)
    witnesses = [PairRecord.from_table(table, m, m + gap) for gap, m in violations[:MAX_WITNESSES]]
    return CheckReport(
        name="hoelder_upper",
        passed=not violations,
        details={"n_max": n_max, "bound_sq": "12 + 8*sqrt2"},
        witnesses=witnesses,
    )


def check_block_shift_law(max_j: int = 64) -> CheckReport:
    """S(n+16j) - S(m+16j) == a_j (S(n+16 j0) - S(m+16 j0)) for 0 <= m < n <= 16, j0 = j mod 4."""
    table = partial_sum_table(16 * (max_j + 1))
    base = np.arange(17)
    witnesses = []
    for j in range(max_j + 1):
        shifted = table[16 * j + base]
        reference = table[16 * (j % 4) + base]
        sign = int(sign_at(j))
        # All pair differences inside the block, at once.
        lhs = shifted[None, :, :] - shifted[:, None, :]
        rhs = sign * (reference[None, :, :] - reference[:, None, :])
        bad = np.argwhere(np.any(lhs != rhs, axis=2))
        if bad.size and len(witnesses) < MAX_WITNESSES:
            m, n = (int(x) for x in bad[0])
            witnesses.append({"j": j, "m": m, "n": n})
    return CheckReport(
        name="block_shift_law",
        passed=not witnesses,
        details={"max_j": max_j},
        witnesses=witnesses,
    )


def check_period_shift(max_j: int = 64) -> CheckReport:
    """||S(n+64j) - S(m+64j)|| == ||S(n) - S(m)|| for 0 <= m < n <= 16.

    Pairs that straddle a multiple of 16 are not covered: (61, 67) has squared
    distance 2 although (61 - 64, 67 - 64) is not a pair.
    """
    table = partial_sum_table(64 * max_j + 16)
    base = np.arange(17)
    reference = table[base]
    ref_sq = np.sum((reference[None, :, :] - reference[:, None, :]) ** 2, axis=2)
    witnesses = []
    for j in range(max_j + 1):
        block = table[64 * j + base]
        sq = np.sum((block[None, :, :] - block[:, None, :]) ** 2, axis=2)
        bad = np.argwhere(sq != ref_sq)
        if bad.size and len(witnesses) < MAX_WITNESSES:
            m, n = (int(x) for x in bad[0])
            witnesses.append({"j": j, "m": m, "n": n})
    return CheckReport(
        name="period_shift",
        passed=not witnesses,
        details={"max_j": max_j},
        witnesses=witnesses,
    )
