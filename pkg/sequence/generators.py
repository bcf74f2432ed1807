"""Prefix generators for the sequence and their mutual cross-check."""
import time
from typing import Callable, Dict, List, Sequence

import numpy as np

from algebra.matrices import WALSH_4, walsh
from sequence.signs import Sign, sign_at
from sequence.substitution import S0, S1, fixed_point, signs_of
from utils.config import get_settings
from utils.errors import InvalidInputError
from utils.logger import logger
from utils.reports import CheckReport

_WALSH_4_ARRAY = np.array(WALSH_4, dtype=np.int8)


def prefix(length: int) -> List[Sign]:
    """First ``length`` terms via a_{4m+c} = a_m * W4[m mod 4][c]."""
    if length < 0:
        raise InvalidInputError("length must be nonnegative")
    terms: List[int] = [1] * length
    for n in range(4, length):
        m, c = divmod(n, 4)
        terms[n] = terms[m] * WALSH_4[m % 4][c]
    return [Sign(x) for x in terms]


def prefix_array(length: int) -> np.ndarray:
    """Vectorised ``prefix`` as an int8 array of +1/-1."""
    if length < 0:
        raise InvalidInputError("length must be nonnegative")
    limit = get_settings().fast_index_limit
    if length > limit:
        raise InvalidInputError(f"length {length} exceeds the fast-path limit {limit}")
    terms = np.ones(length, dtype=np.int8)
    lo = 4
    while lo < length:
        hi = min(4 * lo, length)
        idx = np.arange(lo, hi)
        m = idx // 4
        terms[lo:hi] = terms[m] * _WALSH_4_ARRAY[m % 4, idx % 4]
        lo = hi
    return terms


def walsh_prefix(order_exponent: int, length: int) -> np.ndarray:
    """Signs of the order-N Walsh sequence, N = 2**k: a_{Nm+c} = a_m * W_N[m mod N][c].

    k = 2 gives ``prefix``; k = 1 is the Rudin-Shapiro sequence.
    """
    if length < 0:
        raise InvalidInputError("length must be nonnegative")
    w = walsh(order_exponent).astype(np.int8)
    size = w.shape[0]
    terms = np.ones(length, dtype=np.int8)
    lo = size
    while lo < length:
        hi = min(size * lo, length)
        idx = np.arange(lo, hi)
        m = idx // size
        terms[lo:hi] = terms[m] * w[m % size, idx % size]
        lo = hi
    return terms


def _is_power_of_four(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0 and (n.bit_length() - 1) % 2 == 0


def block_extend(word: Sequence[Sign]) -> List[Sign]:
    """Quarter the word into A B C D and emit A B C D  A -B C -D  A B -C -D  A -B -C D.

    A single-letter word repeats four times.
    """
    size = len(word)
    if not _is_power_of_four(size):
        raise InvalidInputError(f"block_extend needs a power-of-4 length, got {size}")
    if size == 1:
        return [Sign(int(word[0]))] * 4
    quarter = size // 4
    blocks = [word[c * quarter:(c + 1) * quarter] for c in range(4)]
    extended: List[Sign] = []
    for row in WALSH_4:
        for c, block in enumerate(blocks):
            extended.extend(Sign(int(x) * row[c]) for x in block)
    return extended


def block_prefix(length: int) -> List[Sign]:
    word: List[Sign] = [Sign.PLUS]
    while len(word) < length:
        word = block_extend(word)
    return word[:length]


def digit_prefix(length: int) -> List[Sign]:
    return [sign_at(n) for n in range(length)]


def _generators() -> Dict[str, Callable[[int], Sequence[int]]]:
    return {
        "digit_formula": digit_prefix,
        "recurrence": prefix,
        "block_extension": block_prefix,
        "s0_fixed_point": lambda n: signs_of(fixed_point(S0, n)),
        "s1_fixed_point": lambda n: signs_of(fixed_point(S1, n)),
    }


def verify_equivalence(length: int) -> CheckReport:
    """Compare all five definitions of the sequence on the first ``length`` terms."""
    if length < 1:
        raise InvalidInputError("verify_equivalence needs length >= 1")
    start = time.perf_counter()
    columns = {name: np.asarray([int(x) for x in gen(length)], dtype=np.int8)
               for name, gen in _generators().items()}
    reference_name = "digit_formula"
    reference = columns[reference_name]
    witnesses = []
    for name, values in columns.items():
        if len(values) != length:
            witnesses.append({"generator": name, "index": min(len(values), length),
                              "reason": "short output"})
            continue
        mismatches = np.flatnonzero(values != reference)
        if mismatches.size:
            index = int(mismatches[0])
            witnesses.append({
                "generator": name,
                "index": index,
                "expected": int(reference[index]),
                "actual": int(values[index]),
            })
    elapsed = time.perf_counter() - start
    logger.info("Sequence definitions compared",
                extra={"length": length, "mismatches": len(witnesses), "elapsed_s": round(elapsed, 4)})
    first = min((w["index"] for w in witnesses), default=None)
    return CheckReport(
        name="verify_equivalence",
        passed=not witnesses,
        details={"length": length, "generators": list(columns), "first_mismatch": first},
        witnesses=witnesses,
    )
