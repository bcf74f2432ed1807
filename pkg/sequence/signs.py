"""The digit formula: a_n = (-1)^A_n, A_n counting linked base-4 digit pairs."""
from enum import IntEnum
from typing import FrozenSet, List, Tuple

from utils.errors import InvalidInputError

Digit4Word = List[int]

# Constants
# (higher digit, lower digit) pairs that flip the sign.
# (n1, n0) in LINK_SET  <=>  n0 + 4*n1 in {5, 7, 10, 11, 13, 14}
LINK_SET: FrozenSet[Tuple[int, int]] = frozenset({(1, 1), (1, 3), (2, 2), (2, 3), (3, 1), (3, 2)})


class Sign(IntEnum):
    PLUS = 1
    MINUS = -1

    @classmethod
    def of(cls, value: int) -> "Sign":
        if value not in (1, -1):
            raise InvalidInputError(f"A sign is +1 or -1, got {value}")
        return cls(value)

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    def __neg__(self) -> "Sign":
        return Sign(-int(self))

    def __str__(self) -> str:
        return self.symbol


def _check_index(n: int) -> None:
    if n < 0:
        raise InvalidInputError(f"Sequence indices are nonnegative, got {n}")


def digits4(n: int) -> Digit4Word:
    """Base-4 digits of n, least significant first. digits4(0) == [0]."""
    _check_index(n)
    if n == 0:
        return [0]
    digits = []
    while n:
        n, d = divmod(n, 4)
        digits.append(d)
    return digits


def link_count(n: int) -> int:
    digits = digits4(n)
    return sum((digits[j + 1], digits[j]) in LINK_SET for j in range(len(digits) - 1))


def sign_at(n: int) -> Sign:
    return Sign.MINUS if link_count(n) % 2 else Sign.PLUS


def format_digits(n: int) -> str:
    """Most significant digit first, the way indices are usually written."""
    return "".join(str(d) for d in reversed(digits4(n)))
