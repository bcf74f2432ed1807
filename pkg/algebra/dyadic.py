"""Exact dyadic rationals p/2^k and the 4-vectors built from them."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from utils.errors import InvalidInputError

Vec4Z = Tuple[int, int, int, int]

Number = Union[int, Fraction, "Dyadic"]


@dataclass(frozen=True)
class Dyadic:
    """numerator / 2**exponent, kept canonical: numerator odd (or zero) whenever exponent > 0.

    >>> Dyadic(6, 2)
    Dyadic(numerator=3, exponent=1)
    >>> Dyadic(1, 1) + Dyadic(1, 1)
    Dyadic(numerator=1, exponent=0)
    """

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise InvalidInputError("Dyadic exponent must be nonnegative")
        num, exp = self.numerator, self.exponent
        if num == 0:
            exp = 0
        else:
            shift = min(exp, (num & -num).bit_length() - 1)
            num >>= shift
            exp -= shift
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    @classmethod
    def of(cls, value: Number) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        raise InvalidInputError(f"Cannot build a dyadic rational from {type(value).__name__}")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        den = value.denominator
        if den & (den - 1):
            raise InvalidInputError(f"{value} is not a dyadic rational")
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def from_float(cls, value: float) -> "Dyadic":
        """Exact conversion; every finite float is dyadic."""
        return cls.from_fraction(Fraction(value))

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def is_integer(self) -> bool:
        return self.exponent == 0

    def halve(self, times: int = 1) -> "Dyadic":
        return Dyadic(self.numerator, self.exponent + times)

    def _aligned(self, other: "Dyadic") -> Tuple[int, int, int]:
        exp = max(self.exponent, other.exponent)
        return (self.numerator << (exp - self.exponent),
                other.numerator << (exp - other.exponent), exp)

    def __add__(self, other: Number) -> "Dyadic":
        other = Dyadic.of(other)
        a, b, exp = self._aligned(other)
        return Dyadic(a + b, exp)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "Dyadic":
        return self + (-Dyadic.of(other))

    def __rsub__(self, other: Number) -> "Dyadic":
        return Dyadic.of(other) - self

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.numerator, self.exponent)

    def __mul__(self, other: Number) -> "Dyadic":
        other = Dyadic.of(other)
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __lt__(self, other: Number) -> bool:
        return self.to_fraction() < Dyadic.of(other).to_fraction()

    def __le__(self, other: Number) -> bool:
        return self.to_fraction() <= Dyadic.of(other).to_fraction()

    def __gt__(self, other: Number) -> bool:
        return self.to_fraction() > Dyadic.of(other).to_fraction()

    def __ge__(self, other: Number) -> bool:
        return self.to_fraction() >= Dyadic.of(other).to_fraction()

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"

    def split(self) -> Tuple[int, int]:
        """(p, k) with self == p / 2**k."""
        return self.numerator, self.exponent


Vec4Dyadic = Tuple[Dyadic, Dyadic, Dyadic, Dyadic]


def vec_dyadic(values: Iterable[Number]) -> Vec4Dyadic:
    coords = tuple(Dyadic.of(v) for v in values)
    if len(coords) != 4:
        raise InvalidInputError("A curve vector has exactly four coordinates")
    return coords


def vec_sub(u: Vec4Dyadic, v: Vec4Dyadic) -> Vec4Dyadic:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u: Vec4Dyadic, factor: Number) -> Vec4Dyadic:
    return tuple(a * factor for a in u)


def vec_halve(u: Vec4Dyadic, times: int = 1) -> Vec4Dyadic:
    return tuple(a.halve(times) for a in u)


def vec_to_float(u: Iterable[Number]) -> Tuple[float, ...]:
    return tuple(float(a) for a in u)


def vec_to_fraction(u: Iterable[Number]) -> Tuple[Fraction, ...]:
    return tuple(Dyadic.of(a).to_fraction() for a in u)

