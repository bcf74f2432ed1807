"""Signed-letter substitutions S0 (length 4) and S1 (length 2, S1 o S1 = S0).

Letters are +a, +b, +c, +d and their negatives. A rule is given by the images
of the four positive letters; the image of -x is the negated image of +x.
"""
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sequence.signs import Sign
from utils.errors import InvalidInputError

# Constants
BASES = ("a", "b", "c", "d")
_LETTER_RE = re.compile(r"([+-])([abcd])")


@dataclass(frozen=True, order=True)
class Letter:
    base: str
    sign: Sign = Sign.PLUS

    def __post_init__(self):
        if self.base not in BASES:
            raise InvalidInputError(f"Unknown letter base {self.base!r}")
        object.__setattr__(self, "sign", Sign.of(int(self.sign)))

    @property
    def index(self) -> int:
        return BASES.index(self.base)

    def __neg__(self) -> "Letter":
        return Letter(self.base, -self.sign)

    def __str__(self) -> str:
        return f"{self.sign.symbol}{self.base}"


ALL_LETTERS: Tuple[Letter, ...] = tuple(Letter(b, s) for s in (Sign.PLUS, Sign.MINUS) for b in BASES)


def parse_word(text: str) -> List[Letter]:
    """'+a-b+c' -> [+a, -b, +c]; whitespace is ignored."""
    compact = "".join(text.split())
    letters = [Letter(base, Sign.PLUS if sign == "+" else Sign.MINUS)
               for sign, base in _LETTER_RE.findall(compact)]
    if "".join(str(x) for x in letters) != compact:
        raise InvalidInputError(f"Cannot parse letter word {text!r}")
    return letters


def format_word(word: Iterable[Letter]) -> str:
    return " ".join(str(x) for x in word)


@dataclass(frozen=True)
class SubstitutionRule:
    name: str
    mapping: Mapping[Letter, Tuple[Letter, ...]] = field(compare=False)

    def __post_init__(self):
        missing = [str(x) for x in ALL_LETTERS if x not in self.mapping]
        if missing:
            raise InvalidInputError(f"Rule {self.name} leaves letters unmapped: {missing}")
        for letter in ALL_LETTERS:
            if letter.sign is Sign.PLUS:
                negated = tuple(-x for x in self.mapping[letter])
                if tuple(self.mapping[-letter]) != negated:
                    raise InvalidInputError(
                        f"Rule {self.name} is not sign-equivariant at {letter}"
                    )

    @classmethod
    def from_positive(cls, name: str, images: Mapping[str, str]) -> "SubstitutionRule":
        mapping: Dict[Letter, Tuple[Letter, ...]] = {}
        for base in BASES:
            if base not in images:
                raise InvalidInputError(f"Rule {name} has no image for +{base}")
            image = tuple(parse_word(images[base]))
            mapping[Letter(base)] = image
            mapping[Letter(base, Sign.MINUS)] = tuple(-x for x in image)
        return cls(name, mapping)

    def image(self, letter: Letter) -> Tuple[Letter, ...]:
        return self.mapping[letter]

    def is_prolongable(self, seed: Letter) -> bool:
        image = self.image(seed)
        return len(image) > 1 and image[0] == seed


S0 = SubstitutionRule.from_positive("S0", {
    "a": "+a+b+c+d",
    "b": "+a-b+c-d",
    "c": "+a+b-c-d",
    "d": "+a-b-c+d",
})

S1 = SubstitutionRule.from_positive("S1", {
    "a": "+a+b",
    "b": "+c+d",
    "c": "+a-b",
    "d": "+c-d",
})


def substitute(rule: SubstitutionRule, word: Sequence[Letter], steps: int = 1) -> List[Letter]:
    if steps < 0:
        raise InvalidInputError("steps must be nonnegative")
    current = list(word)
    for _ in range(steps):
        current = [image_letter for letter in current for image_letter in rule.image(letter)]
    return current


def fixed_point(rule: SubstitutionRule, length: int, seed: Letter = Letter("a")) -> List[Letter]:
    """First ``length`` letters of the infinite word fixed by ``rule`` and starting with ``seed``."""
    if length < 0:
        raise InvalidInputError("length must be nonnegative")
    if not rule.is_prolongable(seed):
        raise InvalidInputError(f"Rule {rule.name} is not prolongable on {seed}")
    word = [seed]
    while len(word) < length:
        word = substitute(rule, word)
    return word[:length]


def signs_of(word: Iterable[Letter]) -> List[Sign]:
    """Drop the letter bases, keep the signs."""
    return [letter.sign for letter in word]
