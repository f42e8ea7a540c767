"""Free words over the alphabet {1, ..., d}."""

import itertools
from dataclasses import dataclass
from typing import Iterator

from core.errors import DimensionMismatchError, ValidationError


@dataclass(frozen=True)
class Word:
    """A free word alpha = alpha_1 ... alpha_k over letters 1..d.

    The empty word is the unit word. Words order length-lexicographically,
    which is the canonical order everywhere words are enumerated or stacked.
    """

    letters: tuple[int, ...]
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValidationError(f"Dimension must be positive, got {self.d}")
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        for letter in self.letters:
            if not 1 <= letter <= self.d:
                raise ValidationError(f"Letter {letter} outside [1, {self.d}]")

    @classmethod
    def unit(cls, d: int) -> "Word":
        return cls((), d)

    @classmethod
    def from_digits(cls, digits: str, d: int) -> "Word":
        """Parse the canonical digit string ("12", "" or "10.2" when d > 9)."""
        digits = digits.strip()
        if not digits:
            return cls.unit(d)
        if "." in digits or d > 9:
            parts = digits.split(".") if "." in digits else [digits]
            return cls(tuple(int(p) for p in parts), d)
        return cls(tuple(int(c) for c in digits), d)

    @property
    def size(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.d)
        return self.letters[index]

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.d != self.d:
            raise DimensionMismatchError(f"Cannot concatenate words of dimension {self.d} and {other.d}")
        return Word(self.letters + other.letters, self.d)

    def sort_key(self) -> tuple:
        return (len(self.letters), self.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def digits(self) -> str:
        if self.d > 9:
            return ".".join(str(a) for a in self.letters)
        return "".join(str(a) for a in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(f"z{a}" for a in self.letters)


def words(d: int, k: int) -> list[Word]:
    """All words of size exactly k in length-lex order."""
    return [Word(letters, d) for letters in itertools.product(range(1, d + 1), repeat=k)]


def words_up_to(d: int, k: int) -> list[Word]:
    """All words of size at most k in length-lex order."""
    return [w for size in range(k + 1) for w in words(d, size)]


def word_count(d: int, k: int) -> int:
    return d**k

