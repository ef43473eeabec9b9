"""Words in the knot group generators s and t."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum

from ..errors import DomainError


class Letter(StrEnum):
    """Generator letters; upper case denotes the inverse."""

    S = "s"
    S_INV = "S"
    T = "t"
    T_INV = "T"

    @property
    def inverse(self) -> Letter:
        return _INVERSES[self]


_INVERSES = {
    Letter.S: Letter.S_INV,
    Letter.S_INV: Letter.S,
    Letter.T: Letter.T_INV,
    Letter.T_INV: Letter.T,
}

_RELATOR_BLOCK = "tStsTs"
"""One period of the word w: t s^-1 t s t^-1 s."""


@dataclass(frozen=True)
class GroupWord:
    """A finite sequence of generator letters, read left to right."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> GroupWord:
        """Parse compact notation such as "tStsTs" (whitespace ignored).

        Raises:
            DomainError: if text contains a character that is not a letter.
        """
        letters: list[Letter] = []
        for char in text:
            if char.isspace():
                continue
            try:
                letters.append(Letter(char))
            except ValueError as exc:
                raise DomainError(f"invalid group word letter: {char!r}") from exc
        return cls(letters=tuple(letters))

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> GroupWord:
        return cls(letters=tuple(letters))

    def inverse(self) -> GroupWord:
        return GroupWord.of(letter.inverse for letter in reversed(self.letters))

    def reversed(self) -> GroupWord:
        """Return w*, the letters in reverse order with each letter kept as is."""
        return GroupWord.of(reversed(self.letters))

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(letters=self.letters + other.letters)

    def __pow__(self, exponent: int) -> GroupWord:
        if exponent < 0:
            return self.inverse() ** -exponent
        return GroupWord(letters=self.letters * exponent)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters)


def relator_word(n: int) -> GroupWord:
    """Return w = (t s^-1 t s t^-1 s)^n, inverted block-wise for n < 0.

    Raises:
        DomainError: if n == 0.
    """
    if n == 0:
        raise DomainError("n = 0 is the unknot and has no relator word")
    return GroupWord.parse(_RELATOR_BLOCK) ** n
