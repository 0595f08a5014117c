"""Cyclic signed words over named generators.

A word records how an attaching circle or marked curve passes through
dotted circles: each letter is a (generator, sign) pair, and the whole
sequence is read cyclically.  Words are immutable; equality is
rotation-invariant but does *not* reduce, so a stored word keeps its
geometric passage count.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Letter = tuple[str, int]


def _check_letter(letter) -> Letter:
    gen, sign = letter
    if not isinstance(gen, str) or not gen:
        raise ValueError(f"generator must be a nonempty string, got {gen!r}")
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
    return (gen, sign)


class Word:
    """An immutable cyclic word of signed generator letters."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", tuple(_check_letter(l) for l in letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """Parse letters written as ``x1+ x2-`` (whitespace separated)."""
        letters = []
        for tok in text.split():
            if len(tok) < 2 or tok[-1] not in "+-":
                raise ValueError(f"bad letter token {tok!r} (want e.g. 'x1+')")
            letters.append((tok[:-1], 1 if tok[-1] == "+" else -1))
        return cls(letters)

    def to_text(self) -> str:
        return " ".join(f"{g}{'+' if s > 0 else '-'}" for g, s in self.letters)

    # -- basic protocol ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.to_text()!r})"

    def __eq__(self, other) -> bool:
        """Cyclic rotations of the same letter sequence are equal."""
        if not isinstance(other, Word):
            return NotImplemented
        if len(self.letters) != len(other.letters):
            return False
        return self.min_rotation().letters == other.min_rotation().letters

    def __hash__(self) -> int:
        return hash(self.min_rotation().letters)

    # -- cyclic structure ----------------------------------------------------

    def rotated(self, k: int) -> "Word":
        n = len(self.letters)
        if n == 0:
            return self
        k %= n
        return Word(self.letters[k:] + self.letters[:k])

    def min_rotation(self) -> "Word":
        """The lexicographically least rotation (deterministic cyclic normal form)."""
        n = len(self.letters)
        if n <= 1:
            return self
        key = lambda ls: tuple((g, -s) for g, s in ls)
        best = min(
            (self.letters[k:] + self.letters[:k] for k in range(n)), key=key
        )
        return Word(best)

    # -- group operations ----------------------------------------------------

    def inverse(self) -> "Word":
        return Word((g, -s) for g, s in reversed(self.letters))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def power(self, exponent: int) -> "Word":
        if exponent >= 0:
            return Word(self.letters * exponent)
        return self.inverse().power(-exponent)

    def free_reduced(self) -> "Word":
        """Delete adjacent inverse pairs (linear reduction, not cyclic)."""
        out: list[Letter] = []
        for letter in self.letters:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return Word(out)

    def cyclic_reduced(self) -> "Word":
        """Freely reduce, then strip inverse pairs across the wrap-around."""
        w = self.free_reduced().letters
        i, j = 0, len(w)
        while j - i >= 2 and w[i][0] == w[j - 1][0] and w[i][1] == -w[j - 1][1]:
            i += 1
            j -= 1
        return Word(w[i:j])

    def is_cyclically_trivial(self) -> bool:
        return len(self.cyclic_reduced()) == 0

    # -- passage counting ----------------------------------------------------

    def signed_count(self, gen: str) -> int:
        return sum(s for g, s in self.letters if g == gen)

    def unsigned_count(self, gen: str) -> int:
        return sum(1 for g, _ in self.letters if g == gen)

    def generators(self) -> set[str]:
        return {g for g, _ in self.letters}

    def abelianized(self, order: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.signed_count(g) for g in order)

    # -- rewriting -----------------------------------------------------------

    def substitute(self, gen: str, replacement: "Word") -> "Word":
        """Replace every ``gen``-letter by ``replacement`` (or its inverse).

        Letters are inserted literally; no reduction is performed, so the
        result keeps the full geometric passage record.
        """
        inv = replacement.inverse()
        out: list[Letter] = []
        for g, s in self.letters:
            if g == gen:
                out.extend(replacement.letters if s > 0 else inv.letters)
            else:
                out.append((g, s))
        return Word(out)

    def delete_generator(self, gen: str) -> "Word":
        return Word((g, s) for g, s in self.letters if g != gen)

    def rename_generator(self, old: str, new: str) -> "Word":
        return Word((new if g == old else g, s) for g, s in self.letters)


EMPTY_WORD = Word()
