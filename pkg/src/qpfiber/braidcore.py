"""Braid words, embedded bands, and band representations.

Conventions fixed here and relied on everywhere else:

* strand indices are 1-based; a word in B_n uses letters ``(i, sign)`` with
  ``1 <= i <= n-1``;
* letters compose left to right: the first letter acts first, both for
  permutations and for the Burau matrices built on top of these words;
* words are stored fully expanded, no free reduction is ever applied;
* the strand count is explicit on every value.  Re-tagging a word or
  representation into a larger braid group is a deliberate operation
  (`retag`), never an implicit coercion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidBand, InvalidParameter, InvalidWord


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group B_n, as a sequence of signed generators."""

    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 1:
            raise InvalidParameter(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple((int(i), int(s)) for i, s in self.letters))
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise InvalidWord(f"letter index {i} out of range for B_{self.strands}")
            if s not in (1, -1):
                raise InvalidWord(f"letter sign must be +1 or -1, got {s}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise InvalidWord("cannot concatenate words with different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def retag(self, strands: int) -> "BraidWord":
        """The same word viewed in a larger braid group."""
        if strands < self.strands:
            raise InvalidParameter("retag cannot shrink the strand count")
        return BraidWord(strands, self.letters)

    def is_positive(self) -> bool:
        return all(s == 1 for _, s in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": [[i, s] for i, s in self.letters]}

    @staticmethod
    def from_json(doc: dict) -> "BraidWord":
        try:
            return BraidWord(int(doc["strands"]), tuple((int(i), int(s)) for i, s in doc["letters"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidWord(f"malformed braid word document: {exc}") from exc


@dataclass(frozen=True)
class EmbeddedBand:
    """The band generator joining strands i and j in front of the strands between."""

    i: int
    j: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidBand(f"band sign must be +1 or -1, got {self.sign}")
        if not 1 <= self.i < self.j:
            raise InvalidBand(f"band requires 1 <= i < j, got ({self.i}, {self.j})")


@dataclass(frozen=True)
class BandRepresentation:
    """An ordered sequence of embedded bands in B_n."""

    strands: int
    bands: tuple[EmbeddedBand, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise InvalidParameter(f"strand count must be >= 1, got {self.strands}")
        bands = tuple(
            b if isinstance(b, EmbeddedBand) else EmbeddedBand(*b) for b in self.bands
        )
        object.__setattr__(self, "bands", bands)
        for b in bands:
            if b.j > self.strands:
                raise InvalidBand(f"band ({b.i},{b.j}) does not fit in B_{self.strands}")

    def __len__(self):
        return len(self.bands)

    def retag(self, strands: int) -> "BandRepresentation":
        if strands < self.strands:
            raise InvalidParameter("retag cannot shrink the strand count")
        return BandRepresentation(strands, self.bands)

    def to_json(self) -> dict:
        return {"strands": self.strands, "bands": [[b.i, b.j, b.sign] for b in self.bands]}

    @staticmethod
    def from_json(doc: dict) -> "BandRepresentation":
        try:
            return BandRepresentation(
                int(doc["strands"]),
                tuple(EmbeddedBand(int(i), int(j), int(s)) for i, j, s in doc["bands"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidBand(f"malformed band representation document: {exc}") from exc


def expand_band(band: EmbeddedBand, n: int) -> BraidWord:
    """Expand sigma_{i,j}^(sign) into generators in B_n.

    The word is (s_i, ..., s_{j-2}, s_{j-1}^sign, s_{j-2}^-1, ..., s_i^-1),
    of length 2(j-i)-1 and exponent sum equal to the band sign.
    """
    if band.j > n:
        raise InvalidBand(f"band ({band.i},{band.j}) does not fit in B_{n}")
    prefix = [(c, 1) for c in range(band.i, band.j - 1)]
    middle = [(band.j - 1, band.sign)]
    suffix = [(c, -1) for c in reversed(range(band.i, band.j - 1))]
    return BraidWord(n, tuple(prefix + middle + suffix))


def beta(rep: BandRepresentation) -> BraidWord:
    """The braid word b(1)...b(k) of a band representation."""
    letters: list[tuple[int, int]] = []
    for band in rep.bands:
        letters.extend(expand_band(band, rep.strands).letters)
    return BraidWord(rep.strands, tuple(letters))


def is_quasipositive(rep: BandRepresentation) -> bool:
    return all(b.sign == 1 for b in rep.bands)


def permutation(word: BraidWord) -> tuple[int, ...]:
    """The strand permutation, as a tuple p with p[x-1] the image of x.

    Letters act left to right; each letter (i, sign) acts as the
    transposition (i, i+1) regardless of sign.
    """
    perm = list(range(1, word.strands + 1))
    for i, _ in word.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    # perm currently tracks positions; invert the bookkeeping so that
    # perm[x-1] is where strand x ends up.
    image = [0] * word.strands
    for pos, strand in enumerate(perm, start=1):
        image[strand - 1] = pos
    return tuple(image)


def permutation_cycles(word: BraidWord) -> list[tuple[int, ...]]:
    """Cycles of the strand permutation, each as a tuple of strand indices."""
    perm = permutation(word)
    seen = [False] * word.strands
    cycles = []
    for start in range(1, word.strands + 1):
        if seen[start - 1]:
            continue
        cyc = []
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            cyc.append(x)
            x = perm[x - 1]
        cycles.append(tuple(cyc))
    return cycles


def exponent_sum(word: BraidWord) -> int:
    return sum(s for _, s in word.letters)


def word_from_letters(strands: int, letters: Iterable[int]) -> BraidWord:
    """Build a word from signed integers (i > 0 for s_i, i < 0 for s_i^-1)."""
    out: list[tuple[int, int]] = []
    for v in letters:
        if v == 0:
            raise InvalidWord("letter 0 is not a generator")
        out.append((abs(v), 1 if v > 0 else -1))
    return BraidWord(strands, tuple(out))


def positive_word(strands: int, indices: Sequence[int]) -> BraidWord:
    return BraidWord(strands, tuple((i, 1) for i in indices))
