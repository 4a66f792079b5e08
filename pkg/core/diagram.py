"""
core/diagram.py
---------------
Value types: bands, fence diagrams, braid words and surface summaries.

Lines are numbered 1 (top) to b (bottom). A band (i, j) hangs from line i
down to line j and passes in front of every line strictly between them.
Word positions are 1-based in the public API; the word tuple itself is
indexed from 0.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import RangeError


@dataclass(frozen=True, order=True)
class Band:
    lower: int
    upper: int

    def __post_init__(self):
        if not 1 <= self.lower < self.upper:
            raise RangeError(f"band {self.lower}-{self.upper} needs 1 <= i < j")

    def touches(self, line: int) -> bool:
        return line in (self.lower, self.upper)

    def passes(self, line: int) -> bool:
        return self.lower < line < self.upper

    def other_end(self, line: int) -> int:
        return self.upper if line == self.lower else self.lower

    def __str__(self):
        return f"{self.lower}-{self.upper}"


@dataclass(frozen=True)
class FenceDiagram:
    strands: int
    word:    tuple[Band, ...] = field(default=())

    def __post_init__(self):
        if self.strands < 1:
            raise RangeError(f"a fence diagram needs at least one line, got {self.strands}")
        object.__setattr__(self, "word", tuple(self.word))
        for band in self.word:
            if band.upper > self.strands:
                raise RangeError(f"band {band} leaves the {self.strands} lines")

    @classmethod
    def of(cls, strands: int, *pairs: tuple[int, int]) -> "FenceDiagram":
        return cls(strands, tuple(Band(i, j) for i, j in pairs))

    def __len__(self):
        return len(self.word)

    @property
    def key(self) -> tuple:
        """Syntactic identity used for dedup in searches."""
        return (self.strands, tuple((b.lower, b.upper) for b in self.word))

    def attachments(self, line: int) -> list[int]:
        """0-based word indices of the bands with an end on `line`, left to right."""
        return [t for t, band in enumerate(self.word) if band.touches(line)]

    def degree(self, line: int) -> int:
        return len(self.attachments(line))

    def replace(self, word, strands: int | None = None) -> "FenceDiagram":
        return FenceDiagram(self.strands if strands is None else strands, tuple(word))

    def pairs(self) -> list[tuple[int, int]]:
        return [(b.lower, b.upper) for b in self.word]

    def __str__(self):
        bands = " ".join(str(b) for b in self.word)
        return f"b={self.strands} [{bands}]"


class Letter(NamedTuple):
    index: int
    sign:  int

    def __str__(self):
        return f"s{self.index}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = field(default=())

    def __post_init__(self):
        if self.strands < 1:
            raise RangeError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(Letter(*l) for l in self.letters))
        for letter in self.letters:
            if not 1 <= letter.index < self.strands:
                raise RangeError(f"generator {letter.index} out of range for {self.strands} strands")
            if letter.sign not in (1, -1):
                raise RangeError(f"letter sign must be +1 or -1, got {letter.sign}")

    def __len__(self):
        return len(self.letters)

    @property
    def writhe(self) -> int:
        return sum(letter.sign for letter in self.letters)

    def __str__(self):
        return " ".join(str(l) for l in self.letters) or "(empty)"


@dataclass(frozen=True)
class SurfaceSummary:
    euler_characteristic: int
    boundary_components:  int
    connected:            bool
