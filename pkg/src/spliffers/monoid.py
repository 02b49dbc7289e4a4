"""The shuffling monoid: triples (l, r, s) where s interleaves l and r.

The monoid is generated by letters routed to one of two tapes: a letter
``a`` sent left contributes ``(a, e, a)`` and sent right ``(e, a, a)``,
where ``e`` is the empty word. Products are pointwise concatenations, so
every element is a triple whose third word is a merge of the first two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

Letter = str
Word = tuple[Letter, ...]

EMPTY_WORD: Word = ()


def word(text: str) -> Word:
    """Build a word from a string, one letter per character; "-" is the empty word."""
    if text == "-":
        return EMPTY_WORD
    return tuple(text)


def format_word(w: Word) -> str:
    return "".join(w) if w else "-"


class Tape(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class Generator:
    """A letter routed to one tape: LEFT encodes (a, e, a), RIGHT encodes (e, a, a)."""

    tape: Tape
    letter: Letter

    def output_pair(self) -> tuple[Word, Word]:
        """The (left-word, right-word) the generator writes."""
        if self.tape is Tape.LEFT:
            return (self.letter,), EMPTY_WORD
        return EMPTY_WORD, (self.letter,)

    def __repr__(self) -> str:
        return f"{self.tape.value}({self.letter})"


def left(letter: Letter) -> Generator:
    return Generator(Tape.LEFT, letter)


def right(letter: Letter) -> Generator:
    return Generator(Tape.RIGHT, letter)


class InvalidTripleError(ValueError):
    """The three words do not form an element of the monoid."""


@dataclass(frozen=True)
class UTriple:
    """A monoid element: ``shuffled`` is an interleaving of ``left`` and ``right``.

    Construction validates the grading (|shuffled| = |left| + |right|) and
    the interleaving property, so an existing instance is always a genuine
    monoid element.
    """

    left: Word
    right: Word
    shuffled: Word

    def __post_init__(self) -> None:
        if not is_interleaving(self.left, self.right, self.shuffled):
            raise InvalidTripleError(
                f"({format_word(self.left)}, {format_word(self.right)}, "
                f"{format_word(self.shuffled)}) is not an interleaving triple"
            )

    @classmethod
    def from_generators(cls, gens: Iterable[Generator]) -> "UTriple":
        """Multiply out a generator sequence; the empty sequence gives the identity."""
        l: list[Letter] = []
        r: list[Letter] = []
        s: list[Letter] = []
        for g in gens:
            (l if g.tape is Tape.LEFT else r).append(g.letter)
            s.append(g.letter)
        return cls(tuple(l), tuple(r), tuple(s))

    @property
    def length(self) -> int:
        """The grading: length of the shuffled word."""
        return len(self.shuffled)

    def sort_key(self) -> tuple[Word, Word, Word]:
        return (self.shuffled, self.left, self.right)

    def __str__(self) -> str:
        return format_triple(self)


def format_triple(t: UTriple) -> str:
    return f"{format_word(t.left)} | {format_word(t.right)} | {format_word(t.shuffled)}"


def is_interleaving(l: Word, r: Word, s: Word) -> bool:
    """True iff s can be written as a merge of l and r preserving both orders.

    Dynamic program over prefix pairs (i, j): reach[i][j] holds when the
    first i + j letters of s merge the first i of l and first j of r.
    """
    nl, nr = len(l), len(r)
    if len(s) != nl + nr:
        return False
    reach = [[False] * (nr + 1) for _ in range(nl + 1)]
    reach[0][0] = True
    for i in range(nl + 1):
        for j in range(nr + 1):
            if not reach[i][j]:
                continue
            k = i + j
            if i < nl and l[i] == s[k]:
                reach[i + 1][j] = True
            if j < nr and r[j] == s[k]:
                reach[i][j + 1] = True
    return reach[nl][nr]


def count_decompositions(t: UTriple) -> int:
    """Number of generator sequences whose product equals t.

    Same table as ``is_interleaving`` but counting merge paths instead of
    testing reachability. Always at least 1 for a valid triple.
    """
    l, r, s = t.left, t.right, t.shuffled
    nl, nr = len(l), len(r)
    count = [[0] * (nr + 1) for _ in range(nl + 1)]
    count[0][0] = 1
    for i in range(nl + 1):
        for j in range(nr + 1):
            c = count[i][j]
            if not c:
                continue
            k = i + j
            if i < nl and l[i] == s[k]:
                count[i + 1][j] += c
            if j < nr and r[j] == s[k]:
                count[i][j + 1] += c
    return count[nl][nr]
