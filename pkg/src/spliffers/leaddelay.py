"""Lead-or-delay bookkeeping between two growing words.

A value records how far the first word runs ahead of the second (a lead),
how far it runs behind (a delay), or that the two words have diverged and
no amount of appending can reconcile them (zero, which is absorbing). The
update is a right action of pairs of words: append to both sides, then
cancel the common prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monoid import Word, format_word

_LEAD = "lead"
_DELAY = "delay"
_ZERO = "zero"


@dataclass(frozen=True)
class LeadOrDelay:
    """Canonical form: the balanced value is lead(()); a delay is never empty."""

    kind: str
    word: Word = ()

    def __post_init__(self) -> None:
        if self.kind == _DELAY and not self.word:
            raise ValueError("empty delay; the balanced value is lead(())")
        if self.kind == _ZERO and self.word:
            raise ValueError("zero carries no word")

    def is_zero(self) -> bool:
        return self.kind == _ZERO

    def __repr__(self) -> str:
        if self.kind == _ZERO:
            return "Zero"
        name = "Lead" if self.kind == _LEAD else "Delay"
        return f"{name}({format_word(self.word)})"


def lead(w: Word) -> LeadOrDelay:
    return LeadOrDelay(_LEAD, w)


def delay(w: Word) -> LeadOrDelay:
    return LeadOrDelay(_DELAY, w) if w else BALANCED


ZERO = LeadOrDelay(_ZERO)
BALANCED = LeadOrDelay(_LEAD)

PairValue = tuple[LeadOrDelay, LeadOrDelay]

BALANCED_PAIR: PairValue = (BALANCED, BALANCED)


def is_prefix(u: Word, v: Word) -> bool:
    return v[: len(u)] == u


def residual(u: Word, v: Word) -> Word:
    """The word w with v = u . w; only defined when u is a prefix of v."""
    if not is_prefix(u, v):
        raise ValueError(f"{format_word(u)} is not a prefix of {format_word(v)}")
    return v[len(u) :]


def delta(h: LeadOrDelay, f: Word, g: Word) -> LeadOrDelay:
    """Append f to the first word and g to the second, then re-balance.

    With h standing for the pair (h_l, h_r), the result compares h_l.f
    against h_r.g: whichever is a prefix of the other leaves a lead or a
    delay, and incomparable words collapse to the absorbing zero.
    """
    if h.kind == _ZERO:
        return ZERO
    if h.kind == _LEAD:
        x = h.word + f
        y = g
    else:
        x = f
        y = h.word + g
    if is_prefix(y, x):
        return lead(x[len(y) :])
    if is_prefix(x, y):
        return delay(y[len(x) :])
    return ZERO


def delta2(v: PairValue, out1: tuple[Word, Word], out2: tuple[Word, Word]) -> PairValue:
    """Componentwise action comparing two runs' outputs tape by tape.

    out1 and out2 are the (left, right) outputs of the first and second
    run; the first component tracks the two left outputs, the second the
    two right outputs. When the runs' labels carry an input letter as
    well, it is discarded before acting.
    """
    f1, g1 = out1
    f2, g2 = out2
    return (delta(v[0], f1, f2), delta(v[1], g1, g2))
