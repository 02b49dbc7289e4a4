"""Textual machine format: one directive per line, whitespace separated.

    # comment
    alphabet: a b
    states: 6
    initial: 0
    final: 5
    trans: 0 a L 1

A trans line reads "source letter tape destination"; tape L sends the
letter to the left output word, R to the right. Serialization is
canonical (sorted headers and transitions), so parse(serialize(m)) == m.
"""

from __future__ import annotations

import re

from .machines import Nfa, Spliffer, _transition_key
from .monoid import Generator, Tape


class MachineSyntaxError(ValueError):
    """Malformed machine text, with 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\S+")
_HEADER = re.compile(r"\s*([A-Za-z_-]+):")


def _state_index(token: str, line: int, column: int) -> int:
    if not token.isdigit():
        raise MachineSyntaxError(line, column, f"expected a state index, got '{token}'")
    return int(token)


def parse(text: str) -> Spliffer:
    """Parse machine text; raises MachineSyntaxError with a location on bad input.

    Only the syntax is checked here; semantic problems (out-of-range
    states, letters outside the alphabet) are left to ``validate``.
    """
    alphabet: frozenset[str] | None = None
    state_count: int | None = None
    initial: frozenset[int] | None = None
    final: frozenset[int] | None = None
    transitions: set[tuple[int, Generator, int]] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        header = _HEADER.match(line)
        if header is None:
            column = len(line) - len(line.lstrip()) + 1
            raise MachineSyntaxError(line_no, column, "expected 'directive: ...'")
        name = header.group(1)
        tokens = [
            (match.start() + header.end() + 1, match.group())
            for match in _TOKEN.finditer(line[header.end() :])
        ]

        if name == "alphabet":
            if alphabet is not None:
                raise MachineSyntaxError(line_no, 1, "duplicate 'alphabet' directive")
            alphabet = frozenset(tok for _, tok in tokens)
        elif name == "states":
            if state_count is not None:
                raise MachineSyntaxError(line_no, 1, "duplicate 'states' directive")
            if len(tokens) != 1:
                raise MachineSyntaxError(line_no, 1, "'states' takes exactly one number")
            col, tok = tokens[0]
            if not tok.isdigit():
                raise MachineSyntaxError(line_no, col, f"expected a state count, got '{tok}'")
            state_count = int(tok)
        elif name in ("initial", "final"):
            if (initial if name == "initial" else final) is not None:
                raise MachineSyntaxError(line_no, 1, f"duplicate '{name}' directive")
            states = frozenset(_state_index(tok, line_no, col) for col, tok in tokens)
            if name == "initial":
                initial = states
            else:
                final = states
        elif name == "trans":
            if len(tokens) != 4:
                raise MachineSyntaxError(
                    line_no, 1, "'trans' takes 'source letter tape destination'"
                )
            (c_src, src), (_, letter), (c_tape, tape), (c_dst, dst) = tokens
            if tape not in ("L", "R"):
                raise MachineSyntaxError(line_no, c_tape, "tape must be L or R")
            transitions.add(
                (
                    _state_index(src, line_no, c_src),
                    Generator(Tape(tape), letter),
                    _state_index(dst, line_no, c_dst),
                )
            )
        else:
            raise MachineSyntaxError(line_no, 1, f"unknown directive '{name}'")

    last = text.count("\n") + 1
    for name, value in (
        ("alphabet", alphabet),
        ("states", state_count),
        ("initial", initial),
        ("final", final),
    ):
        if value is None:
            raise MachineSyntaxError(last, 1, f"missing '{name}' directive")
    assert alphabet is not None and state_count is not None
    assert initial is not None and final is not None
    return Spliffer(alphabet, state_count, frozenset(transitions), initial, final)


def _directive(name: str, tokens: list[str]) -> str:
    return f"{name}: {' '.join(tokens)}".rstrip()


def serialize(m: Spliffer) -> str:
    """Canonical text for m; transitions sorted by source, letter, tape, destination."""
    lines = [
        _directive("alphabet", sorted(m.alphabet)),
        _directive("states", [str(m.state_count)]),
        _directive("initial", [str(q) for q in sorted(m.initial)]),
        _directive("final", [str(q) for q in sorted(m.final)]),
    ]
    for src, g, dst in sorted(m.transitions, key=_transition_key):
        lines.append(f"trans: {src} {g.letter} {g.tape.value} {dst}")
    return "\n".join(lines) + "\n"


def serialize_nfa(n: Nfa) -> str:
    """Same layout for classical automata; trans lines have no tape column."""
    lines = [
        _directive("alphabet", sorted(n.alphabet)),
        _directive("states", [str(n.state_count)]),
        _directive("initial", [str(q) for q in sorted(n.initial)]),
        _directive("final", [str(q) for q in sorted(n.final)]),
    ]
    for src, a, dst in sorted(n.transitions):
        lines.append(f"trans: {src} {a} {dst}")
    return "\n".join(lines) + "\n"
