"""Spliffer automata: structure, validation and run semantics.

A spliffer is a finite automaton whose transitions are labeled by
generators of the shuffling monoid. Read as a splitter it consumes the
shuffled word and emits the left/right words; read as a shuffler it does
the opposite. All machines here are immutable; every operation is a pure
function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monoid import Generator, Letter, Tape, UTriple, Word, format_word

Transition = tuple[int, Generator, int]


@dataclass(frozen=True)
class Spliffer:
    """A finite automaton over the shuffling monoid.

    ``transitions`` holds (src, generator, dst) edges with set semantics.
    Multiple initial states are allowed in the model (unions need them);
    determinism additionally requires exactly one.
    """

    alphabet: frozenset[Letter]
    state_count: int
    transitions: frozenset[Transition]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))


@dataclass(frozen=True)
class Nfa:
    """A classical nondeterministic automaton, used for input projections."""

    alphabet: frozenset[Letter]
    state_count: int
    transitions: frozenset[tuple[int, Letter, int]]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))


@dataclass(frozen=True)
class OutputTransducer:
    """The spliffer graph with labels projected onto the two output tapes.

    Every label is ((a,), ()) or ((), (a,)).
    """

    alphabet: frozenset[Letter]
    state_count: int
    transitions: frozenset[tuple[int, tuple[Word, Word], int]]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))


def validate(m: Spliffer) -> list[str]:
    """Invariant check; returns one readable diagnostic per violation (empty if valid)."""
    problems: list[str] = []
    if m.state_count < 1:
        problems.append(f"state count must be positive, got {m.state_count}")
    if not m.initial:
        problems.append("no initial state")

    def in_range(q: int) -> bool:
        return 0 <= q < m.state_count

    for q in sorted(m.initial):
        if not in_range(q):
            problems.append(f"initial state {q} out of range")
    for q in sorted(m.final):
        if not in_range(q):
            problems.append(f"final state {q} out of range")
    for src, g, dst in sorted(m.transitions, key=_transition_key):
        if not in_range(src):
            problems.append(f"transition {src} --{g}--> {dst}: source out of range")
        if not in_range(dst):
            problems.append(f"transition {src} --{g}--> {dst}: destination out of range")
        if g.letter not in m.alphabet:
            problems.append(f"transition {src} --{g}--> {dst}: letter '{g.letter}' not in alphabet")
    return problems


def _transition_key(t: Transition) -> tuple[int, Letter, str, int]:
    src, g, dst = t
    return (src, g.letter, g.tape.value, dst)


def transitions_by_source(m: Spliffer) -> dict[int, list[tuple[Generator, int]]]:
    """Adjacency map src -> sorted [(generator, dst)]."""
    adj: dict[int, list[tuple[Generator, int]]] = {}
    for src, g, dst in sorted(m.transitions, key=_transition_key):
        adj.setdefault(src, []).append((g, dst))
    return adj


def accessible_states(m: Spliffer) -> set[int]:
    seen = set(m.initial)
    stack = list(seen)
    adj = transitions_by_source(m)
    while stack:
        q = stack.pop()
        for _, dst in adj.get(q, ()):
            if dst not in seen:
                seen.add(dst)
                stack.append(dst)
    return seen


def coaccessible_states(m: Spliffer) -> set[int]:
    rev: dict[int, list[int]] = {}
    for src, _, dst in m.transitions:
        rev.setdefault(dst, []).append(src)
    seen = set(m.final)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for src in rev.get(q, ()):
            if src not in seen:
                seen.add(src)
                stack.append(src)
    return seen


def accepts(m: Spliffer, t: UTriple) -> bool:
    """True iff some successful run of m is labeled t.

    Reachability over configurations (state, i, j) where i letters of
    t.left and j of t.right have been emitted; step k = i + j must read
    t.shuffled[k].
    """
    adj = transitions_by_source(m)
    nl, nr = len(t.left), len(t.right)
    total = len(t.shuffled)
    seen = {(q, 0, 0) for q in m.initial}
    stack = list(seen)
    while stack:
        q, i, j = stack.pop()
        k = i + j
        if k == total:
            if q in m.final:
                return True
            continue
        a = t.shuffled[k]
        for g, dst in adj.get(q, ()):
            if g.letter != a:
                continue
            if g.tape is Tape.LEFT:
                if i < nl and t.left[i] == a:
                    c = (dst, i + 1, j)
                    if c not in seen:
                        seen.add(c)
                        stack.append(c)
            else:
                if j < nr and t.right[j] == a:
                    c = (dst, i, j + 1)
                    if c not in seen:
                        seen.add(c)
                        stack.append(c)
    return False


def split(m: Spliffer, s: Word) -> list[tuple[Word, Word]]:
    """All (left, right) pairs that m relates to the input word s.

    Returned in lexicographic order; empty when s is not in the domain.
    """
    adj = transitions_by_source(m)
    layer: set[tuple[int, Word, Word]] = {(q, (), ()) for q in m.initial}
    for a in s:
        nxt: set[tuple[int, Word, Word]] = set()
        for q, l, r in layer:
            for g, dst in adj.get(q, ()):
                if g.letter != a:
                    continue
                if g.tape is Tape.LEFT:
                    nxt.add((dst, l + (a,), r))
                else:
                    nxt.add((dst, l, r + (a,)))
        layer = nxt
    return sorted({(l, r) for q, l, r in layer if q in m.final})


def enumerate_behavior(m: Spliffer, max_len: int) -> set[UTriple]:
    """Every behavior element whose shuffled word has length at most max_len.

    Breadth-first over configurations (state, triple-so-far), deduplicated,
    which terminates because path length equals triple length. States that
    cannot reach a final state are pruned up front; pruning cannot drop any
    emitted triple.
    """
    coacc = coaccessible_states(m)
    adj = {
        q: [(g, dst) for g, dst in outs if dst in coacc]
        for q, outs in transitions_by_source(m).items()
    }
    layer: set[tuple[int, Word, Word, Word]] = {
        (q, (), (), ()) for q in m.initial if q in coacc
    }
    found: set[UTriple] = set()
    for _ in range(max_len + 1):
        for q, l, r, s in layer:
            if q in m.final:
                found.add(UTriple(l, r, s))
        nxt: set[tuple[int, Word, Word, Word]] = set()
        for q, l, r, s in layer:
            for g, dst in adj.get(q, ()):
                a = g.letter
                if g.tape is Tape.LEFT:
                    nxt.add((dst, l + (a,), r, s + (a,)))
                else:
                    nxt.add((dst, l, r + (a,), s + (a,)))
        layer = nxt
    return found


def count_accepting_runs(m: Spliffer, t: UTriple) -> int:
    """Number of successful runs labeled t (0 when t is not accepted)."""
    adj = transitions_by_source(m)
    nl, nr = len(t.left), len(t.right)
    counts: dict[tuple[int, int, int], int] = {}
    for q in m.initial:
        counts[(q, 0, 0)] = counts.get((q, 0, 0), 0) + 1
    for k in range(len(t.shuffled)):
        a = t.shuffled[k]
        nxt: dict[tuple[int, int, int], int] = {}
        for (q, i, j), c in counts.items():
            if i + j != k:
                continue
            for g, dst in adj.get(q, ()):
                if g.letter != a:
                    continue
                if g.tape is Tape.LEFT and i < nl and t.left[i] == a:
                    key = (dst, i + 1, j)
                elif g.tape is Tape.RIGHT and j < nr and t.right[j] == a:
                    key = (dst, i, j + 1)
                else:
                    continue
                nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return sum(c for (q, i, j), c in counts.items() if q in m.final)


def determinism_violation(m: Spliffer) -> str | None:
    """First reason (in state index order) why m is not a deterministic splitter.

    Deterministic means: one initial state, at most one transition per
    state and input letter, and all transitions of a state write to the
    same tape. Returns None when all three hold.
    """
    if len(m.initial) != 1:
        return f"expected a single initial state, found {len(m.initial)}"
    adj = transitions_by_source(m)
    for q in range(m.state_count):
        outs = adj.get(q, [])
        by_letter: dict[Letter, list[Generator]] = {}
        for g, _ in outs:
            by_letter.setdefault(g.letter, []).append(g)
        for a in sorted(by_letter):
            if len(by_letter[a]) > 1:
                gens = ", ".join(repr(g) for g in by_letter[a])
                return f"state {q} has {len(by_letter[a])} transitions on letter '{a}' ({gens})"
        tapes = {g.tape for g, _ in outs}
        if len(tapes) > 1:
            return f"state {q} writes to both tapes"
    return None


def is_deterministic(m: Spliffer) -> bool:
    return determinism_violation(m) is None


def input_projection(m: Spliffer) -> Nfa:
    """Drop the tape routing; keeps the graph, labels become plain letters."""
    return Nfa(
        alphabet=m.alphabet,
        state_count=m.state_count,
        transitions=frozenset((src, g.letter, dst) for src, g, dst in m.transitions),
        initial=m.initial,
        final=m.final,
    )


def output_projection(m: Spliffer) -> OutputTransducer:
    """Drop the input letter; labels become the (left, right) output pair."""
    return OutputTransducer(
        alphabet=m.alphabet,
        state_count=m.state_count,
        transitions=frozenset((src, g.output_pair(), dst) for src, g, dst in m.transitions),
        initial=m.initial,
        final=m.final,
    )


def is_functional_bruteforce(m: Spliffer, max_len: int) -> bool:
    """Enumeration oracle: no input word up to max_len has two distinct outputs."""
    by_input: dict[Word, set[tuple[Word, Word]]] = {}
    for t in enumerate_behavior(m, max_len):
        by_input.setdefault(t.shuffled, set()).add((t.left, t.right))
    return all(len(outs) == 1 for outs in by_input.values())


def is_injective_bruteforce(m: Spliffer, max_len: int) -> bool:
    """Enumeration oracle: no output pair up to max_len comes from two inputs."""
    by_output: dict[tuple[Word, Word], set[Word]] = {}
    for t in enumerate_behavior(m, max_len):
        by_output.setdefault((t.left, t.right), set()).add(t.shuffled)
    return all(len(inputs) == 1 for inputs in by_output.values())


def format_split_pair(pair: tuple[Word, Word]) -> str:
    l, r = pair
    return f"{format_word(l)} | {format_word(r)}"
