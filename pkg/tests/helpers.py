"""Shared test helpers: fixture loading, independent oracles, random machines.

The oracles here deliberately avoid the library's algorithms: merges are
enumerated from letter positions, machine behaviors by walking raw paths,
and automaton languages by simulating every word. They are the reference
the implementations are compared against.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from pathlib import Path

from spliffers import (
    Generator,
    Nfa,
    OutputTransducer,
    Spliffer,
    Tape,
    UTriple,
    Word,
    parse,
)
from spliffers.decide import SquareAutomaton
from spliffers.machines import transitions_by_source

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FIXTURE_NAMES = ("fig1", "fig2a", "fig2b", "fig3", "fig4")


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.spl"


def load_fixture(name: str) -> Spliffer:
    return parse(fixture_path(name).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# word-level oracles


def words_up_to(alphabet: tuple[str, ...], max_len: int) -> list[Word]:
    out: list[Word] = []
    for n in range(max_len + 1):
        out.extend(itertools.product(alphabet, repeat=n))
    return out


def all_merges(l: Word, r: Word) -> set[Word]:
    """Every interleaving of l and r, from explicit letter positions."""
    n = len(l) + len(r)
    merges = set()
    for left_slots in itertools.combinations(range(n), len(l)):
        slots = [""] * n
        for i, k in enumerate(left_slots):
            slots[k] = l[i]
        rest = iter(r)
        merged = tuple(slot if slot else next(rest) for slot in slots)
        merges.add(merged)
    return merges


def merge_sequence_count(l: Word, r: Word, s: Word) -> int:
    """How many position choices for l inside s reproduce s as a merge with r."""
    n = len(l) + len(r)
    if len(s) != n:
        return 0
    count = 0
    for left_slots in itertools.combinations(range(n), len(l)):
        left_set = set(left_slots)
        li = iter(l)
        ri = iter(r)
        if all((next(li) if k in left_set else next(ri)) == s[k] for k in range(n)):
            count += 1
    return count


# ---------------------------------------------------------------------------
# machine-level oracles (path walking, no configuration merging)


def run_labels(m: Spliffer, max_len: int) -> set[UTriple]:
    """Labels of successful runs of length at most max_len, by raw DFS."""
    adj = transitions_by_source(m)
    found: set[UTriple] = set()

    def walk(q: int, gens: list[Generator]) -> None:
        if q in m.final:
            found.add(UTriple.from_generators(gens))
        if len(gens) == max_len:
            return
        for g, dst in adj.get(q, ()):
            gens.append(g)
            walk(dst, gens)
            gens.pop()

    for q in m.initial:
        walk(q, [])
    return found


def count_runs_by_paths(m: Spliffer, t: UTriple, max_len: int) -> int:
    """Successful runs labeled t, counted path by path."""
    return sum(
        1
        for gens in _successful_paths(m, max_len)
        if UTriple.from_generators(gens) == t
    )


def _successful_paths(m: Spliffer, max_len: int) -> list[tuple[Generator, ...]]:
    adj = transitions_by_source(m)
    paths: list[tuple[Generator, ...]] = []

    def walk(q: int, gens: list[Generator]) -> None:
        if q in m.final:
            paths.append(tuple(gens))
        if len(gens) == max_len:
            return
        for g, dst in adj.get(q, ()):
            gens.append(g)
            walk(dst, gens)
            gens.pop()

    for q in m.initial:
        walk(q, [])
    return paths


def nfa_accepts(n: Nfa, w: Word) -> bool:
    move: dict[tuple[int, str], set[int]] = defaultdict(set)
    for src, a, dst in n.transitions:
        move[(src, a)].add(dst)
    current = set(n.initial)
    for a in w:
        current = {q for s in current for q in move[(s, a)]}
    return bool(current & n.final)


def nfa_words(n: Nfa, max_len: int, alphabet: tuple[str, ...] = ("a", "b")) -> set[Word]:
    return {w for w in words_up_to(alphabet, max_len) if nfa_accepts(n, w)}


def transducer_pairs(t: OutputTransducer, max_steps: int) -> set[tuple[Word, Word]]:
    """Output pairs along successful transducer paths of at most max_steps edges."""
    adj: dict[int, list[tuple[tuple[Word, Word], int]]] = defaultdict(list)
    for src, label, dst in sorted(t.transitions):
        adj[src].append((label, dst))
    layer = {(q, (), ()) for q in t.initial}
    found: set[tuple[Word, Word]] = set()
    for _ in range(max_steps + 1):
        found.update((l, r) for q, l, r in layer if q in t.final)
        layer = {
            (dst, l + lw, r + rw)
            for q, l, r in layer
            for (lw, rw), dst in adj[q]
        }
    return found


def square_run_labels(
    sq: SquareAutomaton, max_steps: int
) -> set[tuple[tuple[Word, Word], tuple[Word, Word], Word]]:
    """Labels of successful square runs of at most max_steps edges."""
    adj = defaultdict(list)
    for src, label, dst in sorted(sq.transitions):
        adj[src].append((label, dst))
    layer = {(p, (), (), (), (), ()) for p in sq.initial}
    found = set()
    for _ in range(max_steps + 1):
        for p, l1, r1, l2, r2, w in layer:
            if p in sq.final:
                found.add(((l1, r1), (l2, r2), w))
        layer = {
            (dst, l1 + f1, r1 + g1, l2 + f2, r2 + g2, w + (a,))
            for p, l1, r1, l2, r2, w in layer
            for ((f1, g1), (f2, g2), a), dst in adj[p]
        }
    return found


def paired_run_labels(
    m: Spliffer, max_len: int
) -> set[tuple[tuple[Word, Word], tuple[Word, Word], Word]]:
    """All pairs of same-input successful run labels of m, the square's reference."""
    by_input: dict[Word, set[tuple[Word, Word]]] = defaultdict(set)
    for t in run_labels(m, max_len):
        by_input[t.shuffled].add((t.left, t.right))
    return {
        (o1, o2, w)
        for w, outs in by_input.items()
        for o1 in outs
        for o2 in outs
    }


# ---------------------------------------------------------------------------
# behavior set algebra (for the rational operation laws)


def concat_triples(t1: UTriple, t2: UTriple) -> UTriple:
    return UTriple(t1.left + t2.left, t1.right + t2.right, t1.shuffled + t2.shuffled)


def pointwise_product(s1: set[UTriple], s2: set[UTriple], max_len: int) -> set[UTriple]:
    return {
        concat_triples(t1, t2)
        for t1 in s1
        for t2 in s2
        if t1.length + t2.length <= max_len
    }


def star_closure(s: set[UTriple], max_len: int) -> set[UTriple]:
    closure = {UTriple((), (), ())}
    frontier = set(closure)
    while frontier:
        grown = {
            concat_triples(t1, t2)
            for t1 in frontier
            for t2 in s
            if t1.length + t2.length <= max_len
        }
        frontier = grown - closure
        closure |= frontier
    return closure


# ---------------------------------------------------------------------------
# random machines


def random_spliffer(
    rng: random.Random, max_states: int = 4, alphabet: tuple[str, ...] = ("a", "b")
) -> Spliffer:
    """Random machine with a uniformly random transition count in [0, 2n+1]."""
    n = rng.randint(1, max_states)
    grid = [
        (q, Generator(tape, a), d)
        for q in range(n)
        for a in alphabet
        for tape in (Tape.LEFT, Tape.RIGHT)
        for d in range(n)
    ]
    k = min(rng.randint(0, 2 * n + 1), len(grid))
    transitions = rng.sample(grid, k)
    initial = set(rng.sample(range(n), rng.randint(1, min(2, n))))
    final = {q for q in range(n) if rng.random() < 0.4}
    return Spliffer(frozenset(alphabet), n, frozenset(transitions), frozenset(initial), frozenset(final))


def random_deterministic_spliffer(
    rng: random.Random,
    max_states: int = 4,
    alphabet: tuple[str, ...] = ("a", "b"),
    n_states: int | None = None,
) -> Spliffer:
    n = n_states if n_states is not None else rng.randint(1, max_states)
    transitions = set()
    for q in range(n):
        tape = rng.choice((Tape.LEFT, Tape.RIGHT))
        for a in alphabet:
            if rng.random() < 0.55:
                transitions.add((q, Generator(tape, a), rng.randrange(n)))
    final = {q for q in range(n) if rng.random() < 0.4}
    return Spliffer(frozenset(alphabet), n, frozenset(transitions), frozenset({0}), frozenset(final))


def permuted(m: Spliffer, rng: random.Random) -> Spliffer:
    """Behavior-preserving state renaming."""
    perm = list(range(m.state_count))
    rng.shuffle(perm)
    return Spliffer(
        m.alphabet,
        m.state_count,
        frozenset((perm[s], g, perm[d]) for s, g, d in m.transitions),
        frozenset(perm[q] for q in m.initial),
        frozenset(perm[q] for q in m.final),
    )


def with_junk_state(m: Spliffer, rng: random.Random) -> Spliffer:
    """Add an unreachable non-final state; behavior and determinism preserved."""
    junk = m.state_count
    tape = rng.choice((Tape.LEFT, Tape.RIGHT))
    a = rng.choice(sorted(m.alphabet))
    return Spliffer(
        m.alphabet,
        m.state_count + 1,
        frozenset(m.transitions) | {(junk, Generator(tape, a), junk)},
        m.initial,
        m.final,
    )
