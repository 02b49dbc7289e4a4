"""Rational operations on spliffer behaviors: union, product, star, trim.

Product and star link sub-machines with transient free moves which are
eliminated before returning, because spliffer edges must carry a
generator. Elimination copies the target's outgoing edges (and finality)
onto the source until nothing changes; behavior is preserved since path
length equals label length.
"""

from __future__ import annotations

from .machines import Spliffer, Transition, accessible_states, coaccessible_states


def union(m1: Spliffer, m2: Spliffer) -> Spliffer:
    """Disjoint union; the behavior is the union of the two behaviors."""
    off = m1.state_count
    return Spliffer(
        alphabet=m1.alphabet | m2.alphabet,
        state_count=m1.state_count + m2.state_count,
        transitions=frozenset(m1.transitions)
        | frozenset((s + off, g, d + off) for s, g, d in m2.transitions),
        initial=frozenset(m1.initial) | frozenset(i + off for i in m2.initial),
        final=frozenset(m1.final) | frozenset(f + off for f in m2.final),
    )


def product(m1: Spliffer, m2: Spliffer) -> Spliffer:
    """Concatenation: behavior {t1 . t2 : t1 in |m1|, t2 in |m2|}."""
    off = m1.state_count
    transitions = set(m1.transitions) | {(s + off, g, d + off) for s, g, d in m2.transitions}
    free_moves = {(f, i + off) for f in m1.final for i in m2.initial}
    final = {f + off for f in m2.final}
    transitions, final = _eliminate_free_moves(transitions, free_moves, final)
    return Spliffer(
        alphabet=m1.alphabet | m2.alphabet,
        state_count=m1.state_count + m2.state_count,
        transitions=frozenset(transitions),
        initial=m1.initial,
        final=frozenset(final),
    )


def star(m: Spliffer) -> Spliffer:
    """Kleene star of the behavior, including the identity triple.

    A fresh initial-final state fronts the machine; marking existing
    initials final instead would inflate the behavior whenever an initial
    state has incoming edges.
    """
    hub = m.state_count
    transitions = set(m.transitions)
    free_moves = {(hub, i) for i in m.initial} | {(f, hub) for f in m.final}
    final = set(m.final) | {hub}
    transitions, final = _eliminate_free_moves(transitions, free_moves, final)
    return Spliffer(
        alphabet=m.alphabet,
        state_count=m.state_count + 1,
        transitions=frozenset(transitions),
        initial=frozenset({hub}),
        final=frozenset(final),
    )


def _eliminate_free_moves(
    transitions: set[Transition],
    free_moves: set[tuple[int, int]],
    final: set[int],
) -> tuple[set[Transition], set[int]]:
    transitions = set(transitions)
    final = set(final)
    changed = True
    while changed:
        changed = False
        for u, v in free_moves:
            for src, g, dst in list(transitions):
                if src != v:
                    continue
                if (u, g, dst) not in transitions:
                    transitions.add((u, g, dst))
                    changed = True
            if v in final and u not in final:
                final.add(u)
                changed = True
    return transitions, final


def trim(m: Spliffer) -> Spliffer:
    """Restriction to states that lie on some successful run; behavior preserved.

    States are renumbered contiguously in increasing order, so trimming an
    already-trim machine is the identity. A machine with empty behavior
    trims to a single initial state with no transitions.
    """
    keep = sorted(accessible_states(m) & coaccessible_states(m))
    if not keep:
        return Spliffer(
            alphabet=m.alphabet,
            state_count=1,
            transitions=frozenset(),
            initial=frozenset({0}),
            final=frozenset(),
        )
    renumber = {q: i for i, q in enumerate(keep)}
    kept = set(keep)
    return Spliffer(
        alphabet=m.alphabet,
        state_count=len(keep),
        transitions=frozenset(
            (renumber[s], g, renumber[d])
            for s, g, d in m.transitions
            if s in kept and d in kept
        ),
        initial=frozenset(renumber[q] for q in m.initial if q in kept),
        final=frozenset(renumber[q] for q in m.final if q in kept),
    )
