"""Decision procedures: functionality of a splitter and equivalence of two.

Functionality is decided on the square of the machine, which runs two
copies side by side on the same input. Propagating the pairwise
lead-or-delay value over the trimmed square either assigns every state
pair a single value (a valuation) or exposes two runs of the same input
with different outputs. The machine is functional exactly when the
valuation exists and every final pair is balanced; both failure modes
yield a concrete replayable witness.

Equivalence of functional splitters reduces to one domain comparison of
the input projections plus one functionality check of the union machine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .leaddelay import BALANCED_PAIR, PairValue, delta2
from .machines import (
    Nfa,
    Spliffer,
    determinism_violation,
    input_projection,
    transitions_by_source,
)
from .monoid import Letter, Word
from .operations import union

StatePair = tuple[int, int]
# Label: (outputs of first copy, outputs of second copy, shared input letter).
SquareLabel = tuple[tuple[Word, Word], tuple[Word, Word], Letter]
SquareEdge = tuple[StatePair, SquareLabel, StatePair]

OutputPair = tuple[Word, Word]


@dataclass(frozen=True)
class SquareAutomaton:
    """Two synchronized copies of a spliffer, trimmed.

    A pair transition exists iff both projections are transitions of the
    base machine on the same input letter. ``explored_states`` counts the
    accessible pairs built before the co-accessibility cut.
    """

    base: Spliffer
    states: frozenset[StatePair]
    transitions: frozenset[SquareEdge]
    initial: frozenset[StatePair]
    final: frozenset[StatePair]
    explored_states: int


def square(m: Spliffer) -> SquareAutomaton:
    """Build the trimmed square of m, exploring only accessible pairs."""
    adj = transitions_by_source(m)
    start = {(i, j) for i in m.initial for j in m.initial}
    accessible = set(start)
    queue = deque(sorted(start))
    edges: list[SquareEdge] = []
    while queue:
        pair = queue.popleft()
        q1, q2 = pair
        for g1, d1 in adj.get(q1, ()):
            for g2, d2 in adj.get(q2, ()):
                if g1.letter != g2.letter:
                    continue
                dst = (d1, d2)
                edges.append((pair, (g1.output_pair(), g2.output_pair(), g1.letter), dst))
                if dst not in accessible:
                    accessible.add(dst)
                    queue.append(dst)

    finals = {(f1, f2) for f1 in m.final for f2 in m.final} & accessible
    reverse: dict[StatePair, list[StatePair]] = {}
    for src, _, dst in edges:
        reverse.setdefault(dst, []).append(src)
    coaccessible = set(finals)
    stack = list(finals)
    while stack:
        pair = stack.pop()
        for src in reverse.get(pair, ()):
            if src not in coaccessible:
                coaccessible.add(src)
                stack.append(src)

    keep = accessible & coaccessible
    return SquareAutomaton(
        base=m,
        states=frozenset(keep),
        transitions=frozenset(e for e in edges if e[0] in keep and e[2] in keep),
        initial=frozenset(start & keep),
        final=frozenset(finals & keep),
        explored_states=len(accessible),
    )


@dataclass
class Valuation:
    """Each reachable state pair received exactly one value."""

    values: dict[StatePair, PairValue]
    configs_explored: int
    parents: dict[StatePair, SquareEdge | None] = field(repr=False, default_factory=dict)


@dataclass
class Conflict:
    """A state pair received two distinct values, one per witness path."""

    state: StatePair
    value1: PairValue
    value2: PairValue
    path1: tuple[SquareEdge, ...]
    path2: tuple[SquareEdge, ...]
    values: dict[StatePair, PairValue] = field(repr=False, default_factory=dict)
    configs_explored: int = 0


ValuationResult = Valuation | Conflict


def valuation(sq: SquareAutomaton) -> ValuationResult:
    """Propagate the pairwise lead-or-delay value over the trimmed square.

    Breadth-first from the initial pairs, all valued balanced. The number
    of (state, value) configurations explored is at most one more than the
    number of square states: the sweep stops at the first pair that would
    receive a second value.
    """
    adj: dict[StatePair, list[SquareEdge]] = {}
    for edge in sorted(sq.transitions):
        adj.setdefault(edge[0], []).append(edge)

    values: dict[StatePair, PairValue] = {}
    parents: dict[StatePair, SquareEdge | None] = {}
    configs = 0
    queue: deque[StatePair] = deque()
    for pair in sorted(sq.initial):
        values[pair] = BALANCED_PAIR
        parents[pair] = None
        configs += 1
        queue.append(pair)

    while queue:
        pair = queue.popleft()
        for edge in adj.get(pair, ()):
            _, (out1, out2, _), dst = edge
            value = delta2(values[pair], out1, out2)
            if dst not in values:
                values[dst] = value
                parents[dst] = edge
                configs += 1
                queue.append(dst)
            elif values[dst] != value:
                configs += 1
                return Conflict(
                    state=dst,
                    value1=values[dst],
                    value2=value,
                    path1=_path_from_parents(parents, dst),
                    path2=_path_from_parents(parents, pair) + (edge,),
                    values=values,
                    configs_explored=configs,
                )
    return Valuation(values=values, configs_explored=configs, parents=parents)


def _path_from_parents(
    parents: dict[StatePair, SquareEdge | None], pair: StatePair
) -> tuple[SquareEdge, ...]:
    path: list[SquareEdge] = []
    while True:
        edge = parents[pair]
        if edge is None:
            return tuple(reversed(path))
        path.append(edge)
        pair = edge[0]


def _completion_path(sq: SquareAutomaton, start: StatePair) -> tuple[SquareEdge, ...]:
    """Shortest path from start to any final pair; exists because sq is trim."""
    if start in sq.final:
        return ()
    adj: dict[StatePair, list[SquareEdge]] = {}
    for edge in sorted(sq.transitions):
        adj.setdefault(edge[0], []).append(edge)
    back: dict[StatePair, SquareEdge] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        pair = queue.popleft()
        for edge in adj.get(pair, ()):
            dst = edge[2]
            if dst in seen:
                continue
            seen.add(dst)
            back[dst] = edge
            if dst in sq.final:
                path: list[SquareEdge] = []
                while dst != start:
                    path.append(back[dst])
                    dst = back[dst][0]
                return tuple(reversed(path))
            queue.append(dst)
    raise AssertionError("square automaton was not co-accessible")


def _value_along(path: tuple[SquareEdge, ...]) -> PairValue:
    value = BALANCED_PAIR
    for _, (out1, out2, _), _ in path:
        value = delta2(value, out1, out2)
    return value


def _path_witness(path: tuple[SquareEdge, ...]) -> tuple[Word, OutputPair, OutputPair]:
    inp: list[Letter] = []
    l1: list[Letter] = []
    r1: list[Letter] = []
    l2: list[Letter] = []
    r2: list[Letter] = []
    for _, ((f1, g1), (f2, g2), a), _ in path:
        inp.append(a)
        l1.extend(f1)
        r1.extend(g1)
        l2.extend(f2)
        r2.extend(g2)
    return tuple(inp), (tuple(l1), tuple(r1)), (tuple(l2), tuple(r2))


@dataclass(frozen=True)
class FunctionalityVerdict:
    """Outcome of the functionality decision, with instrumentation counters.

    A negative verdict carries a witness: an input word together with two
    distinct output pairs that the machine both relates to it.
    """

    functional: bool
    witness_input: Word | None = None
    witness_outputs: tuple[OutputPair, OutputPair] | None = None
    square_states_explored: int = 0
    square_states: int = 0
    valuation_configs: int = 0


def is_functional(m: Spliffer) -> FunctionalityVerdict:
    """Decide whether the behavior of m maps each input to at most one output.

    Functional iff the value sweep over the trimmed square is a valuation
    and every final pair is balanced. Cost is quadratic in the state count:
    the square has at most |Q|^2 pairs and the sweep visits each at most
    once (plus the one conflicting configuration).
    """
    sq = square(m)
    result = valuation(sq)

    def verdict(path: tuple[SquareEdge, ...] | None, configs: int) -> FunctionalityVerdict:
        if path is None:
            return FunctionalityVerdict(
                functional=True,
                square_states_explored=sq.explored_states,
                square_states=len(sq.states),
                valuation_configs=configs,
            )
        witness_input, out1, out2 = _path_witness(path)
        return FunctionalityVerdict(
            functional=False,
            witness_input=witness_input,
            witness_outputs=(out1, out2),
            square_states_explored=sq.explored_states,
            square_states=len(sq.states),
            valuation_configs=configs,
        )

    if isinstance(result, Conflict):
        completion = _completion_path(sq, result.state)
        for path in (result.path1 + completion, result.path2 + completion):
            if _value_along(path) != BALANCED_PAIR:
                return verdict(path, result.configs_explored)
        raise AssertionError("both conflict paths balanced at a final pair")

    bad_finals = sorted(p for p in sq.final if result.values[p] != BALANCED_PAIR)
    if bad_finals:
        return verdict(
            _path_from_parents(result.parents, bad_finals[0]), result.configs_explored
        )
    return verdict(None, result.configs_explored)


def nfa_to_dfa(n: Nfa, alphabet: frozenset[Letter] | None = None) -> Nfa:
    """Subset construction; the result is deterministic and complete.

    Completion may add an explicit sink (the empty subset). Passing a
    larger alphabet completes the result over it, which makes two
    determinized automata comparable.
    """
    letters = sorted(alphabet if alphabet is not None else n.alphabet)
    move: dict[tuple[int, Letter], set[int]] = {}
    for src, a, dst in n.transitions:
        move.setdefault((src, a), set()).add(dst)

    start = frozenset(n.initial)
    ids: dict[frozenset[int], int] = {start: 0}
    worklist = [start]
    transitions: set[tuple[int, Letter, int]] = set()
    final: set[int] = set()
    while worklist:
        subset = worklist.pop()
        sid = ids[subset]
        if subset & n.final:
            final.add(sid)
        for a in letters:
            target = frozenset(q for s in subset for q in move.get((s, a), ()))
            if target not in ids:
                ids[target] = len(ids)
                worklist.append(target)
            transitions.add((sid, a, ids[target]))
    return Nfa(
        alphabet=frozenset(letters),
        state_count=len(ids),
        transitions=frozenset(transitions),
        initial=frozenset({0}),
        final=frozenset(final),
    )


def _dfa_table(d: Nfa) -> tuple[int, dict[tuple[int, Letter], int]]:
    """Validate that d is a deterministic complete automaton with one initial state."""
    if len(d.initial) != 1:
        raise ValueError(f"expected one initial state, found {len(d.initial)}")
    table: dict[tuple[int, Letter], int] = {}
    for src, a, dst in d.transitions:
        if (src, a) in table:
            raise ValueError(f"not deterministic: two transitions from {src} on '{a}'")
        table[(src, a)] = dst
    for q in range(d.state_count):
        for a in d.alphabet:
            if (q, a) not in table:
                raise ValueError(f"not complete: no transition from {q} on '{a}'")
    return next(iter(d.initial)), table


def complete_dfa(n: Nfa, alphabet: frozenset[Letter] | None = None) -> Nfa:
    """Add an explicit sink so every (state, letter) has a move.

    Rejects nondeterministic input; used on input projections of
    deterministic splitters, which are deterministic but partial.
    """
    letters = frozenset(alphabet if alphabet is not None else n.alphabet)
    seen: set[tuple[int, Letter]] = set()
    for src, a, _ in n.transitions:
        if (src, a) in seen:
            raise ValueError(f"not deterministic: two transitions from {src} on '{a}'")
        seen.add((src, a))
    missing = [
        (q, a) for q in range(n.state_count) for a in sorted(letters) if (q, a) not in seen
    ]
    if not missing:
        return Nfa(letters, n.state_count, n.transitions, n.initial, n.final)
    sink = n.state_count
    extra = {(q, a, sink) for q, a in missing} | {(sink, a, sink) for a in letters}
    return Nfa(
        alphabet=letters,
        state_count=n.state_count + 1,
        transitions=frozenset(n.transitions) | extra,
        initial=n.initial,
        final=n.final,
    )


def dfa_equivalent(d1: Nfa, d2: Nfa) -> tuple[bool, Word | None]:
    """Language equality of two complete DFAs over the same alphabet.

    Breadth-first bisimulation over reachable state pairs; on failure the
    access word of the first distinguishing pair is a shortest word in
    exactly one of the two languages.
    """
    if d1.alphabet != d2.alphabet:
        raise ValueError("alphabets differ; complete both over the union first")
    i1, t1 = _dfa_table(d1)
    i2, t2 = _dfa_table(d2)
    letters = sorted(d1.alphabet)
    queue: deque[tuple[int, int, Word]] = deque([(i1, i2, ())])
    seen = {(i1, i2)}
    while queue:
        p, q, w = queue.popleft()
        if (p in d1.final) != (q in d2.final):
            return False, w
        for a in letters:
            nxt = (t1[(p, a)], t2[(q, a)])
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt[0], nxt[1], w + (a,)))
    return True, None


EQUIVALENT = "equivalent"
DIFFERENT_DOMAIN = "different-domain"
DIFFERENT_OUTPUTS = "different-outputs"
INPUT_NOT_FUNCTIONAL = "input-not-functional"


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of an equivalence check between two splitters.

    kind is one of "equivalent", "different-domain" (witness_input lies in
    exactly one domain), "different-outputs" (witness_input gets distinct
    outputs), or "input-not-functional" (which names the offending
    argument, 1 or 2, and the witness shows its two outputs).
    """

    kind: str
    witness_input: Word | None = None
    witness_outputs: tuple[OutputPair, OutputPair] | None = None
    which: int | None = None

    @property
    def equivalent(self) -> bool:
        return self.kind == EQUIVALENT


def _domain_witness(m1: Spliffer, m2: Spliffer, determinize: bool) -> Word | None:
    """A shortest word in exactly one of the two domains, or None if equal."""
    letters = m1.alphabet | m2.alphabet
    p1, p2 = input_projection(m1), input_projection(m2)
    if determinize:
        d1, d2 = nfa_to_dfa(p1, letters), nfa_to_dfa(p2, letters)
    else:
        d1, d2 = complete_dfa(p1, letters), complete_dfa(p2, letters)
    same, witness = dfa_equivalent(d1, d2)
    return None if same else witness


def _decide_union(m1: Spliffer, m2: Spliffer) -> EquivalenceVerdict:
    merged = is_functional(union(m1, m2))
    if merged.functional:
        return EquivalenceVerdict(EQUIVALENT)
    return EquivalenceVerdict(
        DIFFERENT_OUTPUTS,
        witness_input=merged.witness_input,
        witness_outputs=merged.witness_outputs,
    )


def equivalent_functional(m1: Spliffer, m2: Spliffer) -> EquivalenceVerdict:
    """Decide |m1| = |m2| for functional splitters.

    Checks functionality of both arguments, then compares domains (subset
    construction on the input projections), and finally tests whether the
    union of the two behaviors is still functional; over a shared domain
    that holds exactly when the two partial functions coincide.
    """
    for which, m in ((1, m1), (2, m2)):
        verdict = is_functional(m)
        if not verdict.functional:
            return EquivalenceVerdict(
                INPUT_NOT_FUNCTIONAL,
                witness_input=verdict.witness_input,
                witness_outputs=verdict.witness_outputs,
                which=which,
            )
    witness = _domain_witness(m1, m2, determinize=True)
    if witness is not None:
        return EquivalenceVerdict(DIFFERENT_DOMAIN, witness_input=witness)
    return _decide_union(m1, m2)


def equivalent_deterministic(m1: Spliffer, m2: Spliffer) -> EquivalenceVerdict:
    """Equivalence of deterministic spliffers, quadratic in the state counts.

    Deterministic splitters are functional, so no functionality precheck
    is run; their input projections are already deterministic, so the
    domain comparison only completes them with a sink. Raises ValueError
    on nondeterministic input.
    """
    for which, m in ((1, m1), (2, m2)):
        violation = determinism_violation(m)
        if violation is not None:
            raise ValueError(f"machine {which} is not deterministic: {violation}")
    witness = _domain_witness(m1, m2, determinize=False)
    if witness is not None:
        return EquivalenceVerdict(DIFFERENT_DOMAIN, witness_input=witness)
    return _decide_union(m1, m2)
