"""Automata over interleaved words: shuffle two words into one, or split one into two.

The package models three-tape machines whose edges route single letters
to a left or right output word while consuming them from a shuffled
input. It provides the word-triple algebra, machine semantics, rational
operations (union, product, star, trim), a lead-or-delay value algebra,
and decision procedures for determinism, functionality and equivalence,
plus a textual file format and CLI.
"""

from .decide import (
    DIFFERENT_DOMAIN,
    DIFFERENT_OUTPUTS,
    EQUIVALENT,
    INPUT_NOT_FUNCTIONAL,
    Conflict,
    EquivalenceVerdict,
    FunctionalityVerdict,
    SquareAutomaton,
    Valuation,
    complete_dfa,
    dfa_equivalent,
    equivalent_deterministic,
    equivalent_functional,
    is_functional,
    nfa_to_dfa,
    square,
    valuation,
)
from .fileformat import MachineSyntaxError, parse, serialize, serialize_nfa
from .leaddelay import (
    BALANCED,
    BALANCED_PAIR,
    ZERO,
    LeadOrDelay,
    PairValue,
    delay,
    delta,
    delta2,
    lead,
)
from .machines import (
    Nfa,
    OutputTransducer,
    Spliffer,
    accepts,
    count_accepting_runs,
    determinism_violation,
    enumerate_behavior,
    input_projection,
    is_deterministic,
    is_functional_bruteforce,
    is_injective_bruteforce,
    output_projection,
    split,
    validate,
)
from .monoid import (
    Generator,
    InvalidTripleError,
    Letter,
    Tape,
    UTriple,
    Word,
    count_decompositions,
    format_triple,
    format_word,
    is_interleaving,
    left,
    right,
    word,
)
from .operations import product, star, trim, union

__version__ = "0.1.0"

__all__ = [
    "BALANCED",
    "BALANCED_PAIR",
    "Conflict",
    "DIFFERENT_DOMAIN",
    "DIFFERENT_OUTPUTS",
    "EQUIVALENT",
    "EquivalenceVerdict",
    "FunctionalityVerdict",
    "Generator",
    "INPUT_NOT_FUNCTIONAL",
    "InvalidTripleError",
    "LeadOrDelay",
    "Letter",
    "MachineSyntaxError",
    "Nfa",
    "OutputTransducer",
    "PairValue",
    "Spliffer",
    "SquareAutomaton",
    "Tape",
    "UTriple",
    "Valuation",
    "Word",
    "ZERO",
    "accepts",
    "complete_dfa",
    "count_accepting_runs",
    "count_decompositions",
    "delay",
    "delta",
    "delta2",
    "determinism_violation",
    "dfa_equivalent",
    "enumerate_behavior",
    "equivalent_deterministic",
    "equivalent_functional",
    "format_triple",
    "format_word",
    "input_projection",
    "is_deterministic",
    "is_functional",
    "is_functional_bruteforce",
    "is_injective_bruteforce",
    "is_interleaving",
    "lead",
    "left",
    "nfa_to_dfa",
    "output_projection",
    "parse",
    "product",
    "right",
    "serialize",
    "serialize_nfa",
    "split",
    "square",
    "star",
    "trim",
    "union",
    "validate",
    "valuation",
    "word",
]
