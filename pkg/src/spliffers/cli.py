"""Command-line frontend.

Every subcommand is a thin wrapper over one library call. Exit codes:
0 for an affirmative verdict or successful construction, 1 for a negative
verdict, 2 for usage, parse or validation errors. Reports go to stdout,
diagnostics to stderr, and output is deterministic for a given input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import decide, fileformat, machines, operations
from .machines import Spliffer, format_split_pair
from .monoid import InvalidTripleError, UTriple, Word, format_triple, format_word, word


class _CliError(Exception):
    """Diagnostic that aborts the command with exit code 2."""


def _load(path: str) -> Spliffer:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliError(f"{path}: {exc.strerror or exc}") from exc
    try:
        m = fileformat.parse(text)
    except fileformat.MachineSyntaxError as exc:
        raise _CliError(f"{path}: {exc}") from exc
    problems = machines.validate(m)
    if problems:
        raise _CliError("\n".join(f"{path}: {p}" for p in problems))
    return m


def _write_machine(m: Spliffer, out: str | None) -> None:
    text = fileformat.serialize(m)
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _print_witness(witness_input: Word, outputs) -> None:
    print(f"input: {format_word(witness_input)}")
    print(f"output 1: {format_split_pair(outputs[0])}")
    print(f"output 2: {format_split_pair(outputs[1])}")


def _cmd_validate(args) -> int:
    try:
        text = Path(args.machine).read_text(encoding="utf-8")
        m = fileformat.parse(text)
    except OSError as exc:
        raise _CliError(f"{args.machine}: {exc.strerror or exc}") from exc
    except fileformat.MachineSyntaxError as exc:
        raise _CliError(f"{args.machine}: {exc}") from exc
    problems = machines.validate(m)
    if problems:
        print("INVALID")
        for p in problems:
            print(f"- {p}")
        return 1
    print("VALID")
    return 0


def _cmd_check_det(args) -> int:
    violation = machines.determinism_violation(_load(args.machine))
    if violation is None:
        print("DETERMINISTIC")
        return 0
    print("NOT DETERMINISTIC")
    print(f"witness: {violation}")
    return 1


def _cmd_check_fun(args) -> int:
    verdict = decide.is_functional(_load(args.machine))
    if verdict.functional:
        print("FUNCTIONAL")
        return 0
    print("NOT FUNCTIONAL")
    assert verdict.witness_input is not None and verdict.witness_outputs is not None
    _print_witness(verdict.witness_input, verdict.witness_outputs)
    return 1


def _cmd_equiv(args) -> int:
    m1, m2 = _load(args.machine1), _load(args.machine2)
    if args.det:
        try:
            verdict = decide.equivalent_deterministic(m1, m2)
        except ValueError as exc:
            raise _CliError(str(exc)) from exc
    else:
        verdict = decide.equivalent_functional(m1, m2)
    if verdict.kind == decide.EQUIVALENT:
        print("EQUIVALENT")
        return 0
    if verdict.kind == decide.DIFFERENT_DOMAIN:
        print("DIFFERENT DOMAIN")
        assert verdict.witness_input is not None
        print(f"input: {format_word(verdict.witness_input)}")
        return 1
    if verdict.kind == decide.DIFFERENT_OUTPUTS:
        print("DIFFERENT OUTPUTS")
    else:
        print("INPUT NOT FUNCTIONAL")
        print(f"machine: {verdict.which}")
    assert verdict.witness_input is not None and verdict.witness_outputs is not None
    _print_witness(verdict.witness_input, verdict.witness_outputs)
    return 1


def _cmd_accepts(args) -> int:
    m = _load(args.machine)
    try:
        t = UTriple(word(args.left), word(args.right), word(args.shuffled))
    except InvalidTripleError as exc:
        raise _CliError(str(exc)) from exc
    if machines.accepts(m, t):
        print("ACCEPTED")
        return 0
    print("REJECTED")
    return 1


def _cmd_split(args) -> int:
    pairs = machines.split(_load(args.machine), word(args.word))
    for pair in pairs:
        print(format_split_pair(pair))
    return 0 if pairs else 1


def _cmd_enumerate(args) -> int:
    found = machines.enumerate_behavior(_load(args.machine), args.max_len)
    for t in sorted(found, key=UTriple.sort_key):
        print(format_triple(t))
    return 0


def _cmd_union(args) -> int:
    _write_machine(operations.union(_load(args.machine1), _load(args.machine2)), args.output)
    return 0


def _cmd_product(args) -> int:
    _write_machine(operations.product(_load(args.machine1), _load(args.machine2)), args.output)
    return 0


def _cmd_star(args) -> int:
    _write_machine(operations.star(_load(args.machine)), args.output)
    return 0


def _cmd_trim(args) -> int:
    _write_machine(operations.trim(_load(args.machine)), args.output)
    return 0


def _cmd_project_input(args) -> int:
    nfa = machines.input_projection(_load(args.machine))
    text = fileformat.serialize_nfa(nfa)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spliffers",
        description="Decide properties of machines that split one word into two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help: str):
        p = sub.add_parser(name, help=help)
        p.set_defaults(handler=handler)
        return p

    p = add("validate", _cmd_validate, "check machine file invariants")
    p.add_argument("machine")

    p = add("check-det", _cmd_check_det, "decide determinism")
    p.add_argument("machine")

    p = add("check-fun", _cmd_check_fun, "decide functionality")
    p.add_argument("machine")

    p = add("equiv", _cmd_equiv, "decide equivalence of two functional machines")
    p.add_argument("machine1")
    p.add_argument("machine2")
    p.add_argument("--det", action="store_true", help="require determinism, skip functionality checks")

    p = add("accepts", _cmd_accepts, "test membership of a triple (use - for the empty word)")
    p.add_argument("machine")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("shuffled")

    p = add("split", _cmd_split, "all ways the machine splits a word")
    p.add_argument("machine")
    p.add_argument("word")

    p = add("enumerate", _cmd_enumerate, "behavior elements up to a length bound")
    p.add_argument("machine")
    p.add_argument("--max-len", type=int, default=8)

    p = add("union", _cmd_union, "union of two behaviors")
    p.add_argument("machine1")
    p.add_argument("machine2")
    p.add_argument("-o", "--output")

    p = add("product", _cmd_product, "concatenation of two behaviors")
    p.add_argument("machine1")
    p.add_argument("machine2")
    p.add_argument("-o", "--output")

    p = add("star", _cmd_star, "Kleene star of a behavior")
    p.add_argument("machine")
    p.add_argument("-o", "--output")

    p = add("trim", _cmd_trim, "drop states off every successful run")
    p.add_argument("machine")
    p.add_argument("-o", "--output")

    p = add("project-input", _cmd_project_input, "underlying input automaton")
    p.add_argument("machine")
    p.add_argument("-o", "--output")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
