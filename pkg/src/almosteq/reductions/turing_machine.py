# The MIT License (MIT)
#
# Copyright (c) 2026 AlmostEq Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
"""Reduction of linear bounded Turing machines to the universality of
regular expressions.

A run of a machine M on an input s with n = |s| cells is written as the
word

    # c_1 ... c_n # c_1' ... c_n' # ...

over the alphabet made of the separator `#`, the tape symbols and fused
head symbols `state:symbol` that mark the head cell. The generated
expression matches every word that is NOT an accepting run up to (and
including) its first accepting head symbol:

- input errors: the word does not start with the initial configuration,
- acceptance errors: the word contains no accepting head symbol,
- transition errors: some window of three symbols is followed, n + 1
  symbols later, by a triple that is no allowed successor of the window.

Everything after the first accepting head symbol is unconstrained, so the
complement of the expression is empty or has nonzero density, and M
accepts s if and only if the expression does not denote A*.
"""

import itertools as _itertools
from collections.abc import Sequence as _Sequence
from dataclasses import dataclass as _dataclass

from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.alphabet import Word as _Word
from almosteq.core.conf import Direction as _Direction
from almosteq.core.errors import MalformedInputError as _MalformedInputError
from almosteq.reductions.instances import TmSpec as _TmSpec
from almosteq.reductions.instances import tm_word as _tm_word
from almosteq.regex.ast import Concat as _Concat
from almosteq.regex.ast import Literal as _Literal
from almosteq.regex.ast import RegexAst as _RegexAst
from almosteq.regex.ast import Star as _Star
from almosteq.regex.ast import any_of as _any_of
from almosteq.regex.ast import concat_all as _concat_all
from almosteq.regex.ast import power as _power
from almosteq.regex.ast import union_all as _union_all
from almosteq.regex.ast import word_expression as _word_expression

SEPARATOR = "#"

Window = tuple[str, str, str]


@_dataclass(frozen=True)
class Configuration:
    """A configuration of a machine: state, head cell (0-based) and tape."""

    state: str
    head: int
    tape: tuple[str, ...]

    def symbols(self) -> _Word:
        """The cells of this configuration with the fused head symbol."""
        cells = list(self.tape)
        cells[self.head] = head_symbol(self.state, self.tape[self.head])
        return tuple(cells)


def head_symbol(state: str, symbol: str) -> str:
    """The fused symbol of a head in a state reading a tape symbol."""
    return f"{state}:{symbol}"


def composite_alphabet(machine: _TmSpec) -> _Alphabet:
    """The alphabet of run words: `#`, the tape symbols and the head
    symbols, in this order."""
    heads = [
        head_symbol(state, symbol)
        for state in machine.states
        for symbol in machine.tape_alphabet
    ]
    return _Alphabet((SEPARATOR, *machine.tape_alphabet, *heads))


def initial_configuration(machine: _TmSpec, word: _Sequence[str]) -> Configuration:
    """The configuration with the head on the first input cell."""
    return Configuration(machine.initial, 0, tuple(word))


def successors(
    machine: _TmSpec, configuration: Configuration
) -> tuple[list[Configuration], bool]:
    """All successor configurations.

    Returns:
        The successors and a flag that is true if a move was blocked
        because it would have left the tape.
    """
    state, head, tape = configuration.state, configuration.head, configuration.tape
    result = []
    blocked = False
    for next_state, written, direction in sorted(
        machine.moves(state, tape[head]),
        key=lambda move: (move[0], move[1], move[2].letter),
    ):
        target = head - 1 if direction is _Direction.left else head + 1
        if not 0 <= target < len(tape):
            blocked = True
            continue
        new_tape = tape[:head] + (written,) + tape[head + 1 :]
        result.append(Configuration(next_state, target, new_tape))
    return result, blocked


def encode_run(configurations: _Sequence[Configuration]) -> _Word:
    """The run word of a sequence of configurations."""
    word: list[str] = []
    for configuration in configurations:
        word.append(SEPARATOR)
        word.extend(configuration.symbols())
    return tuple(word)


class _RunSymbols:
    """Classification of the symbols of the composite alphabet."""

    def __init__(self, machine: _TmSpec):
        self.machine = machine
        self.alphabet = composite_alphabet(machine)
        self.tape = frozenset(machine.tape_alphabet)
        self.heads = {
            head_symbol(state, symbol): (state, symbol)
            for state in machine.states
            for symbol in machine.tape_alphabet
        }
        self.accepting_heads = frozenset(
            head_symbol(machine.accepting, symbol) for symbol in machine.tape_alphabet
        )
        self.non_accepting = [
            symbol for symbol in self.alphabet if symbol not in self.accepting_heads
        ]
        self.right_targets = sorted(self._move_targets(_Direction.right))
        self.left_targets = sorted(self._move_targets(_Direction.left))

    def _move_targets(self, direction: _Direction) -> set[str]:
        """States that are entered by a move in the given direction."""
        return {
            next_state
            for moves in self.machine.transitions.values()
            for next_state, _, move_direction in moves
            if move_direction is direction
        }


def allowed_successors(symbols: _RunSymbols, window: Window) -> set[Window]:
    """Triples that may follow a window n + 1 positions later in a run.

    The middle symbol of the successor triple is determined exactly by the
    window. The outer symbols may also change by a head that enters or
    leaves across the window border.
    """
    x, y, z = window
    if y == SEPARATOR:
        return {
            (left, SEPARATOR, right)
            for left in symbols.alphabet
            for right in symbols.alphabet
        }

    heads = [i for i, symbol in enumerate(window) if symbol in symbols.heads]
    if len(heads) > 1:
        return set()
    if not heads:
        allowed = {window}
        if x in symbols.tape:
            allowed.update((head_symbol(q, x), y, z) for q in symbols.right_targets)
        if z in symbols.tape:
            allowed.update((x, y, head_symbol(q, z)) for q in symbols.left_targets)
        return allowed

    position = heads[0]
    state, read = symbols.heads[window[position]]
    allowed = set()
    for next_state, written, direction in symbols.machine.moves(state, read):
        triple = list(window)
        triple[position] = written
        target = position - 1 if direction is _Direction.left else position + 1
        if 0 <= target <= 2:
            if window[target] not in symbols.tape:
                continue
            triple[target] = head_symbol(next_state, window[target])
        allowed.add(tuple(triple))
    return allowed


def _violations(symbols: _RunSymbols, allowed: set[Window]) -> _RegexAst | None:
    """Expression for the shortest prefixes of triples that can not be
    extended to an allowed triple, cut at the first accepting head symbol.

    Returns None if no triple violates the window.
    """
    alive = {triple[:k] for triple in allowed for k in range(1, 4)}

    def violations_after(prefix: tuple[str, ...]) -> _RegexAst | None:
        dead = []
        parts = []
        for symbol in symbols.alphabet:
            extended = prefix + (symbol,)
            if extended not in alive:
                dead.append(symbol)
            elif symbol not in symbols.accepting_heads and len(extended) < 3:
                rest = violations_after(extended)
                if rest is not None:
                    parts.append(_Concat(_Literal(symbol), rest))
        if dead:
            parts.insert(0, _any_of(dead))
        return _union_all(parts) if parts else None

    return violations_after(())


def _input_errors(
    symbols: _RunSymbols, word: _Word, everything: _RegexAst
) -> _RegexAst:
    """Words that do not start with the encoded initial configuration."""
    machine = symbols.machine
    expected = [SEPARATOR, *initial_configuration(machine, word).symbols()]
    if machine.initial == machine.accepting:
        expected = expected[:2]
    errors = []
    for i, symbol in enumerate(expected):
        others = [other for other in symbols.alphabet if other != symbol]
        errors.append(
            _concat_all([_word_expression(expected[:i]), _any_of(others), everything])
        )
    return _union_all(errors)


def _transition_errors(
    symbols: _RunSymbols, n: int, everything: _RegexAst
) -> _RegexAst:
    """Words with a window whose counterpart in the next configuration is
    not an allowed successor."""
    non_accepting = _any_of(symbols.non_accepting)
    gap = _power(non_accepting, n - 2)
    windows = []
    for window in _itertools.product(symbols.non_accepting, repeat=3):
        violations = _violations(symbols, allowed_successors(symbols, window))
        if violations is not None:
            windows.append(_concat_all([_word_expression(window), gap, violations]))
    if not windows:
        return _union_all([])
    return _concat_all([_Star(non_accepting), _union_all(windows), everything])


def tm_to_regex(machine: _TmSpec, word: "_Sequence[str] | str") -> _RegexAst:
    """Create the expression of the words that are no accepting run.

    Args:
        machine: The machine, its accepting state must be absorbing.
        word: The input, at least two tape symbols.

    Returns:
        An expression over `composite_alphabet(machine)` that denotes all
        words if and only if the machine rejects the input.
    """
    word = _tm_word(word, machine)
    if len(word) < 2:
        raise _MalformedInputError(
            f"The input needs at least 2 symbols, got {len(word)}"
        )
    if not machine.is_accepting_absorbing():
        raise _MalformedInputError(
            f"The accepting state {machine.accepting!r} has to be absorbing"
        )

    symbols = _RunSymbols(machine)
    everything = _Star(_any_of(list(symbols.alphabet)))
    return _union_all(
        [
            _input_errors(symbols, word, everything),
            _Star(_any_of(symbols.non_accepting)),
            _transition_errors(symbols, len(word), everything),
        ]
    )
