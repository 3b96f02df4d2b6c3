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
"""This module implements nondeterministic finite automata without
epsilon transitions."""

from collections.abc import Iterable as _Iterable
from collections.abc import Iterator as _Iterator
from collections.abc import Mapping as _Mapping
from collections.abc import Sequence as _Sequence
from numbers import Integral as _Integral

from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.alphabet import as_alphabet as _as_alphabet
from almosteq.core.alphabet import as_word as _as_word
from almosteq.core.errors import MalformedInputError as _MalformedInputError


class Nfa:
    """A nondeterministic finite automaton.

    The transition function is stored as a table `table[state][symbol_index]`
    of frozensets of target states.
    """

    def __init__(
        self,
        alphabet: "_Alphabet | _Sequence[str] | str",
        state_count: int,
        initial: int,
        transitions: _Mapping[tuple[int, str], _Iterable[int]],
        accepting: _Iterable[int],
    ):
        """Create the automaton.

        Args:
            alphabet: The declared alphabet.
            state_count: Number of states, states are `0, ..., state_count-1`.
            initial: Index of the initial state.
            transitions: Map from (state, symbol) to the target states. Missing
                pairs have no targets.
            accepting: Indices of the accepting states.
        """
        alphabet = _as_alphabet(alphabet)
        table = [[set() for _ in alphabet] for _ in range(state_count)]
        for (state, symbol), targets in transitions.items():
            _check_state(state, state_count)
            table[state][alphabet.index(symbol)].update(targets)
        self._set(alphabet, table, initial, accepting)

    @classmethod
    def from_table(
        cls,
        alphabet: _Alphabet,
        table: _Sequence[_Sequence[_Iterable[int]]],
        initial: int,
        accepting: _Iterable[int],
    ) -> "Nfa":
        """Create an automaton from a table `table[state][symbol_index]`."""
        nfa = cls.__new__(cls)
        nfa._set(alphabet, table, initial, accepting)
        return nfa

    def _set(self, alphabet, table, initial, accepting):
        """Validate and store the data of this automaton."""
        state_count = len(table)
        if state_count < 1:
            raise _MalformedInputError("An automaton needs at least one state")
        accepting = list(accepting)
        for row in table:
            if len(row) != len(alphabet):
                raise _MalformedInputError(
                    f"Every state needs {len(alphabet)} transition entries, "
                    f"got {len(row)}"
                )
            for targets in row:
                for target in targets:
                    _check_state(target, state_count)
        _check_state(initial, state_count)
        for state in accepting:
            _check_state(state, state_count)

        self.alphabet = alphabet
        self.table = tuple(
            tuple(frozenset(int(target) for target in targets) for targets in row)
            for row in table
        )
        self.initial = int(initial)
        self.accepting = frozenset(int(state) for state in accepting)

    @property
    def state_count(self) -> int:
        """Number of states."""
        return len(self.table)

    def targets(self, state: int, symbol: str) -> frozenset[int]:
        """Return the target states for a state and a symbol."""
        return self.table[state][self.alphabet.index(symbol)]

    def step(self, states: _Iterable[int], symbol_index: int) -> frozenset[int]:
        """Return all states reachable from `states` with one symbol."""
        return frozenset().union(*(self.table[state][symbol_index] for state in states))

    def accepts(self, word: "_Sequence[str] | str") -> bool:
        """Check if the word is accepted by simulating the automaton."""
        states = frozenset([self.initial])
        for symbol_index in self.alphabet.encode(_as_word(word, self.alphabet)):
            states = self.step(states, symbol_index)
            if not states:
                return False
        return not states.isdisjoint(self.accepting)

    def is_deterministic(self) -> bool:
        """True if no (state, symbol) pair has more than one target."""
        return all(len(targets) <= 1 for row in self.table for targets in row)

    def is_total_deterministic(self) -> bool:
        """True if every (state, symbol) pair has exactly one target."""
        return all(len(targets) == 1 for row in self.table for targets in row)

    def iter_transitions(self) -> _Iterator[tuple[int, str, frozenset[int]]]:
        """Iterate over all (state, symbol, targets) with at least one target."""
        for state, row in enumerate(self.table):
            for symbol, targets in zip(self.alphabet, row):
                if targets:
                    yield state, symbol, targets

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Nfa):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.table == other.table
            and self.initial == other.initial
            and self.accepting == other.accepting
        )

    def __hash__(self):
        return hash((self.alphabet, self.table, self.initial, self.accepting))

    def __repr__(self) -> str:
        return (
            f"Nfa(states={self.state_count}, alphabet={list(self.alphabet)}, "
            f"initial={self.initial}, accepting={sorted(self.accepting)})"
        )


def _check_state(state: int, state_count: int) -> None:
    """Raise an error if the state index is out of range."""
    if not isinstance(state, _Integral) or isinstance(state, bool):
        raise _MalformedInputError(f"State indices have to be integers, got {state!r}")
    if not 0 <= state < state_count:
        raise _MalformedInputError(
            f"State index {state} is out of range for {state_count} states"
        )
