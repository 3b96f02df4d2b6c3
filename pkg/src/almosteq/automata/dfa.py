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
"""This module implements total deterministic finite automata."""

from collections.abc import Iterable as _Iterable
from collections.abc import Sequence as _Sequence

import numpy as _np
from scipy.sparse import csr_matrix as _csr_matrix

from almosteq.automata.nfa import Nfa as _Nfa
from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.alphabet import as_alphabet as _as_alphabet
from almosteq.core.alphabet import as_word as _as_word
from almosteq.core.errors import MalformedInputError as _MalformedInputError


class Dfa:
    """A deterministic finite automaton with a total transition function.

    The transitions are stored in a read-only integer array `table` with the
    shape (state_count, len(alphabet)), `table[q, i]` is the successor of
    state `q` for the i-th symbol.
    """

    def __init__(
        self,
        alphabet: "_Alphabet | _Sequence[str] | str",
        table,
        initial: int,
        accepting: _Iterable[int],
    ):
        """Create the automaton.

        Args:
            alphabet: The declared alphabet.
            table: Array like transition table `table[state][symbol_index]`.
            initial: Index of the initial state.
            accepting: Indices of the accepting states.
        """
        self.alphabet = _as_alphabet(alphabet)
        table = _np.array(table, dtype=int, ndmin=2)
        if table.shape[0] < 1 or table.shape[1] != len(self.alphabet):
            raise _MalformedInputError(
                f"The transition table needs the shape (n >= 1, {len(self.alphabet)}),"
                f" got {table.shape}"
            )
        state_count = table.shape[0]
        if table.min() < 0 or table.max() >= state_count:
            raise _MalformedInputError("Transition targets are out of range")
        accepting = frozenset(int(state) for state in accepting)
        for state in (int(initial), *accepting):
            if not 0 <= state < state_count:
                raise _MalformedInputError(
                    f"State index {state} is out of range for {state_count} states"
                )

        table.setflags(write=False)
        self.table = table
        self.initial = int(initial)
        self.accepting = accepting

    @property
    def state_count(self) -> int:
        """Number of states."""
        return self.table.shape[0]

    @property
    def accepting_mask(self) -> _np.ndarray:
        """Boolean array that is true for accepting states."""
        mask = _np.zeros(self.state_count, dtype=bool)
        mask[list(self.accepting)] = True
        return mask

    def delta(self, state: int, symbol: str) -> int:
        """Return the successor of a state for a symbol."""
        return int(self.table[state, self.alphabet.index(symbol)])

    def run(self, word: "_Sequence[str] | str", start: int | None = None) -> int:
        """Return the state reached after reading the word."""
        state = self.initial if start is None else start
        for symbol_index in self.alphabet.encode(_as_word(word, self.alphabet)):
            state = int(self.table[state, symbol_index])
        return state

    def accepts(self, word: "_Sequence[str] | str") -> bool:
        """Check if the word is accepted."""
        return self.run(word) in self.accepting

    def transition_graph(self) -> _csr_matrix:
        """Sparse matrix with the number of symbols leading from state i to j.

        Parallel transitions are summed up, so the row sums are equal to the
        alphabet size.
        """
        n = self.state_count
        rows = _np.repeat(_np.arange(n), len(self.alphabet))
        data = _np.ones(rows.shape[0], dtype=_np.int64)
        return _csr_matrix((data, (rows, self.table.ravel())), shape=(n, n))

    def as_nfa(self) -> _Nfa:
        """Return this automaton as an NFA with singleton target sets."""
        return _Nfa.from_table(
            self.alphabet,
            [[(int(target),) for target in row] for row in self.table],
            self.initial,
            self.accepting,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dfa):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and _np.array_equal(self.table, other.table)
            and self.initial == other.initial
            and self.accepting == other.accepting
        )

    def __hash__(self):
        return hash(
            (self.alphabet, self.table.tobytes(), self.initial, self.accepting)
        )

    def __repr__(self) -> str:
        return (
            f"Dfa(states={self.state_count}, alphabet={list(self.alphabet)}, "
            f"initial={self.initial}, accepting={sorted(self.accepting)})"
        )
