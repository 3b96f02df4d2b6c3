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
"""Constructions on automata: subset construction, completion, complement
and boolean products."""

from collections import deque as _deque
from collections.abc import Callable as _Callable
from operator import xor as _xor

from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.automata.nfa import Nfa as _Nfa
from almosteq.core.conf import aeq as _aeq
from almosteq.core.errors import MalformedInputError as _MalformedInputError
from almosteq.core.errors import ResourceLimitError as _ResourceLimitError


def _check_cap(count: int, max_subsets: int | None) -> None:
    """Raise an error if a construction created too many states."""
    cap = _aeq.max_subsets if max_subsets is None else max_subsets
    if count > cap:
        raise _ResourceLimitError(
            f"The construction exceeds the cap of {cap} states "
            "(see `aeq.max_subsets` or --cap-states)"
        )


def determinize_with_subsets(
    nfa: _Nfa, *, max_subsets: int | None = None
) -> tuple[_Dfa, list[tuple[int, ...]]]:
    """Powerset construction of an NFA.

    The subsets are numbered in breadth-first discovery order starting with
    the initial subset, symbols are processed in alphabet order. The empty
    subset is included as a sink if it is reachable.

    Args:
        nfa: The automaton to determinize.
        max_subsets: Cap on the number of subsets, defaults to `aeq.max_subsets`.

    Returns:
        The DFA and for each of its states the sorted list of NFA states.
    """
    initial = frozenset([nfa.initial])
    numbering = {initial: 0}
    subsets = [initial]
    table = []
    queue = _deque([initial])
    while queue:
        subset = queue.popleft()
        row = []
        for symbol_index in range(len(nfa.alphabet)):
            target = nfa.step(subset, symbol_index)
            if target not in numbering:
                numbering[target] = len(subsets)
                subsets.append(target)
                _check_cap(len(subsets), max_subsets)
                queue.append(target)
            row.append(numbering[target])
        table.append(row)

    accepting = [i for i, subset in enumerate(subsets) if subset & nfa.accepting]
    dfa = _Dfa(nfa.alphabet, table, 0, accepting)
    return dfa, [tuple(sorted(subset)) for subset in subsets]


def determinize(nfa: _Nfa, *, max_subsets: int | None = None) -> _Dfa:
    """Return a DFA for the same language as the NFA (powerset construction)."""
    return determinize_with_subsets(nfa, max_subsets=max_subsets)[0]


def complete(nfa: _Nfa) -> _Dfa:
    """Convert a deterministic, possibly partial, NFA to a total DFA.

    Missing transitions are directed to an added non-accepting sink state.
    The numbering of the existing states is kept.
    """
    if not nfa.is_deterministic():
        raise _MalformedInputError("Only deterministic automata can be completed")

    sink = nfa.state_count
    table = [
        [next(iter(targets)) if targets else sink for targets in row]
        for row in nfa.table
    ]
    if any(sink in row for row in table):
        table.append([sink] * len(nfa.alphabet))
    return _Dfa(nfa.alphabet, table, nfa.initial, nfa.accepting)


def to_dfa(automaton: "_Nfa | _Dfa", *, max_subsets: int | None = None) -> _Dfa:
    """Return a DFA for the automaton.

    Deterministic automata are completed, all others are determinized.
    """
    if isinstance(automaton, _Dfa):
        return automaton
    elif automaton.is_deterministic():
        return complete(automaton)
    return determinize(automaton, max_subsets=max_subsets)


def complement(dfa: _Dfa) -> _Dfa:
    """Return the DFA for the complement language, the state graph is kept."""
    accepting = set(range(dfa.state_count)) - dfa.accepting
    return _Dfa(dfa.alphabet, dfa.table, dfa.initial, accepting)


def product(
    dfa_1: _Dfa,
    dfa_2: _Dfa,
    combiner: _Callable[[bool, bool], bool],
    *,
    max_subsets: int | None = None,
) -> _Dfa:
    """Product automaton of two DFAs over the same alphabet.

    Only the pairs reachable from the pair of initial states are created,
    numbered in breadth-first order.

    Args:
        dfa_1: First automaton.
        dfa_2: Second automaton.
        combiner: Decides from the two acceptance bits if a pair is accepting.
        max_subsets: Cap on the number of pairs.

    Returns:
        The product DFA.
    """
    dfa_1.alphabet.check_same(dfa_2.alphabet)

    initial = (dfa_1.initial, dfa_2.initial)
    numbering = {initial: 0}
    pairs = [initial]
    table = []
    queue = _deque([initial])
    while queue:
        state_1, state_2 = queue.popleft()
        row = []
        for target in zip(
            dfa_1.table[state_1].tolist(), dfa_2.table[state_2].tolist()
        ):
            if target not in numbering:
                numbering[target] = len(pairs)
                pairs.append(target)
                _check_cap(len(pairs), max_subsets)
                queue.append(target)
            row.append(numbering[target])
        table.append(row)

    accepting = [
        i
        for i, (state_1, state_2) in enumerate(pairs)
        if combiner(state_1 in dfa_1.accepting, state_2 in dfa_2.accepting)
    ]
    return _Dfa(dfa_1.alphabet, table, 0, accepting)


def xor_product(dfa_1: _Dfa, dfa_2: _Dfa, **kwargs) -> _Dfa:
    """The XOR automaton, it accepts the symmetric difference of the languages."""
    return product(dfa_1, dfa_2, _xor, **kwargs)


def xor_determinize(
    nfa_1: _Nfa, nfa_2: _Nfa, *, max_subsets: int | None = None
) -> _Dfa:
    """Determinize two NFAs in lock-step with XOR acceptance.

    This explores pairs of subsets directly, without building the two
    determinized automata first. The result accepts the symmetric difference
    of the two languages.
    """
    nfa_1.alphabet.check_same(nfa_2.alphabet)

    initial = (frozenset([nfa_1.initial]), frozenset([nfa_2.initial]))
    numbering = {initial: 0}
    pairs = [initial]
    table = []
    queue = _deque([initial])
    while queue:
        subset_1, subset_2 = queue.popleft()
        row = []
        for symbol_index in range(len(nfa_1.alphabet)):
            target = (
                nfa_1.step(subset_1, symbol_index),
                nfa_2.step(subset_2, symbol_index),
            )
            if target not in numbering:
                numbering[target] = len(pairs)
                pairs.append(target)
                _check_cap(len(pairs), max_subsets)
                queue.append(target)
            row.append(numbering[target])
        table.append(row)

    accepting = [
        i
        for i, (subset_1, subset_2) in enumerate(pairs)
        if bool(subset_1 & nfa_1.accepting) != bool(subset_2 & nfa_2.accepting)
    ]
    return _Dfa(nfa_1.alphabet, table, 0, accepting)
