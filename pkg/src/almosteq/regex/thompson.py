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
"""Compile regular expressions to NFAs.

The expression is first translated to an epsilon-NFA with Thompson's
construction (at most two states per syntax tree node). The epsilon
transitions are then eliminated, only the initial state and the targets of
symbol transitions are kept.
"""

from collections import deque as _deque

from almosteq.automata.nfa import Nfa as _Nfa
from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.alphabet import as_alphabet as _as_alphabet
from almosteq.regex.ast import Concat as _Concat
from almosteq.regex.ast import Empty as _Empty
from almosteq.regex.ast import Epsilon as _Epsilon
from almosteq.regex.ast import Literal as _Literal
from almosteq.regex.ast import RegexAst as _RegexAst
from almosteq.regex.ast import Star as _Star
from almosteq.regex.ast import Union as _Union


class _EpsilonNfa:
    """Mutable epsilon-NFA used during the construction."""

    def __init__(self):
        self.epsilon: list[list[int]] = []
        self.moves: list[list[tuple[int, int]]] = []

    def add_state(self) -> int:
        self.epsilon.append([])
        self.moves.append([])
        return len(self.epsilon) - 1

    def closure(self, state: int) -> list[int]:
        """Return all states reachable with epsilon transitions."""
        seen = {state}
        order = [state]
        queue = _deque([state])
        while queue:
            for target in self.epsilon[queue.popleft()]:
                if target not in seen:
                    seen.add(target)
                    order.append(target)
                    queue.append(target)
        return order


def _thompson(ast: _RegexAst, alphabet: _Alphabet) -> tuple[_EpsilonNfa, int, int]:
    """Thompson's construction, returns the automaton, start and final state.

    Fragments are kept on a stack, so a sub tree object that occurs several
    times in the tree (e.g. created by `power`) gets its own states for each
    occurrence.
    """
    automaton = _EpsilonNfa()
    fragments: list[tuple[int, int]] = []
    for node in ast.iter_postorder():
        if isinstance(node, _Concat):
            right_start, right_final = fragments.pop()
            left_start, left_final = fragments.pop()
            automaton.epsilon[left_final].append(right_start)
            fragments.append((left_start, right_final))
            continue

        start = automaton.add_state()
        final = automaton.add_state()
        if isinstance(node, _Empty):
            pass
        elif isinstance(node, _Epsilon):
            automaton.epsilon[start].append(final)
        elif isinstance(node, _Literal):
            automaton.moves[start].append((alphabet.index(node.symbol), final))
        elif isinstance(node, _Union):
            children = [fragments.pop(), fragments.pop()]
            for child_start, child_final in reversed(children):
                automaton.epsilon[start].append(child_start)
                automaton.epsilon[child_final].append(final)
        elif isinstance(node, _Star):
            child_start, child_final = fragments.pop()
            automaton.epsilon[start].extend([child_start, final])
            automaton.epsilon[child_final].extend([child_start, final])
        else:
            raise TypeError(f"Got unexpected regex node {type(node)}")
        fragments.append((start, final))
    start, final = fragments.pop()
    return automaton, start, final


def compile_to_nfa(ast: _RegexAst, alphabet: "_Alphabet | str") -> _Nfa:
    """Compile a regular expression to an NFA without epsilon transitions.

    Args:
        ast: The regular expression.
        alphabet: The declared alphabet, all literals have to be members.

    Returns:
        An NFA for the same language. State 0 is the initial state, the other
        states are the targets of symbol transitions in construction order.
    """
    alphabet = _as_alphabet(alphabet)
    automaton, start, final = _thompson(ast, alphabet)

    targets = {target for moves in automaton.moves for _, target in moves}
    kept = [start] + sorted(targets - {start})
    numbering = {state: i for i, state in enumerate(kept)}

    table = [[set() for _ in alphabet] for _ in kept]
    accepting = []
    for state in kept:
        row = table[numbering[state]]
        for reached in automaton.closure(state):
            if reached == final:
                accepting.append(numbering[state])
            for symbol_index, target in automaton.moves[reached]:
                row[symbol_index].add(numbering[target])
    return _Nfa.from_table(alphabet, table, 0, accepting)
