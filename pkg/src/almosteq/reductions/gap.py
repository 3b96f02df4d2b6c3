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
"""Reduction of graph accessibility to the density of DFA languages.

The DFA of a graph reads node names. It follows the edges from node 1,
stays in node n forever once it is reached and falls into a dead state on
any symbol that is not an edge. Its language therefore has nonzero density
if and only if node n is reachable from node 1.
"""

import numpy as _np

from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.reductions.instances import Digraph as _Digraph

ESCAPE_SYMBOL = "e"


def _graph_table(graph: _Digraph, columns: int) -> _np.ndarray:
    """Transition table of the graph DFA with the dead state at index 0 and
    node i at index i, for the node symbols in the first n columns."""
    n = graph.n
    table = _np.zeros((n + 1, columns), dtype=int)
    for i, j in graph.edges:
        table[i, j - 1] = j
    table[n, :] = n
    return table


def gap_to_dfa(graph: _Digraph) -> _Dfa:
    """Create the DFA over the alphabet `1, ..., n` of a graph.

    State 0 is the dead state, state i is node i, node 1 is initial and
    node n is the only accepting state.
    """
    alphabet = [str(node) for node in range(1, graph.n + 1)]
    return _Dfa(alphabet, _graph_table(graph, graph.n), initial=1, accepting=[graph.n])


def gap_to_dfa_zero_one(graph: _Digraph) -> _Dfa:
    """Create the graph DFA with the additional escape symbol `e`.

    Every state except node n moves to an extra non-accepting sink on `e`,
    node n stays in node n. The language obeys the zero-one law if and only
    if node n is not reachable from node 1: otherwise the words starting
    with `e` keep its density below one.
    """
    n = graph.n
    alphabet = [str(node) for node in range(1, n + 1)] + [ESCAPE_SYMBOL]
    table = _np.zeros((n + 2, n + 1), dtype=int)
    table[: n + 1, :] = _graph_table(graph, n + 1)
    escape_sink = n + 1
    table[:, n] = escape_sink
    table[n, n] = n
    table[escape_sink, :] = escape_sink
    return _Dfa(alphabet, table, initial=1, accepting=[n])
