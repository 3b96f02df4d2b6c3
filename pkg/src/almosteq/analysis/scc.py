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
"""Reachability and strongly connected components of DFA state graphs.

The graph algorithms are delegated to `scipy.sparse.csgraph`.
"""

from collections import deque as _deque
from dataclasses import dataclass as _dataclass

import numpy as _np
from scipy.sparse import coo_matrix as _coo_matrix
from scipy.sparse import csr_matrix as _csr_matrix
from scipy.sparse.csgraph import breadth_first_order as _breadth_first_order
from scipy.sparse.csgraph import connected_components as _connected_components

from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.core.alphabet import Word as _Word


def _multi_source_order(graph: _csr_matrix, sources) -> _np.ndarray:
    """Breadth first order from several start nodes.

    An auxiliary node connected to all sources is added to the graph, it is
    not part of the returned order.
    """
    sources = _np.asarray(sorted(sources), dtype=int)
    if len(sources) == 0:
        return _np.zeros(0, dtype=int)
    n = graph.shape[0]
    coo = graph.tocoo()
    rows = _np.concatenate([coo.row, _np.full(len(sources), n)])
    cols = _np.concatenate([coo.col, sources])
    augmented = _csr_matrix(
        (_np.ones(len(rows), dtype=_np.int8), (rows, cols)), shape=(n + 1, n + 1)
    )
    order = _breadth_first_order(
        augmented, n, directed=True, return_predecessors=False
    )
    return order[1:]


def reachable_mask(dfa: _Dfa) -> _np.ndarray:
    """Boolean array, true for all states reachable from the initial state."""
    order = _breadth_first_order(
        dfa.transition_graph(), dfa.initial, directed=True, return_predecessors=False
    )
    mask = _np.zeros(dfa.state_count, dtype=bool)
    mask[order] = True
    return mask


def coreachable_mask(dfa: _Dfa, targets=None) -> _np.ndarray:
    """Boolean array, true for all states from which a target state (by
    default an accepting state) can be reached."""
    targets = dfa.accepting if targets is None else targets
    order = _multi_source_order(dfa.transition_graph().transpose().tocsr(), targets)
    mask = _np.zeros(dfa.state_count, dtype=bool)
    mask[order] = True
    return mask


def _symbol_between(dfa: _Dfa, source: int, target: int) -> int:
    """Index of the first symbol leading from source to target."""
    return int(_np.flatnonzero(dfa.table[source] == target)[0])


def _path_word(dfa: _Dfa, predecessors: _np.ndarray, start: int, end: int) -> _Word:
    """Reconstruct the word along a breadth first tree from start to end."""
    indices = []
    state = end
    while state != start:
        previous = int(predecessors[state])
        indices.append(_symbol_between(dfa, previous, state))
        state = previous
    return dfa.alphabet.decode(reversed(indices))


def shortest_word_to(dfa: _Dfa, targets, *, start: int | None = None) -> _Word | None:
    """Shortest word leading from `start` (default: initial state) to one of
    the target states.

    Returns:
        The word, or None if no target is reachable.
    """
    start = dfa.initial if start is None else start
    targets = set(int(target) for target in targets)
    order, predecessors = _breadth_first_order(
        dfa.transition_graph(), start, directed=True, return_predecessors=True
    )
    for state in order:
        if int(state) in targets:
            return _path_word(dfa, predecessors, start, int(state))
    return None


@_dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components of the reachable part of a DFA.

    Components are numbered 0, 1, ... in reverse topological order, i.e., a
    component only has edges to components with smaller ids. Unreachable
    states have the component id -1.
    """

    component: _np.ndarray
    members: tuple[tuple[int, ...], ...]
    is_sink: tuple[bool, ...]
    is_cyclic: tuple[bool, ...]

    @property
    def count(self) -> int:
        """Number of components."""
        return len(self.members)

    def sink_components(self) -> list[int]:
        """Ids of all components without edges leaving them."""
        return [i for i, sink in enumerate(self.is_sink) if sink]


def sccs(dfa: _Dfa) -> SccDecomposition:
    """Compute the strongly connected components of the reachable subgraph."""
    graph = dfa.transition_graph()
    reachable = _np.flatnonzero(reachable_mask(dfa))
    subgraph = graph[reachable][:, reachable].tocoo()
    count, labels = _connected_components(
        subgraph, directed=True, connection="strong", return_labels=True
    )

    # Edges of the condensation.
    source = labels[subgraph.row]
    target = labels[subgraph.col]
    internal = source == target
    successors: list[set[int]] = [set() for _ in range(count)]
    predecessors: list[set[int]] = [set() for _ in range(count)]
    for i, j in zip(source[~internal].tolist(), target[~internal].tolist()):
        successors[i].add(j)
        predecessors[j].add(i)
    cyclic = _np.zeros(count, dtype=bool)
    sizes = _np.bincount(labels, minlength=count)
    cyclic[sizes > 1] = True
    cyclic[source[internal]] = True

    # Kahn's algorithm on the reversed condensation: sinks first.
    remaining = [len(successors[i]) for i in range(count)]
    queue = _deque(i for i in range(count) if remaining[i] == 0)
    order = []
    while queue:
        i = queue.popleft()
        order.append(i)
        for j in sorted(predecessors[i]):
            remaining[j] -= 1
            if remaining[j] == 0:
                queue.append(j)
    renumber = _np.empty(count, dtype=int)
    renumber[order] = _np.arange(count)

    component = _np.full(dfa.state_count, -1, dtype=int)
    component[reachable] = renumber[labels]
    members = tuple(
        tuple(int(state) for state in _np.flatnonzero(component == i))
        for i in range(count)
    )
    return SccDecomposition(
        component=component,
        members=members,
        is_sink=tuple(len(successors[i]) == 0 for i in order),
        is_cyclic=tuple(bool(cyclic[i]) for i in order),
    )
