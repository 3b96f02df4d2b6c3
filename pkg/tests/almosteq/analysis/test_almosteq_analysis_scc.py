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
"""Unit tests for reachability and strongly connected components."""

import numpy as np

from almosteq.analysis.scc import (
    coreachable_mask,
    reachable_mask,
    sccs,
    shortest_word_to,
)
from almosteq.automata.dfa import Dfa


def test_almosteq_analysis_scc_cycle():
    """Test two states looping into each other."""
    decomposition = sccs(Dfa("a", [[1], [0]], 0, []))
    assert decomposition.count == 1
    assert decomposition.members == ((0, 1),)
    assert decomposition.is_sink == (True,)
    assert decomposition.is_cyclic == (True,)


def test_almosteq_analysis_scc_chain():
    """Test a chain without back edges, only the last component is a sink."""
    decomposition = sccs(Dfa("a", [[1], [2], [2]], 0, [2]))
    assert decomposition.count == 3
    # Reverse topological order: the sink comes first.
    assert decomposition.members == ((2,), (1,), (0,))
    np.testing.assert_array_equal(decomposition.component, [2, 1, 0])
    assert decomposition.is_sink == (True, False, False)
    assert decomposition.is_cyclic == (True, False, False)
    assert decomposition.sink_components() == [0]


def test_almosteq_analysis_scc_even_length():
    """Test the words of even length over {a, b}: one sink component."""
    decomposition = sccs(Dfa("a,b", [[1, 1], [0, 0]], 0, [0]))
    assert decomposition.count == 1
    assert decomposition.is_sink == (True,)


def test_almosteq_analysis_scc_unreachable():
    """Test that unreachable states are not part of any component."""
    dfa = Dfa("a,b", [[0, 0], [0, 2], [2, 2]], 0, [2])
    decomposition = sccs(dfa)
    np.testing.assert_array_equal(decomposition.component, [0, -1, -1])
    np.testing.assert_array_equal(reachable_mask(dfa), [True, False, False])
    np.testing.assert_array_equal(coreachable_mask(dfa), [False, True, True])
    assert shortest_word_to(dfa, [2]) is None
    assert shortest_word_to(dfa, [2], start=1) == ("b",)


def test_almosteq_analysis_scc_random(get_random_dfa):
    """Test the components against pairwise reachability."""
    rng = np.random.default_rng(seed=5)
    for _ in range(30):
        dfa = get_random_dfa(rng)
        graph = dfa.transition_graph().toarray() > 0
        closure = np.eye(dfa.state_count, dtype=bool) | graph
        for _ in range(dfa.state_count):
            closure = closure | ((closure.astype(int) @ closure.astype(int)) > 0)

        decomposition = sccs(dfa)
        reachable = closure[dfa.initial]
        for p in range(dfa.state_count):
            assert (decomposition.component[p] >= 0) == reachable[p]
            for q in range(dfa.state_count):
                if reachable[p] and reachable[q]:
                    same = closure[p, q] and closure[q, p]
                    assert same == (
                        decomposition.component[p] == decomposition.component[q]
                    )
                    # Edges only lead to components with smaller ids.
                    if closure[p, q]:
                        assert decomposition.component[q] <= decomposition.component[p]
        for i, members in enumerate(decomposition.members):
            leaving = any(
                not closure[q, members[0]]
                for p in members
                for q in np.flatnonzero(graph[p])
            )
            assert decomposition.is_sink[i] == (not leaving)
