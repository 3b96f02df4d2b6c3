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
"""Unit tests for the p-equivalence of unary automata."""

import numpy as np
import pytest

from almosteq.automata.dfa import Dfa
from almosteq.automata.nfa import Nfa
from almosteq.core.conf import Relation
from almosteq.core.errors import AlphabetError, ResourceLimitError
from almosteq.equivalence.decide import p_equiv
from almosteq.equivalence.unary import adjacency_matrix, unary_p_equiv

EVEN = Nfa("a", 2, 0, {(0, "a"): {1}, (1, "a"): {0}}, [0])
ALL = Nfa("a", 1, 0, {(0, "a"): {0}}, [0])
# (aa)* with four states and nondeterminism.
EVEN_4 = Nfa(
    "a", 4, 0, {(0, "a"): {1, 3}, (1, "a"): {2}, (2, "a"): {1}, (3, "a"): {0}}, [0, 2]
)


def _window_difference(nfa_1, nfa_2):
    """All lengths of the window that distinguish the two automata."""
    steps = nfa_1.state_count + nfa_2.state_count
    return [
        n
        for n in range(2**steps, 2 ** (steps + 1))
        if nfa_1.accepts("a" * n) != nfa_2.accepts("a" * n)
    ]


def test_almosteq_equivalence_unary_adjacency_matrix():
    """Test the boolean adjacency matrix."""
    np.testing.assert_array_equal(
        adjacency_matrix(EVEN), [[False, True], [True, False]]
    )


def test_almosteq_equivalence_unary_examples():
    """Test the window algorithm on the basic examples."""
    report = unary_p_equiv(EVEN, EVEN)
    assert report.relation is Relation.p_equiv
    assert report.verdict
    assert report.witness is None
    assert report.stats["window_start"] == 16
    assert report.stats["window_end"] == 32

    report = unary_p_equiv(EVEN, ALL)
    assert not report.verdict
    n = report.witness.length
    assert 8 <= n < 16
    assert n % 2 == 1
    assert n in _window_difference(EVEN, ALL)

    assert unary_p_equiv(EVEN, EVEN_4).verdict
    assert _window_difference(EVEN, EVEN_4) == []


def test_almosteq_equivalence_unary_dfa_input():
    """Test that DFAs are accepted as input."""
    dfa = Dfa("a", [[1], [2], [0]], 0, [0])
    assert not unary_p_equiv(dfa, EVEN).verdict
    assert unary_p_equiv(dfa, dfa.as_nfa()).verdict


def test_almosteq_equivalence_unary_errors():
    """Test the alphabet check and the cap on the number of states."""
    with pytest.raises(AlphabetError, match="single symbol"):
        unary_p_equiv(Nfa("a,b", 1, 0, {}, []), Nfa("a,b", 1, 0, {}, []))
    with pytest.raises(AlphabetError, match="mismatch"):
        unary_p_equiv(EVEN, Nfa("b", 1, 0, {}, []))
    with pytest.raises(ResourceLimitError, match="cap is 5"):
        unary_p_equiv(EVEN_4, EVEN, max_states=5)


def test_almosteq_equivalence_unary_random(get_random_nfa):
    """Test the agreement with the general pipeline and the window."""
    rng = np.random.default_rng(seed=12)
    for _ in range(40):
        nfa_1 = get_random_nfa(rng, alphabet_size=1)
        nfa_2 = get_random_nfa(rng, alphabet_size=1)
        report = unary_p_equiv(nfa_1, nfa_2)
        assert report.verdict == p_equiv(nfa_1, nfa_2).verdict
        difference = _window_difference(nfa_1, nfa_2)
        assert report.verdict == (len(difference) == 0)
        if not report.verdict:
            assert report.witness.length in difference
