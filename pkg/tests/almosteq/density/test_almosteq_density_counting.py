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
"""Unit tests for counting accepted words."""

import itertools

import numpy as np
import pytest

from almosteq.automata.dfa import Dfa
from almosteq.density.counting import count_sequence, count_words, iter_count_vectors
from almosteq.equivalence.decide import to_dfa


def test_almosteq_density_counting_examples():
    """Test the counts of the basic examples."""
    assert count_words(to_dfa("a1*", "a1,a2"), 5) == 1
    assert count_words(Dfa("a,b", [[0, 0]], 0, []), 7) == 0
    assert count_words(to_dfa("(a|b)*a", "a,b"), 3) == 4
    assert count_sequence(Dfa("a,b", [[1, 1], [0, 0]], 0, [0]), 5) == [
        1,
        0,
        4,
        0,
        16,
        0,
    ]
    with pytest.raises(ValueError, match="non-negative"):
        count_words(Dfa("a", [[0]], 0, [0]), -1)


def test_almosteq_density_counting_big_integers():
    """Test that the counts do not overflow."""
    full = Dfa("a,b,c", [[0, 0, 0]], 0, [0])
    assert count_words(full, 200) == 3**200
    vectors = iter_count_vectors(full)
    assert [int(next(vectors)[0]) for _ in range(4)] == [1, 3, 9, 27]


def test_almosteq_density_counting_random(get_random_dfa):
    """Test the counts against the enumeration of all words."""
    rng = np.random.default_rng(seed=8)
    for _ in range(30):
        dfa = get_random_dfa(rng, max_alphabet_size=2)
        counts = count_sequence(dfa, 10)
        for n in range(11):
            assert counts[n] == sum(
                dfa.accepts(word)
                for word in itertools.product(dfa.alphabet.symbols, repeat=n)
            )
