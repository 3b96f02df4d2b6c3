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
"""Exact number of accepted words of a given length.

The number of accepted words of each length is computed by iterating a
vector with the number of words leading to each state. The entries are
Python integers stored in numpy object arrays, so there is no overflow.
"""

from collections.abc import Iterator as _Iterator

import numpy as _np

from almosteq.automata.dfa import Dfa as _Dfa


def iter_count_vectors(dfa: _Dfa) -> _Iterator[_np.ndarray]:
    """Iterate over the count vectors for the lengths 0, 1, 2, ...

    Entry q of the n-th vector is the number of words of length n that lead
    from the initial state to the state q.
    """
    vector = _np.zeros(dfa.state_count, dtype=object)
    vector[dfa.initial] = 1
    while True:
        yield vector
        next_vector = _np.zeros(dfa.state_count, dtype=object)
        for symbol_index in range(len(dfa.alphabet)):
            _np.add.at(next_vector, dfa.table[:, symbol_index], vector)
        vector = next_vector


def count_sequence(dfa: _Dfa, horizon: int) -> list[int]:
    """Number of accepted words for each length 0, ..., horizon."""
    accepting = sorted(dfa.accepting)
    counts = []
    for n, vector in enumerate(iter_count_vectors(dfa)):
        counts.append(int(sum(vector[accepting])) if accepting else 0)
        if n == horizon:
            return counts


def count_words(dfa: _Dfa, n: int) -> int:
    """Exact number of accepted words of length n."""
    if n < 0:
        raise ValueError(f"The word length has to be non-negative, got {n}")
    return count_sequence(dfa, n)[n]
