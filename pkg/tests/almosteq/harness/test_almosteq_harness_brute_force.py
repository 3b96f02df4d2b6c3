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
"""Unit tests for the densities by enumeration."""

from fractions import Fraction

import numpy as np
import pytest

from almosteq.automata.dfa import Dfa
from almosteq.core.conf import aeq
from almosteq.core.errors import ResourceLimitError
from almosteq.density.density import profile
from almosteq.harness.brute_force import brute_count, brute_density, check_enumeration


def test_almosteq_harness_brute_force_examples():
    """Test the densities of small languages."""
    assert brute_density("(a|b)*a", 3, alphabet="a,b") == Fraction(1, 2)
    assert brute_density("a1*", 5, alphabet="a1,a2") == Fraction(1, 32)
    assert brute_density("0", 0, alphabet="a") == 0
    assert brute_density("1", 0, alphabet="a,b") == 1

    even = Dfa("a,b", [[1, 1], [0, 0]], 0, [0])
    assert [brute_count(even, n) for n in range(5)] == [1, 0, 4, 0, 16]


def test_almosteq_harness_brute_force_cap():
    """Test the enumeration cap."""
    check_enumeration(2, 10, max_enumeration=1024)
    with pytest.raises(ResourceLimitError, match="2\\^11 words exceeds the cap"):
        check_enumeration(2, 11, max_enumeration=1024)
    with pytest.raises(ValueError, match="non-negative"):
        check_enumeration(2, -1)

    aeq.max_enumeration = 8
    brute_density("a*", 3, alphabet="a,b")
    with pytest.raises(ResourceLimitError):
        brute_density("a*", 4, alphabet="a,b")
    assert brute_density("a*", 4, alphabet="a,b", max_enumeration=16) == Fraction(
        1, 16
    )


def test_almosteq_harness_brute_force_random(get_random_dfa):
    """Test that the enumeration agrees with the exact profile."""
    rng = np.random.default_rng(seed=8)
    for _ in range(20):
        dfa = get_random_dfa(rng)
        result = profile(dfa, 6)
        for n in range(7):
            assert brute_count(dfa, n) == result.counts[n]
            assert brute_density(dfa, n) == result.mu[n]
