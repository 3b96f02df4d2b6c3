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
"""Unit tests for the 3SAT reduction."""

import numpy as np
import pytest

from almosteq.analysis.predicates import is_universal
from almosteq.core.conf import aeq
from almosteq.core.errors import ResourceLimitError
from almosteq.equivalence.decide import to_dfa
from almosteq.reductions.instances import Cnf3
from almosteq.reductions.oracles import brute_sat
from almosteq.reductions.sat3 import (
    UNARY_SYMBOL,
    clause_residues,
    first_primes,
    literal_satisfied,
    sat3_to_unary_regex,
)
from almosteq.regex.denotation import matches


def _unary_word(length):
    return (UNARY_SYMBOL,) * length


def test_almosteq_reductions_sat3_primes():
    """Test the prime numbers and the encoding of assignments."""
    assert first_primes(0) == []
    assert first_primes(6) == [2, 3, 5, 7, 11, 13]

    primes = first_primes(3)
    # 21 = 1 (mod 2), 0 (mod 3), 1 (mod 5).
    assert literal_satisfied(1, 21, primes)
    assert not literal_satisfied(-1, 21, primes)
    assert literal_satisfied(-2, 21, primes)
    assert literal_satisfied(3, 21, primes)
    # 2 (mod 3) encodes no value.
    assert not literal_satisfied(2, 5, primes)
    assert not literal_satisfied(-2, 5, primes)


def test_almosteq_reductions_sat3_clause_residues():
    """Test the falsifying residues of clauses."""
    primes = first_primes(3)
    assert clause_residues((1, 2, 3), primes) == (30, [0, 2, 8, 12, 14, 18, 20, 24])
    # A tautology has no falsifying residue.
    assert clause_residues((1, -1, 2), primes) == (6, [])

    aeq.max_prime_product = 10
    with pytest.raises(ResourceLimitError, match="exceeds the cap 10"):
        clause_residues((1, 2, 3), primes)


def test_almosteq_reductions_sat3_lengths():
    """Test that exactly the lengths of falsified clauses are matched."""
    formula = Cnf3(3, ((1, 2, 3), (-1, -2, 3)))
    ast = sat3_to_unary_regex(formula)
    primes = first_primes(3)
    for length in range(90):
        residues = [length % p for p in primes]
        falsified = any(
            not any(literal_satisfied(literal, length, primes) for literal in clause)
            for clause in formula.clauses
        )
        assert matches(ast, _unary_word(length)) == falsified
        if all(residue in (0, 1) for residue in residues):
            assignment = {k + 1: residue == 1 for k, residue in enumerate(residues)}
            assert matches(ast, _unary_word(length)) != formula.is_satisfied_by(
                assignment
            )


def test_almosteq_reductions_sat3_universality():
    """Test the satisfiable and the unsatisfiable formula over 3 variables."""
    satisfiable = Cnf3(3, ((1, 2, 3),))
    assert not is_universal(to_dfa(sat3_to_unary_regex(satisfiable), UNARY_SYMBOL))

    unsatisfiable = Cnf3(
        3,
        tuple(
            (s1 * 1, s2 * 2, s3 * 3)
            for s1 in (1, -1)
            for s2 in (1, -1)
            for s3 in (1, -1)
        ),
    )
    assert is_universal(to_dfa(sat3_to_unary_regex(unsatisfiable), UNARY_SYMBOL))


def test_almosteq_reductions_sat3_random(get_random_cnf3):
    """Test the reduction against the enumeration of assignments."""
    rng = np.random.default_rng(seed=5)
    for _ in range(30):
        formula = get_random_cnf3(rng)
        dfa = to_dfa(sat3_to_unary_regex(formula), UNARY_SYMBOL)
        assert is_universal(dfa) == (not brute_sat(formula))
