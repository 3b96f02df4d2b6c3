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
"""End-to-end tests of the density and equivalence queries on the standard
examples: the oscillating language (AA)*, the null language a1* and the
p-equivalent but unequal pairs of expressions."""

from fractions import Fraction

import pytest

from almosteq.analysis.predicates import mu_is_nonzero
from almosteq.automata.constructions import xor_product
from almosteq.automata.io import automaton_to_dict
from almosteq.core.conf import ZeroOneSide
from almosteq.density.density import profile
from almosteq.equivalence.decide import (
    equal,
    f_equiv,
    p_equiv,
    to_dfa,
    zero_one,
)
from almosteq.harness.brute_force import brute_density


def test_integration_examples_oscillating_density():
    """Test that (AA)* has nonzero upper density but no density."""
    dfa = to_dfa("((a|b)(a|b))*", "a,b")
    assert mu_is_nonzero(dfa)[0]
    result = profile(dfa, 40, residues=True)
    assert result.mu == tuple(Fraction((n + 1) % 2) for n in range(41))
    assert result.residues.period == 2
    assert result.residues.estimates == (1, 0)

    report = zero_one(dfa)
    assert not report.verdict
    assert report.side is None


def test_integration_examples_null_language():
    """Test that a1* over {a1, a2} has density zero."""
    dfa = to_dfa("a1*", "a1,a2")
    assert not mu_is_nonzero(dfa)[0]
    assert all(
        profile(dfa, 10).mu[n] == brute_density("a1*", n, alphabet="a1,a2")
        for n in range(11)
    )

    report = zero_one("a1*", alphabet="a1,a2")
    assert report.verdict
    assert report.side is ZeroOneSide.almost_empty


def test_integration_examples_density_profile(
    assert_results_equal, get_corresponding_reference_file_path
):
    """Test the full profile of a1* against the reference file."""
    assert_results_equal(
        get_corresponding_reference_file_path(),
        profile(to_dfa("a1*", "a1,a2"), 5, residues=True),
    )


def test_integration_examples_dfa(
    assert_results_equal, get_corresponding_reference_file_path
):
    """Test the determinized automaton of (a1|a2)* over three symbols."""
    dfa = to_dfa("(a1|a2)*", "a1,a2,a3")
    assert dfa.accepts(["a1", "a2"])
    assert not dfa.accepts(["a3"])
    assert_results_equal(
        get_corresponding_reference_file_path(), automaton_to_dict(dfa)
    )


def test_integration_examples_p_equiv_report(
    assert_results_equal, get_corresponding_reference_file_path
):
    """Test the report of a p-equivalent pair that is not equal."""
    report = p_equiv("(a1|a2)*", "0", alphabet="a1,a2,a3")
    assert_results_equal(get_corresponding_reference_file_path(), report)
    assert not equal("(a1|a2)*", "0", alphabet="a1,a2,a3").verdict
    assert not f_equiv("(a1|a2)*", "0", alphabet="a1,a2,a3").verdict


@pytest.mark.parametrize(
    ("regex_1", "regex_2", "alphabet", "expected"),
    [
        ("(a1|a2)*", "a1(a1|a2)*", "a1,a2", False),
        ("(a1|a2)*", "0", "a1,a2,a3", True),
        ("(a1|a2)*", "0", "a1,a2", False),
        ("(a1|a2)*", "a2(a1|a2)*|1|a1(a1|a2)*", "a1,a2", True),
    ],
)
def test_integration_examples_p_equiv(regex_1, regex_2, alphabet, expected):
    """Test the p-equivalence of the example pairs in both directions and
    with both constructions of the XOR automaton."""
    for on_the_fly in (False, True):
        for first, second in ((regex_1, regex_2), (regex_2, regex_1)):
            report = p_equiv(first, second, alphabet=alphabet, on_the_fly=on_the_fly)
            assert report.verdict == expected


def test_integration_examples_half_density():
    """Test that A* and a1 A* differ on half of the words of every length."""
    xor = xor_product(to_dfa("(a1|a2)*", "a1,a2"), to_dfa("a1(a1|a2)*", "a1,a2"))
    result = profile(xor, 12)
    assert result.mu[0] == 1
    assert all(mu == Fraction(1, 2) for mu in result.mu[1:])


def test_integration_examples_single_symbol():
    """Test that a1* over {a1} is the full language."""
    dfa = to_dfa("a1*", "a1")
    result = profile(dfa, 8)
    assert all(mu == 1 for mu in result.mu)
    assert result.delta[8] == 1

    report = zero_one(dfa)
    assert report.verdict
    assert report.side is ZeroOneSide.almost_full
    assert equal("a1*", "(a1)*a1|1", alphabet="a1").verdict


def test_integration_examples_vanishing_density():
    """Test that (a1|a2)* over three symbols has density (2/3)^n."""
    result = profile(to_dfa("(a1|a2)*", "a1,a2,a3"), 15)
    assert result.mu == tuple(Fraction(2**n, 3**n) for n in range(16))
