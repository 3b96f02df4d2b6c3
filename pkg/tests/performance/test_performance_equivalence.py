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
"""Test the performance of the determinization and the decisions."""

import pytest

from almosteq.equivalence.decide import p_equiv, to_dfa
from almosteq.reductions.turing_machine import composite_alphabet, tm_to_regex

# The 11th symbol from the end is `a`, every DFA has at least 2^11 states.
KTH_FROM_END = "(a|b)*a" + "(a|b)" * 10


@pytest.mark.performance
def test_performance_equivalence_determinize(evaluate_execution_time):
    """Test the subset construction with an exponential blow up."""
    dfa = evaluate_execution_time(
        "Equivalence: determinize the 11th symbol from the end",
        to_dfa,
        args=(KTH_FROM_END, "a,b"),
        expected_time=10.0,
    )
    assert dfa.state_count >= 2**11


@pytest.mark.performance
@pytest.mark.parametrize("on_the_fly", [False, True])
def test_performance_equivalence_p_equiv(evaluate_execution_time, on_the_fly):
    """Test the p-equivalence of two expressions with large DFAs."""
    report = evaluate_execution_time(
        f"Equivalence: p-equiv of large DFAs (on the fly: {on_the_fly})",
        p_equiv,
        args=(KTH_FROM_END, "(a|b)*b" + "(a|b)" * 10),
        kwargs={"alphabet": "a,b", "on_the_fly": on_the_fly},
        expected_time=20.0,
    )
    assert not report.verdict


@pytest.mark.performance
def test_performance_equivalence_turing_machine(
    get_test_machine, evaluate_execution_time
):
    """Test the determinization of a Turing machine expression."""
    machine = get_test_machine("reject_all")
    ast = tm_to_regex(machine, "aaa")
    dfa = evaluate_execution_time(
        "Equivalence: determinize the run expression of a machine on 3 cells",
        to_dfa,
        args=(ast, composite_alphabet(machine)),
        expected_time=60.0,
    )
    assert dfa.state_count > 1
