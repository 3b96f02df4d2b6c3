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
"""Unit tests for the decision reports."""

import json
from fractions import Fraction

import pytest

from almosteq.analysis.predicates import MuWitness
from almosteq.core.conf import Relation, ZeroOneSide
from almosteq.equivalence.decide import p_equiv
from almosteq.equivalence.report import DecisionReport, LengthWitness


def test_almosteq_equivalence_report_to_dict(assert_results_equal):
    """Test the JSON data of a p-equivalence report."""
    report = p_equiv("(a1|a2)*", "0", alphabet="a1,a2")
    assert_results_equal(
        {
            "relation": "p_equiv",
            "verdict": False,
            "witness": {"state": 1, "access": ["a1"]},
            "stats": {
                "dfa_states_1": 3,
                "dfa_states_2": 2,
                "xor_states": 3,
                "unary": False,
                "density_lower_bound": "1/192",
            },
        },
        report,
    )


def test_almosteq_equivalence_report_witnesses():
    """Test the serialization of the different witnesses."""
    report = DecisionReport(Relation.equal, False, witness=("a", "b"))
    assert report.to_dict()["witness"] == {"word": ["a", "b"]}
    assert "side" not in report.to_dict()

    witness = LengthWitness(11)
    assert witness.bits == "1011"
    assert witness.to_dict() == {"n": 11, "bits": "1011"}

    report = DecisionReport(
        Relation.zero_one,
        True,
        witness=MuWitness(state=0, access=()),
        side=ZeroOneSide.almost_full,
        stats={"bound": Fraction(1, 3)},
    )
    assert json.loads(report.to_json()) == {
        "relation": "zero_one",
        "verdict": True,
        "witness": {"state": 0, "access": []},
        "stats": {"bound": "1/3"},
        "side": "almost_full",
    }

    with pytest.raises(TypeError, match="witness"):
        DecisionReport(Relation.equal, False, witness=[1]).to_dict()
