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
"""Unit tests for the global configuration."""

import os
from unittest.mock import patch

import pytest

from almosteq.core.conf import AlmostEq, Direction, Relation, aeq


def test_almosteq_core_conf_default_values():
    """Test the default caps."""
    assert aeq.max_subsets == 2**20
    assert aeq.max_horizon == 2000
    assert aeq.max_period == 64
    assert aeq.max_unary_states == 20
    assert aeq.relation is Relation


def test_almosteq_core_conf_environment_override():
    """Test that the caps can be set with environment variables."""
    with patch.dict(os.environ, {"ALMOSTEQ_MAX_SUBSETS": "17"}):
        assert AlmostEq().max_subsets == 17

    with patch.dict(os.environ, {"ALMOSTEQ_MAX_HORIZON": "many"}):
        with pytest.raises(ValueError, match="has to be an integer"):
            AlmostEq()


def test_almosteq_core_conf_reset():
    """Test that the configuration is reset to the defaults."""
    aeq.max_horizon = 5
    aeq.set_default_values()
    assert aeq.max_horizon == 2000


def test_almosteq_core_conf_relation_names():
    """Test the command line names of the relations."""
    assert Relation.from_cli_name("p-equiv") is Relation.p_equiv
    assert Relation.from_cli_name("zero_one") is Relation.zero_one
    assert Relation.e_equiv.cli_name == "e_equiv"
    with pytest.raises(ValueError, match="unexpected relation"):
        Relation.from_cli_name("q-equiv")


def test_almosteq_core_conf_direction():
    """Test the head directions."""
    assert Direction.from_letter("l") is Direction.left
    assert Direction.from_letter("R") is Direction.right
    assert Direction.left.letter == "L"
    with pytest.raises(ValueError):
        Direction.from_letter("S")
