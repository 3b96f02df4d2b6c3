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
"""Unit tests for the direct evaluation of regular expressions."""

from almosteq.regex.denotation import matches
from almosteq.regex.parser import parse


def test_almosteq_regex_denotation_basic():
    """Test membership for the six constructors."""
    assert not matches(parse("0", "a"), "")
    assert matches(parse("1", "a"), "")
    assert not matches(parse("1", "a"), "a")
    assert matches(parse("a", "a"), "a")
    assert matches(parse("ab|c*", "a,b,c"), "ab")
    assert matches(parse("ab|c*", "a,b,c"), "ccc")
    assert matches(parse("ab|c*", "a,b,c"), "")
    assert not matches(parse("ab|c*", "a,b,c"), "abc")


def test_almosteq_regex_denotation_star():
    """Test the Kleene star including stars of nullable expressions."""
    ast = parse("(a|1)*b", "a,b")
    assert matches(ast, "b")
    assert matches(ast, "aaab")
    assert not matches(ast, "aba")

    even = parse("((a|b)(a|b))*", "a,b")
    assert matches(even, "")
    assert matches(even, "abba")
    assert not matches(even, "aba")

    assert matches(parse("0*", "a"), "")
    assert not matches(parse("0*", "a"), "a")
