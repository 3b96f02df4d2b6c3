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
"""Unit tests for the regular expression parser."""

import numpy as np
import pytest

from almosteq.core.errors import RegexSyntaxError, UndeclaredSymbolError
from almosteq.regex.ast import Concat, Empty, Epsilon, Literal, Star, Union, to_text
from almosteq.regex.parser import parse


def test_almosteq_regex_parser_examples():
    """Test the parser on the basic examples."""
    assert parse("(a1|a2)*", "a1,a2,a3") == Star(Union(Literal("a1"), Literal("a2")))
    assert parse("0", "a") == Empty()
    assert parse("1", "a") == Epsilon()
    assert parse("ab|c*", "a,b,c") == Union(
        Concat(Literal("a"), Literal("b")), Star(Literal("c"))
    )


def test_almosteq_regex_parser_precedence():
    """Test that star binds stronger than concatenation and concatenation
    stronger than union."""
    a, b, c = Literal("a"), Literal("b"), Literal("c")
    assert parse("a|b.c", "a,b,c") == Union(a, Concat(b, c))
    assert parse("a b*", "a,b") == Concat(a, Star(b))
    assert parse("(a b)*", "a,b") == Star(Concat(a, b))
    assert parse("a**", "a") == Star(Star(a))
    assert parse("a|b|c", "a,b,c") == Union(Union(a, b), c)
    assert parse("abc", "a,b,c") == Concat(Concat(a, b), c)


def test_almosteq_regex_parser_identifier_split():
    """Test the splitting of identifier runs into declared symbols."""
    assert parse("a1a2", "a1,a2") == Concat(Literal("a1"), Literal("a2"))
    # The longer symbol wins if both segmentations are possible.
    assert parse("ab", "a,b,ab") == Literal("ab")
    assert parse("a1 a2", "a1,a2,a12") == Concat(Literal("a1"), Literal("a2"))


def test_almosteq_regex_parser_quoted_symbols():
    """Test symbols that are not identifiers."""
    assert parse("'#'.'q0:a'", "#,a,q0:a") == Concat(Literal("#"), Literal("q0:a"))
    assert parse("'0'*", "0") == Star(Literal("0"))
    assert parse("0*", "0") == Star(Empty())


def test_almosteq_regex_parser_errors():
    """Test the error positions and the undeclared symbols."""
    with pytest.raises(RegexSyntaxError) as error:
        parse("(a|b", "a,b")
    assert error.value.position == 4

    with pytest.raises(RegexSyntaxError) as error:
        parse("a|)", "a")
    assert error.value.position == 2

    with pytest.raises(RegexSyntaxError) as error:
        parse("a+b", "a,b")
    assert error.value.position == 1

    with pytest.raises(RegexSyntaxError, match="end of expression"):
        parse("", "a")

    with pytest.raises(RegexSyntaxError, match="Unterminated"):
        parse("'a", "a")

    with pytest.raises(UndeclaredSymbolError) as error:
        parse("(a1|a4)*", "a1,a2,a3")
    assert error.value.symbol == "a4"


def test_almosteq_regex_parser_round_trip(get_random_ast):
    """Test that parsing the canonical text returns the identical tree."""
    rng = np.random.default_rng(seed=1)
    for _ in range(200):
        ast = get_random_ast(rng, ("a", "b", "#"), depth=6)
        text = to_text(ast)
        assert parse(text, "a,b,#") == ast
        assert to_text(parse(text, "a,b,#")) == text
