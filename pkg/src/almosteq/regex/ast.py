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
"""This module implements the syntax tree of regular expressions.

The six constructors are the empty language `0`, the empty word `1`,
literals, concatenation, union and Kleene star. All nodes are immutable and
compare structurally.
"""

from collections.abc import Iterator as _Iterator
from collections.abc import Sequence as _Sequence
from dataclasses import dataclass as _dataclass
from re import compile as _re_compile

# Symbols that can be printed without quotes.
_IDENTIFIER = _re_compile(r"[a-zA-Z][a-zA-Z0-9_]*")


class RegexAst:
    """Base class for all regex syntax tree nodes."""

    def children(self) -> tuple["RegexAst", ...]:
        """Return the direct sub expressions of this node."""
        return ()

    def iter_postorder(self) -> _Iterator["RegexAst"]:
        """Iterate over all nodes of the tree, children before parents.

        The traversal uses an explicit stack, so deep (e.g. long left
        associative) trees do not hit the recursion limit.
        """
        stack: list[tuple[RegexAst, bool]] = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                yield node
            else:
                stack.append((node, True))
                for child in reversed(node.children()):
                    stack.append((child, False))

    def size(self) -> int:
        """Number of nodes in this tree."""
        return sum(1 for _ in self.iter_postorder())

    def symbols(self) -> set[str]:
        """Return all literal symbols used in this tree."""
        return {
            node.symbol for node in self.iter_postorder() if isinstance(node, Literal)
        }

    def __str__(self) -> str:
        return to_text(self)


@_dataclass(frozen=True)
class Empty(RegexAst):
    """The empty language."""


@_dataclass(frozen=True)
class Epsilon(RegexAst):
    """The language containing only the empty word."""


@_dataclass(frozen=True)
class Literal(RegexAst):
    """A single symbol of the alphabet."""

    symbol: str


@_dataclass(frozen=True)
class Concat(RegexAst):
    """Concatenation of two languages."""

    left: RegexAst
    right: RegexAst

    def children(self) -> tuple[RegexAst, ...]:
        return (self.left, self.right)


@_dataclass(frozen=True)
class Union(RegexAst):
    """Union of two languages."""

    left: RegexAst
    right: RegexAst

    def children(self) -> tuple[RegexAst, ...]:
        return (self.left, self.right)


@_dataclass(frozen=True)
class Star(RegexAst):
    """Kleene star of a language."""

    child: RegexAst

    def children(self) -> tuple[RegexAst, ...]:
        return (self.child,)


def format_symbol(symbol: str) -> str:
    """Return the surface form of a literal symbol.

    Identifiers are printed as they are, everything else (including the
    constants `0` and `1`) is quoted.
    """
    if _IDENTIFIER.fullmatch(symbol):
        return symbol
    if "'" in symbol:
        raise ValueError(f"Symbol {symbol!r} can not be printed, it contains a quote")
    return f"'{symbol}'"


def to_text(ast: RegexAst) -> str:
    """Canonical, fully parenthesized text of a regular expression.

    Binary nodes are always wrapped in parentheses and concatenation is
    written with an explicit `.`, so that parsing the result yields the
    identical tree.
    """
    texts: dict[int, str] = {}
    for node in ast.iter_postorder():
        if isinstance(node, Empty):
            text = "0"
        elif isinstance(node, Epsilon):
            text = "1"
        elif isinstance(node, Literal):
            text = format_symbol(node.symbol)
        elif isinstance(node, Concat):
            text = f"({texts[id(node.left)]}.{texts[id(node.right)]})"
        elif isinstance(node, Union):
            text = f"({texts[id(node.left)]}|{texts[id(node.right)]})"
        elif isinstance(node, Star):
            text = f"{texts[id(node.child)]}*"
        else:
            raise TypeError(f"Got unexpected regex node {type(node)}")
        texts[id(node)] = text
    return texts[id(ast)]


def to_dict(ast: RegexAst) -> dict:
    """Convert a regular expression to a nested dictionary (JSON friendly)."""
    dicts: dict[int, dict] = {}
    for node in ast.iter_postorder():
        if isinstance(node, Literal):
            item = {"kind": "Literal", "symbol": node.symbol}
        elif isinstance(node, (Concat, Union)):
            item = {
                "kind": type(node).__name__,
                "left": dicts[id(node.left)],
                "right": dicts[id(node.right)],
            }
        elif isinstance(node, Star):
            item = {"kind": "Star", "child": dicts[id(node.child)]}
        else:
            item = {"kind": type(node).__name__}
        dicts[id(node)] = item
    return dicts[id(ast)]


def _balanced(items: _Sequence[RegexAst], node_type: type) -> RegexAst:
    """Combine the items into a balanced binary tree of the given node type."""
    level = list(items)
    while len(level) > 1:
        next_level = [
            node_type(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)
        ]
        if len(level) % 2 == 1:
            next_level.append(level[-1])
        level = next_level
    return level[0]


def union_all(items: _Sequence[RegexAst]) -> RegexAst:
    """Union of all given expressions as a balanced tree, `0` if empty."""
    if len(items) == 0:
        return Empty()
    return _balanced(items, Union)


def concat_all(items: _Sequence[RegexAst]) -> RegexAst:
    """Concatenation of all given expressions, `1` if empty."""
    if len(items) == 0:
        return Epsilon()
    return _balanced(items, Concat)


def any_of(symbols: _Sequence[str]) -> RegexAst:
    """Union of the literals for the given symbols."""
    return union_all([Literal(symbol) for symbol in symbols])


def power(ast: RegexAst, exponent: int) -> RegexAst:
    """The expression concatenated `exponent` times with itself."""
    if exponent < 0:
        raise ValueError("The exponent has to be non-negative")
    return concat_all([ast] * exponent)


def word_expression(word: _Sequence[str]) -> RegexAst:
    """Expression matching exactly the given word."""
    return concat_all([Literal(symbol) for symbol in word])
