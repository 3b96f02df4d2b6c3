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
"""Parser for the text form of regular expressions.

Grammar (precedence star > concatenation > union)::

    union  := concat ("|" concat)*
    concat := star ("."? star)*
    star   := atom "*"*
    atom   := "0" | "1" | identifier | "'" symbol "'" | "(" union ")"

An identifier that is not a declared symbol is split into a sequence of
declared symbols if that is possible, e.g., `ab` over the alphabet `a,b`.
"""

from dataclasses import dataclass as _dataclass
from re import compile as _re_compile

from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.alphabet import as_alphabet as _as_alphabet
from almosteq.core.errors import RegexSyntaxError as _RegexSyntaxError
from almosteq.core.errors import UndeclaredSymbolError as _UndeclaredSymbolError
from almosteq.regex.ast import Concat as _Concat
from almosteq.regex.ast import Empty as _Empty
from almosteq.regex.ast import Epsilon as _Epsilon
from almosteq.regex.ast import Literal as _Literal
from almosteq.regex.ast import RegexAst as _RegexAst
from almosteq.regex.ast import Star as _Star
from almosteq.regex.ast import Union as _Union

_IDENTIFIER = _re_compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_OPERATORS = "()|.*"


@_dataclass(frozen=True)
class _Token:
    """A lexical token, `kind` is one of the operator characters, `const` or
    `literal`."""

    kind: str
    value: str
    position: int


def _split_identifier(run: str, alphabet: _Alphabet) -> list[tuple[str, int]]:
    """Split an identifier run into declared symbols.

    Returns:
        List of (symbol, offset in run). Longer symbols are preferred.
    """
    if run in alphabet:
        return [(run, 0)]

    # split[i] is a segmentation of run[i:] or None if there is none.
    split: list[list[tuple[str, int]] | None] = [None] * (len(run) + 1)
    split[len(run)] = []
    for start in range(len(run) - 1, -1, -1):
        for end in range(len(run), start, -1):
            rest = split[end]
            if rest is not None and run[start:end] in alphabet:
                split[start] = [(run[start:end], start)] + rest
                break
    if split[0] is None:
        raise _UndeclaredSymbolError(run)
    return split[0]


def _tokenize(text: str, alphabet: _Alphabet) -> list[_Token]:
    """Convert the regex text to a list of tokens."""
    tokens = []
    position = 0
    while position < len(text):
        char = text[position]
        if char.isspace():
            position += 1
        elif char in _OPERATORS:
            tokens.append(_Token(char, char, position))
            position += 1
        elif char in "01":
            tokens.append(_Token("const", char, position))
            position += 1
        elif char == "'":
            end = text.find("'", position + 1)
            if end == -1:
                raise _RegexSyntaxError("Unterminated quoted symbol", position)
            symbol = text[position + 1 : end]
            if symbol == "":
                raise _RegexSyntaxError("Empty quoted symbol", position)
            if symbol not in alphabet:
                raise _UndeclaredSymbolError(symbol)
            tokens.append(_Token("literal", symbol, position))
            position = end + 1
        else:
            match = _IDENTIFIER.match(text, position)
            if match is None:
                raise _RegexSyntaxError(f"Unexpected character {char!r}", position)
            for symbol, offset in _split_identifier(match.group(), alphabet):
                tokens.append(_Token("literal", symbol, position + offset))
            position = match.end()
    return tokens


class _Parser:
    """Recursive descent parser over a token list."""

    def __init__(self, tokens: list[_Token], text_length: int):
        self.tokens = tokens
        self.index = 0
        self.text_length = text_length

    def peek(self) -> _Token | None:
        """Return the current token without consuming it."""
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def position(self) -> int:
        """Position of the current token, or the end of the text."""
        token = self.peek()
        return self.text_length if token is None else token.position

    def parse_union(self) -> _RegexAst:
        node = self.parse_concat()
        while (token := self.peek()) is not None and token.kind == "|":
            self.index += 1
            node = _Union(node, self.parse_concat())
        return node

    def parse_concat(self) -> _RegexAst:
        node = self.parse_star()
        while (token := self.peek()) is not None:
            if token.kind == ".":
                self.index += 1
            elif token.kind not in ("const", "literal", "("):
                break
            node = _Concat(node, self.parse_star())
        return node

    def parse_star(self) -> _RegexAst:
        node = self.parse_atom()
        while (token := self.peek()) is not None and token.kind == "*":
            self.index += 1
            node = _Star(node)
        return node

    def parse_atom(self) -> _RegexAst:
        token = self.peek()
        if token is None:
            raise _RegexSyntaxError("Unexpected end of expression", self.position())
        self.index += 1
        if token.kind == "const":
            return _Empty() if token.value == "0" else _Epsilon()
        elif token.kind == "literal":
            return _Literal(token.value)
        elif token.kind == "(":
            node = self.parse_union()
            closing = self.peek()
            if closing is None or closing.kind != ")":
                raise _RegexSyntaxError("Expected ')'", self.position())
            self.index += 1
            return node
        raise _RegexSyntaxError(f"Unexpected {token.value!r}", token.position)


def parse(text: str, alphabet: "_Alphabet | str") -> _RegexAst:
    """Parse a regular expression over a declared alphabet.

    Args:
        text: The regular expression, e.g., `(a1|a2)*`.
        alphabet: The declared alphabet, every literal has to be a member.

    Returns:
        The syntax tree.
    """
    alphabet = _as_alphabet(alphabet)
    tokens = _tokenize(text, alphabet)
    parser = _Parser(tokens, len(text))
    ast = parser.parse_union()
    if parser.peek() is not None:
        token = parser.peek()
        raise _RegexSyntaxError(f"Unexpected {token.value!r}", token.position)
    return ast
