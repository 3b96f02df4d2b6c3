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
"""Exception types raised by AlmostEq."""


class RegexSyntaxError(ValueError):
    """A regular expression does not conform to the surface grammar."""

    def __init__(self, message: str, position: int):
        """Create the error.

        Args:
            message: Description of the problem.
            position: Character offset (0-based) in the regular expression text.
        """
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UndeclaredSymbolError(ValueError):
    """A symbol is used that is not part of the declared alphabet."""

    def __init__(self, symbol: str):
        super().__init__(f"Symbol {symbol!r} is not declared in the alphabet")
        self.symbol = symbol


class AlphabetError(ValueError):
    """An alphabet is invalid or two operands have different alphabets."""


class ResourceLimitError(RuntimeError):
    """A configured cap (states, horizon, enumeration, ...) was exceeded."""


class MalformedInputError(ValueError):
    """An automaton, graph, machine or formula description is structurally
    invalid."""
