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
"""This module implements the declared finite alphabet of a query."""

from collections.abc import Iterable as _Iterable
from collections.abc import Iterator as _Iterator
from collections.abc import Sequence as _Sequence
from dataclasses import dataclass as _dataclass
from dataclasses import field as _field

from almosteq.core.errors import AlphabetError as _AlphabetError
from almosteq.core.errors import UndeclaredSymbolError as _UndeclaredSymbolError
from almosteq.utils.data_structures import index_mapping as _index_mapping

Word = tuple[str, ...]


@_dataclass(frozen=True)
class Alphabet:
    """An ordered list of distinct symbol tokens.

    The order is observable: it defines the column order of transition
    tables and the canonical serialization of automata.
    """

    symbols: tuple[str, ...]
    _index: dict[str, int] = _field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if len(symbols) == 0:
            raise _AlphabetError("An alphabet needs at least one symbol")
        for symbol in symbols:
            if not isinstance(symbol, str) or symbol == "":
                raise _AlphabetError(
                    f"Alphabet symbols have to be non-empty strings, got {symbol!r}"
                )
        try:
            index = _index_mapping(symbols)
        except ValueError as error:
            raise _AlphabetError(f"Duplicate alphabet symbols: {error}") from None
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        """Create an alphabet from a comma separated list like `a1,a2,a3`."""
        return cls(tuple(symbol.strip() for symbol in text.split(",")))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> _Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        """Return the position of a symbol in this alphabet."""
        try:
            return self._index[symbol]
        except KeyError:
            raise _UndeclaredSymbolError(symbol) from None

    def encode(self, word: _Iterable[str]) -> tuple[int, ...]:
        """Convert a word of symbols to a tuple of symbol indices."""
        return tuple(self.index(symbol) for symbol in word)

    def decode(self, indices: _Iterable[int]) -> Word:
        """Convert a sequence of symbol indices back to a word."""
        return tuple(self.symbols[i] for i in indices)

    def check_same(self, other: "Alphabet") -> None:
        """Raise an error if `other` is not the identical alphabet."""
        if self != other:
            raise _AlphabetError(
                f"Alphabet mismatch: {list(self.symbols)} vs {list(other.symbols)}"
            )

    @property
    def is_unary(self) -> bool:
        """True if this alphabet has exactly one symbol."""
        return len(self.symbols) == 1


def as_alphabet(alphabet: "Alphabet | _Sequence[str] | str") -> Alphabet:
    """Convert the given object to an alphabet.

    Args:
        alphabet: An alphabet, a sequence of symbols or a comma separated string.

    Returns:
        The alphabet.
    """
    if isinstance(alphabet, Alphabet):
        return alphabet
    elif isinstance(alphabet, str):
        return Alphabet.from_string(alphabet)
    return Alphabet(tuple(alphabet))


def as_word(word: "_Sequence[str] | str", alphabet: Alphabet) -> Word:
    """Convert a word to a tuple of symbols of the alphabet.

    A string is split into single characters if every alphabet symbol is a
    single character, otherwise it is split on whitespace.
    """
    if isinstance(word, str):
        if all(len(symbol) == 1 for symbol in alphabet):
            word = tuple(word.replace(" ", ""))
        else:
            word = tuple(word.split())
    word = tuple(word)
    for symbol in word:
        if symbol not in alphabet:
            raise _UndeclaredSymbolError(symbol)
    return word
