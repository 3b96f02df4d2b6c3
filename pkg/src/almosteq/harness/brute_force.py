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
"""Densities by enumeration of all words of a length.

This is the slow reference for the density module: every word is tested by
simulating the automaton, nothing from the analysis or density modules is
used.
"""

import itertools as _itertools
from fractions import Fraction as _Fraction

from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.automata.nfa import Nfa as _Nfa
from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.conf import aeq as _aeq
from almosteq.core.errors import ResourceLimitError as _ResourceLimitError
from almosteq.equivalence.decide import LanguageInput as _LanguageInput
from almosteq.equivalence.decide import to_automaton as _to_automaton


def check_enumeration(
    alphabet_size: int, n: int, max_enumeration: int | None = None
) -> None:
    """Raise an error if |A|^n exceeds the enumeration cap."""
    if n < 0:
        raise ValueError(f"The word length has to be non-negative, got {n}")
    cap = _aeq.max_enumeration if max_enumeration is None else max_enumeration
    if alphabet_size**n > cap:
        raise _ResourceLimitError(
            f"Enumerating {alphabet_size}^{n} words exceeds the cap of {cap} "
            "(see `aeq.max_enumeration` or --cap-enumeration)"
        )


def brute_count(
    automaton: "_Nfa | _Dfa", n: int, *, max_enumeration: int | None = None
) -> int:
    """Count the accepted words of length n by enumerating all of them."""
    check_enumeration(len(automaton.alphabet), n, max_enumeration)
    return sum(
        automaton.accepts(word)
        for word in _itertools.product(automaton.alphabet.symbols, repeat=n)
    )


def brute_density(
    language: _LanguageInput,
    n: int,
    *,
    alphabet: "_Alphabet | str | None" = None,
    max_enumeration: int | None = None,
) -> _Fraction:
    """Exact fraction of the words of length n in the language.

    Args:
        language: Regular expression, NFA or DFA.
        n: The word length.
        alphabet: The declared alphabet, required for regular expressions.
        max_enumeration: Cap on |A|^n, defaults to `aeq.max_enumeration`.
    """
    automaton = _to_automaton(language, alphabet)
    count = brute_count(automaton, n, max_enumeration=max_enumeration)
    return _Fraction(count, len(automaton.alphabet) ** n)
