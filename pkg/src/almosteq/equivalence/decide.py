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
"""Decision procedures for equality, p-, f- and E-equivalence and the
zero-one problem.

Every input is normalized to a DFA (regular expression -> NFA -> DFA) and
the two DFAs are combined to the XOR automaton, which accepts the symmetric
difference of the two languages. The relations are then graph properties of
the XOR automaton.
"""

import logging as _logging

from almosteq.analysis.predicates import density_lower_bound as _density_lower_bound
from almosteq.analysis.predicates import is_empty as _is_empty
from almosteq.analysis.predicates import is_finite_language as _is_finite_language
from almosteq.analysis.predicates import mu_is_nonzero as _mu_is_nonzero
from almosteq.analysis.predicates import pump_witness as _pump_witness
from almosteq.analysis.predicates import (
    shortest_accepted_word as _shortest_accepted_word,
)
from almosteq.automata.constructions import complement as _complement
from almosteq.automata.constructions import product as _product
from almosteq.automata.constructions import to_dfa as _to_dfa
from almosteq.automata.constructions import xor_determinize as _xor_determinize
from almosteq.automata.constructions import xor_product as _xor_product
from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.automata.nfa import Nfa as _Nfa
from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.alphabet import as_alphabet as _as_alphabet
from almosteq.core.conf import Relation as _Relation
from almosteq.core.conf import ZeroOneSide as _ZeroOneSide
from almosteq.core.errors import AlphabetError as _AlphabetError
from almosteq.equivalence.report import DecisionReport as _DecisionReport
from almosteq.regex.ast import RegexAst as _RegexAst
from almosteq.regex.parser import parse as _parse
from almosteq.regex.thompson import compile_to_nfa as _compile_to_nfa

_logger = _logging.getLogger(__name__)

LanguageInput = "str | _RegexAst | _Nfa | _Dfa"


def to_automaton(
    language: LanguageInput, alphabet: "_Alphabet | str | None" = None
) -> "_Nfa | _Dfa":
    """Convert a language input to an automaton.

    Args:
        language: Regular expression text, syntax tree, NFA or DFA.
        alphabet: The declared alphabet. Required for regular expressions,
            checked against the alphabet of automata.

    Returns:
        The automaton, regular expressions are compiled to an NFA.
    """
    if isinstance(language, (_Nfa, _Dfa)):
        if alphabet is not None:
            _as_alphabet(alphabet).check_same(language.alphabet)
        return language
    if alphabet is None:
        raise _AlphabetError("A regular expression needs a declared alphabet")
    alphabet = _as_alphabet(alphabet)
    if isinstance(language, str):
        language = _parse(language, alphabet)
    if isinstance(language, _RegexAst):
        return _compile_to_nfa(language, alphabet)
    raise TypeError(f"Got unexpected language input {type(language)}")


def to_dfa(
    language: LanguageInput,
    alphabet: "_Alphabet | str | None" = None,
    *,
    max_subsets: int | None = None,
) -> _Dfa:
    """Convert a language input to a DFA."""
    return _to_dfa(to_automaton(language, alphabet), max_subsets=max_subsets)


def xor_automaton(
    language_1: LanguageInput,
    language_2: LanguageInput,
    *,
    alphabet: "_Alphabet | str | None" = None,
    on_the_fly: bool = False,
    max_subsets: int | None = None,
) -> tuple[_Dfa, dict]:
    """Build the XOR automaton of two language inputs.

    Args:
        language_1: First language.
        language_2: Second language.
        alphabet: The declared alphabet, both inputs have to use it.
        on_the_fly: Determinize both NFAs in lock-step instead of building
            the two DFAs first.
        max_subsets: Cap on the number of states of each construction.

    Returns:
        The XOR DFA and statistics on the sizes of the intermediate automata.
    """
    automaton_1 = to_automaton(language_1, alphabet)
    automaton_2 = to_automaton(language_2, alphabet)
    automaton_1.alphabet.check_same(automaton_2.alphabet)

    if on_the_fly:
        nfa_1, nfa_2 = (
            automaton.as_nfa() if isinstance(automaton, _Dfa) else automaton
            for automaton in (automaton_1, automaton_2)
        )
        xor = _xor_determinize(nfa_1, nfa_2, max_subsets=max_subsets)
        stats = {"nfa_states_1": nfa_1.state_count, "nfa_states_2": nfa_2.state_count}
    else:
        dfa_1 = _to_dfa(automaton_1, max_subsets=max_subsets)
        dfa_2 = _to_dfa(automaton_2, max_subsets=max_subsets)
        xor = _xor_product(dfa_1, dfa_2, max_subsets=max_subsets)
        stats = {"dfa_states_1": dfa_1.state_count, "dfa_states_2": dfa_2.state_count}
    stats["xor_states"] = xor.state_count
    stats["unary"] = xor.alphabet.is_unary
    _logger.debug("XOR automaton statistics: %s", stats)
    return xor, stats


def equal(
    language_1: LanguageInput, language_2: LanguageInput, **kwargs
) -> _DecisionReport:
    """Decide if two languages are equal.

    A false verdict comes with the shortest word in the symmetric
    difference.
    """
    xor, stats = xor_automaton(language_1, language_2, **kwargs)
    verdict = _is_empty(xor)
    return _DecisionReport(
        relation=_Relation.equal,
        verdict=verdict,
        witness=None if verdict else _shortest_accepted_word(xor),
        stats=stats,
    )


def p_equiv(
    language_1: LanguageInput, language_2: LanguageInput, **kwargs
) -> _DecisionReport:
    """Decide if the symmetric difference of two languages has density zero.

    A false verdict comes with a `MuWitness` on the XOR automaton.
    """
    xor, stats = xor_automaton(language_1, language_2, **kwargs)
    nonzero, witness = _mu_is_nonzero(xor)
    stats["density_lower_bound"] = _density_lower_bound(xor)
    return _DecisionReport(
        relation=_Relation.p_equiv, verdict=not nonzero, witness=witness, stats=stats
    )


def f_equiv(
    language_1: LanguageInput, language_2: LanguageInput, **kwargs
) -> _DecisionReport:
    """Decide if the symmetric difference of two languages is finite.

    A false verdict comes with a `PumpWitness` on the XOR automaton.
    """
    xor, stats = xor_automaton(language_1, language_2, **kwargs)
    verdict = _is_finite_language(xor)
    return _DecisionReport(
        relation=_Relation.f_equiv,
        verdict=verdict,
        witness=None if verdict else _pump_witness(xor),
        stats=stats,
    )


def e_equiv(
    language_1: LanguageInput,
    language_2: LanguageInput,
    exceptions: LanguageInput,
    **kwargs,
) -> _DecisionReport:
    """Decide if the symmetric difference of two languages is a subset of
    the language `exceptions`.

    A false verdict comes with the shortest word in the symmetric difference
    that is not in `exceptions`.
    """
    xor, stats = xor_automaton(language_1, language_2, **kwargs)
    exceptions_dfa = to_dfa(
        exceptions,
        kwargs.get("alphabet") or xor.alphabet,
        max_subsets=kwargs.get("max_subsets"),
    )
    difference = _product(
        xor,
        exceptions_dfa,
        lambda in_xor, in_exceptions: in_xor and not in_exceptions,
        max_subsets=kwargs.get("max_subsets"),
    )
    stats["exception_states"] = exceptions_dfa.state_count
    stats["difference_states"] = difference.state_count
    verdict = _is_empty(difference)
    return _DecisionReport(
        relation=_Relation.e_equiv,
        verdict=verdict,
        witness=None if verdict else _shortest_accepted_word(difference),
        stats=stats,
    )


def zero_one(
    language: LanguageInput,
    *,
    alphabet: "_Alphabet | str | None" = None,
    max_subsets: int | None = None,
) -> _DecisionReport:
    """Decide if a language is almost empty or almost full.

    Both disjuncts are evaluated. L is p-equivalent to the empty language if
    the density of L is zero, and p-equivalent to A* if the density of the
    complement of L is zero.

    Returns:
        The report, `side` names the disjunct that holds. A false verdict
        comes with the `MuWitness` that L is not almost empty.
    """
    dfa = to_dfa(language, alphabet, max_subsets=max_subsets)
    nonzero, witness = _mu_is_nonzero(dfa)
    complement_nonzero, _ = _mu_is_nonzero(_complement(dfa))
    almost_empty = not nonzero
    almost_full = not complement_nonzero
    if almost_empty:
        side = _ZeroOneSide.almost_empty
    elif almost_full:
        side = _ZeroOneSide.almost_full
    else:
        side = None
    return _DecisionReport(
        relation=_Relation.zero_one,
        verdict=almost_empty or almost_full,
        witness=None if almost_empty else witness,
        side=side,
        stats={
            "dfa_states": dfa.state_count,
            "unary": dfa.alphabet.is_unary,
            "almost_empty": almost_empty,
            "almost_full": almost_full,
        },
    )
