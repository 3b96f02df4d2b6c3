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
"""Predicates on DFAs: the nonzero density condition, emptiness,
universality, finiteness and the corresponding witnesses."""

from dataclasses import dataclass as _dataclass
from fractions import Fraction as _Fraction

import numpy as _np

from almosteq.analysis.scc import coreachable_mask as _coreachable_mask
from almosteq.analysis.scc import reachable_mask as _reachable_mask
from almosteq.analysis.scc import sccs as _sccs
from almosteq.analysis.scc import shortest_word_to as _shortest_word_to
from almosteq.automata.constructions import complement as _complement
from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.core.alphabet import Word as _Word


@_dataclass(frozen=True)
class MuWitness:
    """An accepting state in a reachable sink component and a word leading
    to it from the initial state."""

    state: int
    access: _Word

    def validate(self, dfa: _Dfa) -> bool:
        """Check this witness against a DFA."""
        if dfa.run(self.access) != self.state or self.state not in dfa.accepting:
            return False
        decomposition = _sccs(dfa)
        return decomposition.is_sink[decomposition.component[self.state]]

    def to_dict(self) -> dict:
        return {"state": self.state, "access": list(self.access)}


@_dataclass(frozen=True)
class PumpWitness:
    """Words such that `prefix + loop * k + suffix` is accepted for all k."""

    prefix: _Word
    loop: _Word
    suffix: _Word

    def word(self, repetitions: int) -> _Word:
        """The accepted word with the loop repeated the given number of times."""
        return self.prefix + self.loop * repetitions + self.suffix

    def validate(self, dfa: _Dfa, repetitions: int = 3) -> bool:
        """Check the witness for 0, ..., repetitions loop iterations."""
        return len(self.loop) > 0 and all(
            dfa.accepts(self.word(k)) for k in range(repetitions + 1)
        )

    def to_dict(self) -> dict:
        return {
            "prefix": list(self.prefix),
            "loop": list(self.loop),
            "suffix": list(self.suffix),
        }


def mu_is_nonzero(dfa: _Dfa) -> tuple[bool, MuWitness | None]:
    """Check if the asymptotic density of the language is not zero.

    This is the case if and only if an accepting state is reachable and lies
    in a sink component, i.e., a strongly connected component that can not
    be left. A true result means that either the limit does not exist, or it
    exists and is positive.

    Returns:
        The verdict and, if it is true, a witness with the shortest access
        word.
    """
    decomposition = _sccs(dfa)
    candidates = [
        state
        for i in decomposition.sink_components()
        for state in decomposition.members[i]
        if state in dfa.accepting
    ]
    if not candidates:
        return False, None
    access = _shortest_word_to(dfa, candidates)
    return True, MuWitness(state=dfa.run(access), access=access)


def is_empty(dfa: _Dfa) -> bool:
    """True if no accepting state is reachable."""
    reachable = _reachable_mask(dfa)
    return not any(reachable[state] for state in dfa.accepting)


def is_universal(dfa: _Dfa) -> bool:
    """True if every word is accepted."""
    return is_empty(_complement(dfa))


def shortest_accepted_word(dfa: _Dfa) -> _Word | None:
    """Shortest accepted word, None if the language is empty."""
    return _shortest_word_to(dfa, dfa.accepting)


def _pumpable_states(dfa: _Dfa) -> _np.ndarray:
    """States that are reachable, lie on a cycle and can reach acceptance."""
    decomposition = _sccs(dfa)
    on_cycle = _np.array(
        [
            component >= 0 and decomposition.is_cyclic[component]
            for component in decomposition.component
        ],
        dtype=bool,
    )
    return _np.flatnonzero(on_cycle & _coreachable_mask(dfa))


def is_finite_language(dfa: _Dfa) -> bool:
    """True if the language of the DFA is finite."""
    return len(_pumpable_states(dfa)) == 0


def pump_witness(dfa: _Dfa) -> PumpWitness | None:
    """Witness for an infinite language, None if the language is finite."""
    states = set(int(state) for state in _pumpable_states(dfa))
    if not states:
        return None
    prefix = _shortest_word_to(dfa, states)
    state = dfa.run(prefix)

    # Shortest cycle through the state: a shortest word from one of its
    # successors back to the state.
    loop = None
    for symbol_index, successor in enumerate(dfa.table[state].tolist()):
        back = _shortest_word_to(dfa, [state], start=successor)
        if back is not None and (loop is None or len(back) + 1 < len(loop)):
            loop = (dfa.alphabet.symbols[symbol_index],) + back
    suffix = _shortest_word_to(dfa, dfa.accepting, start=state)
    return PumpWitness(prefix=prefix, loop=loop, suffix=suffix)


def density_upper_bound(dfa: _Dfa, n: int) -> _Fraction:
    """Upper bound for the density at length n of a language with density
    limit zero: |F| (1 - |A|^-|Q|)^floor(n / |Q|)."""
    q = dfa.state_count
    base = 1 - _Fraction(1, len(dfa.alphabet) ** q)
    return len(dfa.accepting) * base ** (n // q)


def density_lower_bound(dfa: _Dfa) -> _Fraction:
    """Lower bound 1 / (|Q| |A|^(2|Q|)) that the density of a language with
    nonzero density reaches in every window of |Q| consecutive lengths."""
    q = dfa.state_count
    return _Fraction(1, q * len(dfa.alphabet) ** (2 * q))
