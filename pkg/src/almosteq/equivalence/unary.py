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
"""p-equivalence of unary NFAs with boolean matrix powers.

For unary NFAs with |Q1| and |Q2| states the two languages are p-equivalent
if and only if no length n with 2^D <= n < 2^(D+1), D = |Q1| + |Q2|, is in
the symmetric difference. Every such n is reached from the exponent 1 by D
steps that each either square the current power or square it and multiply
with the adjacency matrix once more. All choices are explored, pairs of
matrices that were already seen on the same level are skipped.
"""

import numpy as _np

from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.automata.nfa import Nfa as _Nfa
from almosteq.core.conf import Relation as _Relation
from almosteq.core.conf import aeq as _aeq
from almosteq.core.errors import AlphabetError as _AlphabetError
from almosteq.core.errors import ResourceLimitError as _ResourceLimitError
from almosteq.equivalence.report import DecisionReport as _DecisionReport
from almosteq.equivalence.report import LengthWitness as _LengthWitness


def adjacency_matrix(nfa: _Nfa) -> _np.ndarray:
    """Boolean adjacency matrix of a unary NFA."""
    matrix = _np.zeros((nfa.state_count, nfa.state_count), dtype=bool)
    for state, row in enumerate(nfa.table):
        matrix[state, list(row[0])] = True
    return matrix


def _multiply(left: _np.ndarray, right: _np.ndarray) -> _np.ndarray:
    """Boolean matrix product."""
    return (left.astype(_np.int64) @ right.astype(_np.int64)) > 0


def _accepts(nfa: _Nfa, power: _np.ndarray) -> bool:
    """Check if the word whose length is the exponent of `power` is accepted."""
    return bool(power[nfa.initial, sorted(nfa.accepting)].any())


def unary_p_equiv(
    nfa_1: "_Nfa | _Dfa",
    nfa_2: "_Nfa | _Dfa",
    *,
    max_states: int | None = None,
) -> _DecisionReport:
    """Decide p-equivalence of two automata over the same one-symbol alphabet.

    Args:
        nfa_1: First automaton.
        nfa_2: Second automaton.
        max_states: Cap on |Q1| + |Q2|, defaults to `aeq.max_unary_states`.

    Returns:
        The report, a false verdict comes with the distinguishing length.
    """
    nfa_1, nfa_2 = (
        automaton.as_nfa() if isinstance(automaton, _Dfa) else automaton
        for automaton in (nfa_1, nfa_2)
    )
    nfa_1.alphabet.check_same(nfa_2.alphabet)
    if not nfa_1.alphabet.is_unary:
        raise _AlphabetError(
            "The alphabet has to consist of a single symbol, "
            f"got {list(nfa_1.alphabet)}"
        )
    steps = nfa_1.state_count + nfa_2.state_count
    cap = _aeq.max_unary_states if max_states is None else max_states
    if steps > cap:
        raise _ResourceLimitError(
            f"The automata have {steps} states, the cap is {cap} "
            "(see `aeq.max_unary_states`)"
        )

    base_1 = adjacency_matrix(nfa_1)
    base_2 = adjacency_matrix(nfa_2)
    level = {(base_1.tobytes(), base_2.tobytes()): (base_1, base_2, "1")}
    explored = 1
    for _ in range(steps):
        next_level = {}
        for power_1, power_2, bits in level.values():
            square_1 = _multiply(power_1, power_1)
            square_2 = _multiply(power_2, power_2)
            for bit, candidate in (
                ("0", (square_1, square_2)),
                ("1", (_multiply(square_1, base_1), _multiply(square_2, base_2))),
            ):
                key = (candidate[0].tobytes(), candidate[1].tobytes())
                if key not in next_level:
                    next_level[key] = (*candidate, bits + bit)
        explored += len(next_level)
        level = next_level

    stats = {
        "states_1": nfa_1.state_count,
        "states_2": nfa_2.state_count,
        "window_start": 2**steps,
        "window_end": 2 ** (steps + 1),
        "explored": explored,
        "unary": True,
    }
    for power_1, power_2, bits in sorted(level.values(), key=lambda item: item[2]):
        if _accepts(nfa_1, power_1) != _accepts(nfa_2, power_2):
            return _DecisionReport(
                relation=_Relation.p_equiv,
                verdict=False,
                witness=_LengthWitness(int(bits, 2)),
                stats=stats,
            )
    return _DecisionReport(relation=_Relation.p_equiv, verdict=True, stats=stats)
