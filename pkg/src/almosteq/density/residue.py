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
"""Estimate the limits of the density along residue classes.

For a regular language there is a period a such that the density converges
along every residue class n = a k + b. The candidate period is taken from the
structure of the DFA: the least common multiple of the periods of the
reachable strongly connected components.
"""

import warnings as _warnings
from collections import deque as _deque
from collections.abc import Sequence as _Sequence
from dataclasses import dataclass as _dataclass
from fractions import Fraction as _Fraction
from math import gcd as _gcd
from math import lcm as _lcm

from almosteq.analysis.scc import sccs as _sccs
from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.core.conf import AlmostEqWarning as _AlmostEqWarning
from almosteq.core.conf import aeq as _aeq
from almosteq.density.counting import count_sequence as _count_sequence


@_dataclass(frozen=True)
class ResidueEstimate:
    """Estimated limits of the density along the residue classes modulo a
    period.

    Attributes:
        period: The (candidate) period.
        estimates: For each residue b the density at the largest length that
            is congruent to b.
        oscillation: For each residue b the difference between the largest
            and smallest density among the last samples of that class.
        structural: True if the period was derived from the automaton, False
            if it was detected from the density sequence.
    """

    period: int
    estimates: tuple[_Fraction, ...]
    oscillation: tuple[_Fraction, ...]
    structural: bool = True

    @property
    def max_oscillation(self) -> _Fraction:
        """Largest oscillation over all residue classes."""
        return max(self.oscillation)


def component_period(dfa: _Dfa, members: _Sequence[int]) -> int:
    """Period of a cyclic strongly connected component.

    The period is the greatest common divisor of all cycle lengths. It is
    computed from breadth first levels inside the component: every internal
    edge u -> v contributes level(u) + 1 - level(v).
    """
    member_set = set(members)
    start = members[0]
    level = {start: 0}
    queue = _deque([start])
    while queue:
        state = queue.popleft()
        for target in dfa.table[state].tolist():
            if target in member_set and target not in level:
                level[target] = level[state] + 1
                queue.append(target)

    period = 0
    for state in members:
        for target in dfa.table[state].tolist():
            if target in member_set:
                period = _gcd(period, level[state] + 1 - level[target])
    return period


def structural_period(dfa: _Dfa) -> int:
    """Least common multiple of the periods of all reachable cyclic
    components, 1 if there are none."""
    decomposition = _sccs(dfa)
    period = 1
    for members, cyclic in zip(decomposition.members, decomposition.is_cyclic):
        if cyclic:
            period = _lcm(period, component_period(dfa, members))
    return period


def _estimate(mu: _Sequence[_Fraction], period: int, tail: int) -> ResidueEstimate:
    """Residue estimates for a given period from the density sequence."""
    horizon = len(mu) - 1
    estimates = []
    oscillation = []
    for residue in range(period):
        last = horizon - (horizon - residue) % period
        samples = [mu[n] for n in range(last, -1, -period)][:tail]
        estimates.append(mu[last])
        oscillation.append(max(samples) - min(samples))
    return ResidueEstimate(
        period=period, estimates=tuple(estimates), oscillation=tuple(oscillation)
    )


def residue_probe(
    dfa: _Dfa,
    horizon: int,
    *,
    mu: _Sequence[_Fraction] | None = None,
    max_period: int | None = None,
) -> ResidueEstimate:
    """Estimate the limits of the density along residue classes.

    If the structural period exceeds the cap, the period is detected from
    the density sequence instead: the smallest period up to the cap with the
    smallest oscillation. This is reported with a warning and
    `structural=False`.

    Args:
        dfa: The automaton.
        horizon: Largest word length that is sampled.
        mu: The densities for the lengths 0, ..., horizon, if they are
            already known.
        max_period: Cap on the period, defaults to `aeq.max_period`.

    Returns:
        The estimates.
    """
    cap = _aeq.max_period if max_period is None else max_period
    tail = _aeq.residue_tail
    if mu is None:
        size = len(dfa.alphabet)
        mu = [
            _Fraction(count, size**n)
            for n, count in enumerate(_count_sequence(dfa, horizon))
        ]

    period = structural_period(dfa)
    if period <= cap:
        if horizon + 1 < tail * period:
            raise ValueError(
                f"The horizon {horizon} is too small for the period {period}, "
                f"at least {tail * period - 1} is required"
            )
        return _estimate(mu, period, tail)

    _warnings.warn(
        f"The structural period {period} exceeds the cap {cap}, "
        "the period is detected from the density sequence",
        _AlmostEqWarning,
    )
    candidates = [
        _estimate(mu, p, tail) for p in range(1, cap + 1) if horizon + 1 >= tail * p
    ]
    if not candidates:
        raise ValueError(f"The horizon {horizon} is too small to detect a period")
    best = min(candidates, key=lambda estimate: estimate.max_oscillation)
    return ResidueEstimate(
        period=best.period,
        estimates=best.estimates,
        oscillation=best.oscillation,
        structural=False,
    )
