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
"""Exact densities of regular languages up to a horizon."""

from dataclasses import dataclass as _dataclass
from fractions import Fraction as _Fraction

from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.core.conf import aeq as _aeq
from almosteq.core.errors import ResourceLimitError as _ResourceLimitError
from almosteq.density.counting import count_sequence as _count_sequence
from almosteq.density.residue import ResidueEstimate as _ResidueEstimate
from almosteq.density.residue import residue_probe as _residue_probe


@_dataclass(frozen=True)
class DensityProfile:
    """Exact densities of a language for all lengths 0, ..., horizon.

    Attributes:
        alphabet_size: Size of the alphabet.
        counts: Number of accepted words of length n.
        mu: Fraction of words of length n in the language.
        mu_star: Fraction of words of length < n in the language (0 for n=0).
        delta: Mean of mu over the lengths < n (0 for n=0).
        residues: Optional estimates of the limits along residue classes.
    """

    alphabet_size: int
    counts: tuple[int, ...]
    mu: tuple[_Fraction, ...]
    mu_star: tuple[_Fraction, ...]
    delta: tuple[_Fraction, ...]
    residues: _ResidueEstimate | None = None

    @property
    def horizon(self) -> int:
        """Largest length in this profile."""
        return len(self.counts) - 1


def check_horizon(horizon: int, max_horizon: int | None = None) -> None:
    """Raise an error if the horizon is invalid or too large."""
    cap = _aeq.max_horizon if max_horizon is None else max_horizon
    if horizon < 1:
        raise ValueError(f"The horizon has to be at least 1, got {horizon}")
    if horizon > cap:
        raise _ResourceLimitError(
            f"The horizon {horizon} exceeds the cap of {cap} "
            "(see `aeq.max_horizon` or --cap-horizon)"
        )


def profile(
    dfa: _Dfa,
    horizon: int,
    *,
    max_horizon: int | None = None,
    residues: bool = False,
) -> DensityProfile:
    """Compute the density profile of the language of a DFA.

    Args:
        dfa: The automaton.
        horizon: Largest word length.
        max_horizon: Cap on the horizon, defaults to `aeq.max_horizon`.
        residues: If the residue class estimates should be added.

    Returns:
        The profile with exact rational values.
    """
    check_horizon(horizon, max_horizon)
    size = len(dfa.alphabet)
    counts = _count_sequence(dfa, horizon)

    mu = []
    mu_star = []
    delta = []
    words_below = 0
    accepted_below = 0
    mu_sum = _Fraction(0)
    for n, count in enumerate(counts):
        if n == 0:
            mu_star.append(_Fraction(0))
            delta.append(_Fraction(0))
        else:
            mu_star.append(_Fraction(accepted_below, words_below))
            delta.append(mu_sum / n)
        mu.append(_Fraction(count, size**n))
        words_below += size**n
        accepted_below += count
        mu_sum += mu[-1]

    return DensityProfile(
        alphabet_size=size,
        counts=tuple(counts),
        mu=tuple(mu),
        mu_star=tuple(mu_star),
        delta=tuple(delta),
        residues=_residue_probe(dfa, horizon, mu=mu) if residues else None,
    )
