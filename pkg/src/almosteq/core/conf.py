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
"""This module defines the global object that holds the resource caps and
enums of AlmostEq."""

from enum import Enum as _Enum
from enum import auto as _auto

from almosteq.utils.environment import get_env_int as _get_env_int


class AlmostEqWarning(UserWarning):
    """Warning category for non-fatal conditions detected by AlmostEq."""


class Relation(_Enum):
    """Enum for the relations a decision report can be about."""

    equal = _auto()
    p_equiv = _auto()
    f_equiv = _auto()
    e_equiv = _auto()
    zero_one = _auto()

    @classmethod
    def from_cli_name(cls, name: str) -> "Relation":
        """Return the relation for a command line name like `p-equiv`.

        Args:
            name: Relation name, dashes and underscores are interchangeable.

        Returns:
            The matching relation.
        """
        try:
            return cls[name.replace("-", "_")]
        except KeyError:
            raise ValueError(f"Got unexpected relation: {name}") from None

    @property
    def cli_name(self) -> str:
        """Name of this relation in JSON reports."""
        return self.name


class ZeroOneSide(_Enum):
    """Enum for the disjuncts of the zero-one problem."""

    almost_empty = _auto()
    almost_full = _auto()


class Direction(_Enum):
    """Enum for head movements of a Turing machine."""

    left = _auto()
    right = _auto()

    @classmethod
    def from_letter(cls, letter: str) -> "Direction":
        """Convert `L`/`R` to a direction."""
        if letter.upper() == "L":
            return cls.left
        elif letter.upper() == "R":
            return cls.right
        raise ValueError(f"Got unexpected head direction: {letter}")

    @property
    def letter(self) -> str:
        """The letter `L` or `R` for this direction."""
        return "L" if self is Direction.left else "R"


class AlmostEq(object):
    """A global object that stores options for the whole AlmostEq application."""

    def __init__(self):
        self.set_default_values()
        self.relation = Relation
        self.zero_one_side = ZeroOneSide
        self.direction = Direction

    def set_default_values(self):
        """Set the configuration to the default values.

        Every cap can be overridden by an environment variable with the
        prefix `ALMOSTEQ_`.
        """
        # Number of subsets the powerset construction may create.
        self.max_subsets = _get_env_int("ALMOSTEQ_MAX_SUBSETS", 2**20)

        # Largest horizon for density profiles.
        self.max_horizon = _get_env_int("ALMOSTEQ_MAX_HORIZON", 2000)

        # Largest number of words |A|^n the brute force oracle enumerates.
        self.max_enumeration = _get_env_int("ALMOSTEQ_MAX_ENUMERATION", 10**7)

        # Largest candidate period of the residue probe.
        self.max_period = _get_env_int("ALMOSTEQ_MAX_PERIOD", 64)

        # Number of samples per residue class to measure the oscillation.
        self.residue_tail = 4

        # Largest |Q1| + |Q2| for the unary window algorithm.
        self.max_unary_states = _get_env_int("ALMOSTEQ_MAX_UNARY_STATES", 20)

        # Largest product of the primes of a single clause in the 3SAT reduction.
        self.max_prime_product = _get_env_int("ALMOSTEQ_MAX_PRIME_PRODUCT", 10**4)


aeq = AlmostEq()
