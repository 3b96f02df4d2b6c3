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
"""Results of equivalence and zero-one queries."""

import json as _json
from dataclasses import dataclass as _dataclass
from dataclasses import field as _field
from fractions import Fraction as _Fraction
from typing import Any as _Any

from almosteq.analysis.predicates import MuWitness as _MuWitness
from almosteq.analysis.predicates import PumpWitness as _PumpWitness
from almosteq.core.conf import Relation as _Relation
from almosteq.core.conf import ZeroOneSide as _ZeroOneSide


@_dataclass(frozen=True)
class LengthWitness:
    """A word length n such that 0^n distinguishes two unary languages."""

    length: int

    @property
    def bits(self) -> str:
        """Binary representation of the length."""
        return format(self.length, "b")

    def to_dict(self) -> dict:
        return {"n": self.length, "bits": self.bits}


@_dataclass(frozen=True)
class DecisionReport:
    """Verdict of a query with a witness that can be checked independently.

    Attributes:
        relation: The decided relation.
        verdict: True if the relation holds.
        witness: For a false verdict: a distinguishing word (equal, e_equiv),
            a `MuWitness` on the XOR automaton (p_equiv), a `PumpWitness`
            (f_equiv) or a `LengthWitness` (unary p_equiv). For a true
            zero-one verdict the `MuWitness` of the full side, if any.
        side: For zero-one queries, the disjunct that holds.
        stats: Sizes of intermediate automata and other statistics.
    """

    relation: _Relation
    verdict: bool
    witness: _Any = None
    side: _ZeroOneSide | None = None
    stats: dict = _field(default_factory=dict)

    def to_dict(self) -> dict:
        """Return a JSON serializable dictionary."""
        data = {
            "relation": self.relation.cli_name,
            "verdict": self.verdict,
            "witness": _witness_to_json(self.witness),
            "stats": {key: _value_to_json(value) for key, value in self.stats.items()},
        }
        if self.relation is _Relation.zero_one:
            data["side"] = None if self.side is None else self.side.name
        return data

    def to_json(self, **kwargs) -> str:
        """Return the report as JSON text."""
        return _json.dumps(self.to_dict(), **kwargs)


def _witness_to_json(witness: _Any) -> _Any:
    """Convert a witness to JSON compatible data."""
    if witness is None:
        return None
    elif isinstance(witness, (_MuWitness, _PumpWitness, LengthWitness)):
        return witness.to_dict()
    elif isinstance(witness, tuple):
        return {"word": list(witness)}
    raise TypeError(f"Got unexpected witness type {type(witness)}")


def _value_to_json(value: _Any) -> _Any:
    """Convert a statistics value to JSON compatible data."""
    if isinstance(value, _Fraction):
        return str(value)
    return value
