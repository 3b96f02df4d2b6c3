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
"""Read and write automata in the JSON automaton format.

Format::

    {
      "alphabet": ["a", "b"],
      "states": 2,
      "initial": 0,
      "accepting": [1],
      "transitions": [{"from": 0, "symbol": "a", "to": [1]}, ...]
    }

An automaton in which every `to` list has exactly one element and every
(state, symbol) pair is listed is loaded as a DFA, everything else as an NFA.
"""

import json as _json
from pathlib import Path as _Path

import yaml as _yaml

from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.automata.nfa import Nfa as _Nfa
from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.errors import AlphabetError as _AlphabetError
from almosteq.core.errors import MalformedInputError as _MalformedInputError
from almosteq.core.errors import UndeclaredSymbolError as _UndeclaredSymbolError

_REQUIRED_KEYS = ("alphabet", "states", "initial", "accepting", "transitions")


def automaton_to_dict(automaton: "_Nfa | _Dfa") -> dict:
    """Return the dictionary representation of an automaton."""
    if isinstance(automaton, _Dfa):
        transitions = [
            {"from": state, "symbol": symbol, "to": [int(target)]}
            for state, row in enumerate(automaton.table)
            for symbol, target in zip(automaton.alphabet, row)
        ]
    else:
        transitions = [
            {"from": state, "symbol": symbol, "to": sorted(targets)}
            for state, symbol, targets in automaton.iter_transitions()
        ]
    return {
        "alphabet": list(automaton.alphabet),
        "states": automaton.state_count,
        "initial": automaton.initial,
        "accepting": sorted(automaton.accepting),
        "transitions": transitions,
    }


def automaton_from_dict(data: dict) -> "_Nfa | _Dfa":
    """Create an automaton from its dictionary representation.

    Returns:
        A `Dfa` if the transitions are deterministic and total, a `Nfa`
        otherwise.
    """
    if not isinstance(data, dict):
        raise _MalformedInputError("An automaton description has to be a mapping")
    missing = [key for key in _REQUIRED_KEYS if key not in data]
    if missing:
        raise _MalformedInputError(f"Automaton description misses the keys {missing}")

    try:
        alphabet = _Alphabet(tuple(str(symbol) for symbol in data["alphabet"]))
        transitions: dict[tuple[int, str], set[int]] = {}
        for item in data["transitions"]:
            key = (item["from"], str(item["symbol"]))
            transitions.setdefault(key, set()).update(item["to"])
        nfa = _Nfa(
            alphabet, data["states"], data["initial"], transitions, data["accepting"]
        )
    except (KeyError, TypeError) as error:
        raise _MalformedInputError(f"Invalid automaton description: {error}") from None
    except (_AlphabetError, _UndeclaredSymbolError) as error:
        raise _MalformedInputError(f"Invalid automaton description: {error}") from None

    if nfa.is_total_deterministic():
        return _Dfa(
            alphabet,
            [[next(iter(targets)) for targets in row] for row in nfa.table],
            nfa.initial,
            nfa.accepting,
        )
    return nfa


def load_automaton(path: "_Path | str") -> "_Nfa | _Dfa":
    """Load an automaton from a JSON (or YAML) file."""
    with open(path, "r") as automaton_file:
        try:
            data = _yaml.safe_load(automaton_file)
        except _yaml.YAMLError as error:
            raise _MalformedInputError(
                f"Unreadable automaton file {path}: {error}"
            ) from None
    return automaton_from_dict(data)


def dump_automaton(automaton: "_Nfa | _Dfa", path: "_Path | str") -> None:
    """Write an automaton to a JSON file."""
    with open(path, "w") as automaton_file:
        _json.dump(automaton_to_dict(automaton), automaton_file, indent=2)
        automaton_file.write("\n")
