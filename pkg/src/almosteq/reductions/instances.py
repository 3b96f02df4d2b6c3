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
"""Input types of the reduction generators: directed graphs, 3-CNF formulas
and linear bounded Turing machines."""

from collections.abc import Iterable as _Iterable
from collections.abc import Mapping as _Mapping
from dataclasses import dataclass as _dataclass
from dataclasses import field as _field
from pathlib import Path as _Path

import yaml as _yaml

from almosteq.core.conf import Direction as _Direction
from almosteq.core.errors import MalformedInputError as _MalformedInputError


@_dataclass(frozen=True)
class Digraph:
    """A directed graph on the nodes 1, ..., n."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise _MalformedInputError(f"A graph needs at least 2 nodes, got {self.n}")
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for edge in edges:
            if not all(1 <= node <= self.n for node in edge):
                raise _MalformedInputError(
                    f"Edge {edge} references a node outside of 1..{self.n}"
                )
        object.__setattr__(self, "edges", edges)

    def successors(self, node: int) -> list[int]:
        """Sorted successors of a node."""
        return sorted(j for i, j in self.edges if i == node)

    @classmethod
    def from_dict(cls, data: _Mapping) -> "Digraph":
        """Create a graph from `{"n": ..., "edges": [[1, 2], ...]}`."""
        try:
            return cls(data["n"], frozenset(tuple(edge) for edge in data["edges"]))
        except (KeyError, TypeError, ValueError) as error:
            raise _MalformedInputError(f"Invalid graph description: {error}") from None

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(edge) for edge in sorted(self.edges)]}


@_dataclass(frozen=True)
class Cnf3:
    """A formula in conjunctive normal form with exactly three literals per
    clause.

    Literals are non-zero integers as in the DIMACS format: `k` is the
    variable x_k and `-k` its negation.
    """

    variable_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        clauses = tuple(tuple(int(literal) for literal in c) for c in self.clauses)
        if len(clauses) == 0:
            raise _MalformedInputError("A formula needs at least one clause")
        for clause in clauses:
            if len(clause) != 3:
                raise _MalformedInputError(
                    f"Every clause needs exactly 3 literals, got {list(clause)}"
                )
            for literal in clause:
                if literal == 0 or abs(literal) > self.variable_count:
                    raise _MalformedInputError(
                        f"Literal {literal} is invalid for "
                        f"{self.variable_count} variables"
                    )
        object.__setattr__(self, "clauses", clauses)

    def is_satisfied_by(self, assignment: _Mapping[int, bool]) -> bool:
        """Evaluate the formula for an assignment variable -> value."""
        return all(
            any(assignment[abs(literal)] == (literal > 0) for literal in clause)
            for clause in self.clauses
        )

    @classmethod
    def from_dimacs(cls, text: str) -> "Cnf3":
        """Parse a formula in the DIMACS CNF format."""
        variable_count = None
        literals: list[int] = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("c") or line.startswith("%"):
                continue
            if line.startswith("p"):
                parts = line.split()
                if len(parts) != 4 or parts[1] != "cnf":
                    raise _MalformedInputError(f"Invalid problem line: {line!r}")
                variable_count = int(parts[2])
                continue
            try:
                literals.extend(int(token) for token in line.split())
            except ValueError:
                raise _MalformedInputError(f"Invalid clause line: {line!r}") from None
        if variable_count is None:
            raise _MalformedInputError("The DIMACS problem line is missing")

        clauses = []
        clause: list[int] = []
        for literal in literals:
            if literal == 0:
                clauses.append(tuple(clause))
                clause = []
            else:
                clause.append(literal)
        if clause:
            clauses.append(tuple(clause))
        return cls(variable_count, tuple(clauses))

    def to_dimacs(self) -> str:
        """Return the formula in the DIMACS CNF format."""
        lines = [f"p cnf {self.variable_count} {len(self.clauses)}"]
        lines.extend(
            " ".join(str(literal) for literal in clause) + " 0"
            for clause in self.clauses
        )
        return "\n".join(lines) + "\n"


Move = tuple[str, str, _Direction]


@_dataclass(frozen=True)
class TmSpec:
    """A nondeterministic Turing machine that works on the cells of its
    input.

    Attributes:
        states: The states.
        tape_alphabet: The tape symbols, including the blank.
        blank: The blank symbol.
        initial: The initial state.
        accepting: The accepting state.
        transitions: Map from (state, read symbol) to the set of moves
            (next state, written symbol, direction).
    """

    states: tuple[str, ...]
    tape_alphabet: tuple[str, ...]
    blank: str
    initial: str
    accepting: str
    transitions: _Mapping[tuple[str, str], frozenset[Move]] = _field(
        default_factory=dict
    )

    def __post_init__(self):
        states = tuple(self.states)
        tape = tuple(self.tape_alphabet)
        for name, items in (("state", states), ("tape symbol", tape)):
            if len(set(items)) != len(items) or len(items) == 0:
                raise _MalformedInputError(
                    f"The {name}s have to be unique and non-empty"
                )
            for item in items:
                if not isinstance(item, str) or item == "" or set(item) & set(":'#"):
                    raise _MalformedInputError(
                        f"Invalid {name} {item!r}, it must not contain "
                        "':', \"'\" or '#'"
                    )
        if self.blank not in tape:
            raise _MalformedInputError(f"The blank {self.blank!r} is no tape symbol")
        for state in (self.initial, self.accepting):
            if state not in states:
                raise _MalformedInputError(f"Unknown state {state!r}")

        transitions = {}
        for (state, symbol), moves in self.transitions.items():
            if state not in states or symbol not in tape:
                raise _MalformedInputError(f"Invalid transition key {(state, symbol)}")
            checked = set()
            for next_state, written, direction in moves:
                if next_state not in states or written not in tape:
                    raise _MalformedInputError(
                        f"Invalid move {(next_state, written, direction)}"
                    )
                if not isinstance(direction, _Direction):
                    direction = _Direction.from_letter(direction)
                checked.add((next_state, written, direction))
            transitions[(state, symbol)] = frozenset(checked)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "tape_alphabet", tape)
        object.__setattr__(self, "transitions", transitions)

    def moves(self, state: str, symbol: str) -> frozenset[Move]:
        """The possible moves in a state reading a symbol."""
        return self.transitions.get((state, symbol), frozenset())

    def is_accepting_absorbing(self) -> bool:
        """True if no move leaves the accepting state."""
        return all(
            next_state == self.accepting
            for (state, _), moves in self.transitions.items()
            if state == self.accepting
            for next_state, _, _ in moves
        )

    @classmethod
    def from_dict(cls, data: _Mapping) -> "TmSpec":
        """Create a machine from its dictionary representation::

        {"states": [...], "tape_alphabet": [...], "blank": "_",
         "initial": "q0", "accepting": "qa",
         "transitions": [{"state": "q0", "read": "a", "next": "qa",
                          "write": "a", "move": "R"}, ...]}
        """
        try:
            transitions: dict[tuple[str, str], set[Move]] = {}
            for item in data.get("transitions", []):
                transitions.setdefault((item["state"], item["read"]), set()).add(
                    (item["next"], item["write"], _Direction.from_letter(item["move"]))
                )
            return cls(
                states=tuple(data["states"]),
                tape_alphabet=tuple(data["tape_alphabet"]),
                blank=data["blank"],
                initial=data["initial"],
                accepting=data["accepting"],
                transitions={
                    key: frozenset(value) for key, value in transitions.items()
                },
            )
        except (KeyError, TypeError, ValueError) as error:
            if isinstance(error, _MalformedInputError):
                raise
            raise _MalformedInputError(
                f"Invalid machine description: {error}"
            ) from None

    def to_dict(self) -> dict:
        return {
            "states": list(self.states),
            "tape_alphabet": list(self.tape_alphabet),
            "blank": self.blank,
            "initial": self.initial,
            "accepting": self.accepting,
            "transitions": [
                {
                    "state": state,
                    "read": symbol,
                    "next": next_state,
                    "write": written,
                    "move": direction.letter,
                }
                for (state, symbol), moves in sorted(self.transitions.items())
                for next_state, written, direction in sorted(
                    moves, key=lambda move: (move[0], move[1], move[2].letter)
                )
            ],
        }


def load_description(path: "_Path | str") -> dict:
    """Load a JSON or YAML description file."""
    with open(path, "r") as description_file:
        try:
            data = _yaml.safe_load(description_file)
        except _yaml.YAMLError as error:
            raise _MalformedInputError(
                f"Unreadable description file {path}: {error}"
            ) from None
    if not isinstance(data, dict):
        raise _MalformedInputError(f"The file {path} does not contain a mapping")
    return data


def load_digraph(path: "_Path | str") -> Digraph:
    """Load a graph from a JSON file."""
    return Digraph.from_dict(load_description(path))


def load_tm(path: "_Path | str") -> TmSpec:
    """Load a Turing machine from a JSON file."""
    return TmSpec.from_dict(load_description(path))


def load_cnf(path: "_Path | str") -> Cnf3:
    """Load a formula from a DIMACS file."""
    with open(path, "r") as cnf_file:
        return Cnf3.from_dimacs(cnf_file.read())


def tm_word(symbols: "_Iterable[str] | str", machine: TmSpec) -> tuple[str, ...]:
    """Convert an input word for a machine to a tuple of tape symbols."""
    word = tuple(symbols) if not isinstance(symbols, str) else None
    if word is None:
        if all(len(symbol) == 1 for symbol in machine.tape_alphabet):
            word = tuple(symbols)
        else:
            word = tuple(symbols.split())
    for symbol in word:
        if symbol not in machine.tape_alphabet:
            raise _MalformedInputError(f"Input symbol {symbol!r} is no tape symbol")
    return word
