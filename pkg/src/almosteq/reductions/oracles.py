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
"""Independent ground truth for the reductions.

None of these functions uses automata or regular expressions.
"""

import itertools as _itertools
import warnings as _warnings
from collections import deque as _deque
from collections.abc import Sequence as _Sequence

from almosteq.core.conf import AlmostEqWarning as _AlmostEqWarning
from almosteq.reductions.instances import Cnf3 as _Cnf3
from almosteq.reductions.instances import Digraph as _Digraph
from almosteq.reductions.instances import TmSpec as _TmSpec
from almosteq.reductions.instances import tm_word as _tm_word
from almosteq.reductions.turing_machine import SEPARATOR as _SEPARATOR
from almosteq.reductions.turing_machine import Configuration as _Configuration
from almosteq.reductions.turing_machine import head_symbol as _head_symbol
from almosteq.reductions.turing_machine import (
    initial_configuration as _initial_configuration,
)
from almosteq.reductions.turing_machine import successors as _successors


def bfs_reachable(graph: _Digraph, source: int = 1, target: int | None = None) -> bool:
    """Check if the target (default: node n) is reachable from the source."""
    target = graph.n if target is None else target
    visited = {source}
    queue = _deque([source])
    while queue:
        node = queue.popleft()
        if node == target:
            return True
        for successor in graph.successors(node):
            if successor not in visited:
                visited.add(successor)
                queue.append(successor)
    return False


def accepting_run(
    machine: _TmSpec, word: "_Sequence[str] | str"
) -> list[_Configuration] | None:
    """Search the configuration graph of a machine on an input.

    The graph is finite since the head stays on the input cells; moves that
    would leave the tape are blocked.

    Returns:
        The shortest sequence of configurations from the initial one to an
        accepting one, None if the machine rejects.
    """
    start = _initial_configuration(machine, _tm_word(word, machine))
    parents: dict[_Configuration, _Configuration | None] = {start: None}
    queue = _deque([start])
    blocked_any = False
    found = None
    while queue:
        configuration = queue.popleft()
        if configuration.state == machine.accepting:
            found = configuration
            break
        next_configurations, blocked = _successors(machine, configuration)
        blocked_any = blocked_any or blocked
        for successor in next_configurations:
            if successor not in parents:
                parents[successor] = configuration
                queue.append(successor)

    if blocked_any:
        _warnings.warn(
            "Moves that would leave the tape were blocked during the simulation",
            _AlmostEqWarning,
        )
    if found is None:
        return None
    run = [found]
    while parents[run[-1]] is not None:
        run.append(parents[run[-1]])
    return run[::-1]


def simulate_tm(machine: _TmSpec, word: "_Sequence[str] | str") -> bool:
    """Check if the machine accepts the input."""
    return accepting_run(machine, word) is not None


def satisfying_assignment(formula: _Cnf3) -> dict[int, bool] | None:
    """Try all 2^k assignments, return the first satisfying one."""
    variables = range(1, formula.variable_count + 1)
    for values in _itertools.product((False, True), repeat=formula.variable_count):
        assignment = dict(zip(variables, values))
        if formula.is_satisfied_by(assignment):
            return assignment
    return None


def brute_sat(formula: _Cnf3) -> bool:
    """Check if the formula is satisfiable."""
    return satisfying_assignment(formula) is not None


def decode_run(
    machine: _TmSpec, word: "_Sequence[str] | str", run_word: _Sequence[str]
) -> bool:
    """Check if a run word is an accepting run of the machine on the input.

    The run word has to consist of separated configurations, starting with
    the initial one, each following from the previous by a move, up to and
    including the first accepting head symbol. The rest of the run word is
    arbitrary.
    """
    cells = _tm_word(word, machine)
    accepting_heads = {
        _head_symbol(machine.accepting, symbol) for symbol in machine.tape_alphabet
    }
    end = next(
        (i for i, symbol in enumerate(run_word) if symbol in accepting_heads), None
    )
    if end is None:
        return False
    prefix = tuple(run_word[: end + 1])

    block = len(cells) + 1
    if any(prefix[i] != _SEPARATOR for i in range(0, len(prefix), block)):
        return False
    chunks = [prefix[i + 1 : i + block] for i in range(0, len(prefix), block)]

    current = _initial_configuration(machine, cells)
    candidates = [current]
    for index, chunk in enumerate(chunks):
        if index > 0:
            candidates, _ = _successors(machine, current)
        if index == len(chunks) - 1:
            return any(c.symbols()[: len(chunk)] == chunk for c in candidates)
        matches = [c for c in candidates if c.symbols() == chunk]
        if not matches:
            return False
        current = matches[0]
    return False
