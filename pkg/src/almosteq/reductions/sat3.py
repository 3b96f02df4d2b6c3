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
"""Reduction of 3SAT to the universality of unary regular expressions.

A length i encodes the assignment x_k = True if i = 1 (mod p_k) and
x_k = False if i = 0 (mod p_k), where p_k is the k-th prime. For every
clause the expression contains all lengths whose residues modulo the primes
of the clause falsify each literal. A length that is not in the expression
therefore encodes a satisfying assignment, and every satisfying assignment
is encoded by such a length (Chinese remainder theorem). The formula is
unsatisfiable if and only if the expression denotes 0*.
"""

import math as _math

from almosteq.core.conf import aeq as _aeq
from almosteq.core.errors import ResourceLimitError as _ResourceLimitError
from almosteq.reductions.instances import Cnf3 as _Cnf3
from almosteq.regex.ast import Concat as _Concat
from almosteq.regex.ast import Epsilon as _Epsilon
from almosteq.regex.ast import Literal as _Literal
from almosteq.regex.ast import RegexAst as _RegexAst
from almosteq.regex.ast import Star as _Star
from almosteq.regex.ast import Union as _Union
from almosteq.regex.ast import power as _power
from almosteq.regex.ast import union_all as _union_all

UNARY_SYMBOL = "0"


def first_primes(count: int) -> list[int]:
    """The first `count` prime numbers, starting with 2."""
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p != 0 for p in primes if p * p <= candidate):
            primes.append(candidate)
        candidate += 1
    return primes


def literal_satisfied(literal: int, length: int, primes: list[int]) -> bool:
    """Check if the assignment encoded by a length satisfies a literal."""
    residue = length % primes[abs(literal) - 1]
    return residue == 1 if literal > 0 else residue == 0


def _lengths_expression(lengths: list[int]) -> _RegexAst:
    """Expression denoting exactly the words 0^c for the sorted lengths c.

    The lengths share their prefixes: 0^c1 (1 | 0^(c2-c1) (1 | ...)), so
    the size is linear in the largest length.
    """
    symbol = _Literal(UNARY_SYMBOL)
    expression: _RegexAst = _Epsilon()
    for shorter, longer in reversed(list(zip(lengths, lengths[1:]))):
        step = _power(symbol, longer - shorter)
        expression = _Union(_Epsilon(), _Concat(step, expression))
    if lengths[0] > 0:
        expression = _Concat(_power(symbol, lengths[0]), expression)
    return expression


def clause_residues(
    clause: tuple[int, ...], primes: list[int]
) -> tuple[int, list[int]]:
    """Modulus of a clause and the residues that falsify all of its literals.

    Returns:
        The product P of the distinct primes of the clause and the sorted
        residues c < P for which no literal is satisfied.
    """
    modulus = _math.prod({primes[abs(literal) - 1] for literal in clause})
    if modulus > _aeq.max_prime_product:
        raise _ResourceLimitError(
            f"The prime product {modulus} of the clause {list(clause)} exceeds the "
            f"cap {_aeq.max_prime_product} (see `aeq.max_prime_product`)"
        )
    residues = [
        c
        for c in range(modulus)
        if not any(literal_satisfied(literal, c, primes) for literal in clause)
    ]
    return modulus, residues


def sat3_to_unary_regex(formula: _Cnf3) -> _RegexAst:
    """Create the unary expression over the alphabet `0` of a formula.

    The formula is unsatisfiable if and only if the expression denotes 0*.
    """
    primes = first_primes(formula.variable_count)
    symbol = _Literal(UNARY_SYMBOL)
    clause_expressions = []
    for clause in formula.clauses:
        modulus, residues = clause_residues(clause, primes)
        if not residues:
            continue
        clause_expressions.append(
            _Concat(_lengths_expression(residues), _Star(_power(symbol, modulus)))
        )
    return _union_all(clause_expressions)
