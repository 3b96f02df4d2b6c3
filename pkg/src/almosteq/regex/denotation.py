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
"""Direct evaluation of the denotation of a regular expression.

This is deliberately independent of the automata code: it decides membership
of a word by dynamic programming over the spans of the word.
"""

from collections.abc import Sequence as _Sequence

from almosteq.regex.ast import Concat as _Concat
from almosteq.regex.ast import Empty as _Empty
from almosteq.regex.ast import Epsilon as _Epsilon
from almosteq.regex.ast import Literal as _Literal
from almosteq.regex.ast import RegexAst as _RegexAst
from almosteq.regex.ast import Star as _Star
from almosteq.regex.ast import Union as _Union


def _spans(node: _RegexAst, word: _Sequence[str], children: list) -> set:
    """Return the set of spans (i, j) such that word[i:j] is in L(node)."""
    n = len(word)
    if isinstance(node, _Empty):
        return set()
    elif isinstance(node, _Epsilon):
        return {(i, i) for i in range(n + 1)}
    elif isinstance(node, _Literal):
        return {(i, i + 1) for i in range(n) if word[i] == node.symbol}
    elif isinstance(node, _Union):
        return children[0] | children[1]
    elif isinstance(node, _Concat):
        left, right = children
        starts: dict[int, list[int]] = {}
        for k, j in right:
            starts.setdefault(k, []).append(j)
        return {(i, j) for i, k in left for j in starts.get(k, ())}
    elif isinstance(node, _Star):
        spans = {(i, i) for i in range(n + 1)}
        frontier = set(spans)
        while frontier:
            new = {
                (i, j)
                for i, k in frontier
                for k2, j in children[0]
                if k == k2 and (i, j) not in spans
            }
            spans |= new
            frontier = new
        return spans
    raise TypeError(f"Got unexpected regex node {type(node)}")


def matches(ast: _RegexAst, word: _Sequence[str]) -> bool:
    """Check if the word is in the language of the expression."""
    word = tuple(word)
    spans: dict[int, set] = {}
    for node in ast.iter_postorder():
        children = [spans[id(child)] for child in node.children()]
        spans[id(node)] = _spans(node, word, children)
    return (0, len(word)) in spans[id(ast)]
