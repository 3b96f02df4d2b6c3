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
"""Resolution of command line inputs and output files."""

import json as _json
from dataclasses import dataclass as _dataclass
from pathlib import Path as _Path

from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.automata.io import load_automaton as _load_automaton
from almosteq.automata.nfa import Nfa as _Nfa
from almosteq.core.alphabet import Alphabet as _Alphabet
from almosteq.core.errors import AlphabetError as _AlphabetError
from almosteq.core.errors import MalformedInputError as _MalformedInputError
from almosteq.regex.ast import RegexAst as _RegexAst
from almosteq.regex.parser import parse as _parse


@_dataclass(frozen=True)
class InputDescriptor:
    """A language given on the command line.

    Attributes:
        kind: One of `re`, `nfa` and `dfa`.
        value: The regular expression text or the path of the automaton file.
    """

    kind: str
    value: str

    def load(self) -> "str | _Nfa | _Dfa":
        """Return the regex text or the loaded automaton."""
        if self.kind == "re":
            return self.value
        automaton = _load_automaton(self.value)
        if self.kind == "dfa" and not isinstance(automaton, _Dfa):
            raise _MalformedInputError(
                f"The file {self.value} does not describe a total deterministic "
                "automaton"
            )
        return automaton


def resolve_alphabet(
    alphabet: "str | None", languages: "list[str | _Nfa | _Dfa]"
) -> _Alphabet:
    """Determine the alphabet of a query.

    The alphabet given on the command line wins. Otherwise the alphabet of
    the first automaton is used, all automata have to agree with it.
    """
    automata = [language for language in languages if not isinstance(language, str)]
    if alphabet is not None:
        resolved = _Alphabet.from_string(alphabet)
    elif automata:
        resolved = automata[0].alphabet
    else:
        raise _AlphabetError("A regular expression needs --alphabet")
    for automaton in automata:
        resolved.check_same(automaton.alphabet)
    return resolved


def resolve_languages(
    descriptors: "list[InputDescriptor]", alphabet: "str | None"
) -> tuple[list["_RegexAst | _Nfa | _Dfa"], _Alphabet]:
    """Load the inputs of a query and parse regular expressions with the
    common alphabet."""
    languages = [descriptor.load() for descriptor in descriptors]
    resolved = resolve_alphabet(alphabet, languages)
    return [
        _parse(language, resolved) if isinstance(language, str) else language
        for language in languages
    ], resolved


def write_json(data: dict, path: "_Path | str") -> None:
    """Write a dictionary as JSON file."""
    with open(path, "w") as json_file:
        _json.dump(data, json_file, indent=2)
        json_file.write("\n")
