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
"""Check that all Python imports within the provided files follow the import
style of the package: every import has an alias starting with `_`, internal
imports are aliased with `_` + their name and nothing private is imported from
other packages."""

import ast as _ast
import sys as _sys
from dataclasses import dataclass as _dataclass
from pathlib import Path as _Path

PACKAGE = "almosteq"


@_dataclass
class Error:
    """An import that violates the style."""

    filename: str
    message: str
    line_nr: int | None = None
    column_nr: int | None = None

    def __str__(self) -> str:
        if self.line_nr is None:
            return f"{self.filename}: {self.message}"
        return f"{self.filename}:{self.line_nr}:{self.column_nr}: {self.message}"


def _is_internal(module: str | None) -> bool:
    return module is not None and (
        module == PACKAGE or module.startswith(PACKAGE + ".")
    )


class ImportChecker(_ast.NodeVisitor):
    """Collect the style violations of the imports of one file."""

    def __init__(self, filename: str) -> None:
        self.errors: list[Error] = []
        self.filename = filename

    def _error(self, node: _ast.AST, message: str) -> None:
        self.errors.append(Error(self.filename, message, node.lineno, node.col_offset))

    def visit_Import(self, node: _ast.Import) -> None:
        for alias in node.names:
            if alias.asname is None:
                self._error(node, f"Import '{alias.name}' has no alias!")
            elif not alias.asname.startswith("_"):
                self._error(
                    node,
                    f"Import '{alias.name}' has alias '{alias.asname}' that "
                    "doesn't start with '_'!",
                )
        self.generic_visit(node)

    def visit_ImportFrom(self, node: _ast.ImportFrom) -> None:
        from_module = node.module or f"relative import (level {node.level})"
        internal = _is_internal(node.module)
        for alias in node.names:
            if alias.name == "*":
                self._error(node, "Wildcard imports are not allowed!")
            elif not internal and alias.name.startswith("_"):
                self._error(
                    node,
                    f"Import of private functionality '{alias.name}' from "
                    f"'{from_module}' is not allowed!",
                )
            elif alias.asname is None:
                self._error(
                    node, f"Import '{alias.name}' from '{from_module}' has no alias!"
                )
            elif internal and alias.asname != "_" + alias.name:
                self._error(
                    node,
                    f"Internal import '{alias.name}' from '{from_module}' has "
                    f"alias '{alias.asname}', it should be '_{alias.name}'!",
                )
            elif not alias.asname.startswith("_"):
                self._error(
                    node,
                    f"External import '{alias.name}' from '{from_module}' has "
                    f"alias '{alias.asname}', it should be '_{alias.asname}'!",
                )
        self.generic_visit(node)


def check_source(source: str, filename: str = "<string>") -> list[Error]:
    """Check the imports of Python source code."""
    checker = ImportChecker(filename)
    checker.visit(_ast.parse(source, filename=filename))
    return checker.errors


def check_file(filename: "str | _Path") -> list[Error]:
    """Check the imports of a Python file."""
    with open(filename, "r") as file:
        return check_source(file.read(), str(filename))


def main() -> None:
    """Check all Python files given on the command line."""
    errors: list[Error] = []
    for filename in _sys.argv[1:]:
        if not _Path(filename).exists():
            errors.append(Error(filename, "File not found!"))
            continue
        errors.extend(check_file(filename))

    if errors:
        print("Found imports which do not align with our coding style:\n")
        for error in errors:
            print(f"    * {error}\n")
        print("See the section on coding guidelines in README.md.")
        _sys.exit(1)
    _sys.exit(0)


if __name__ == "__main__":
    main()
