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
"""Command line interface of AlmostEq.

Machine readable results (JSON, CSV, regular expressions) are written to
stdout, summaries and diagnostics to stderr. `decide` and `oracle` exit
with 0 for a true and 1 for a false verdict, every error exits with 2.
"""

import argparse as _argparse
import json as _json
import logging as _logging
import sys as _sys
from pathlib import Path as _Path

from almosteq.automata.constructions import to_dfa as _to_dfa
from almosteq.automata.dfa import Dfa as _Dfa
from almosteq.automata.io import automaton_to_dict as _automaton_to_dict
from almosteq.automata.io import load_automaton as _load_automaton
from almosteq.core.conf import Relation as _Relation
from almosteq.density.density import profile as _profile
from almosteq.density.export import profile_to_dict as _profile_to_dict
from almosteq.density.export import write_profile_csv as _write_profile_csv
from almosteq.equivalence.decide import e_equiv as _e_equiv
from almosteq.equivalence.decide import equal as _equal
from almosteq.equivalence.decide import f_equiv as _f_equiv
from almosteq.equivalence.decide import p_equiv as _p_equiv
from almosteq.equivalence.decide import to_automaton as _to_automaton
from almosteq.equivalence.decide import zero_one as _zero_one
from almosteq.equivalence.unary import unary_p_equiv as _unary_p_equiv
from almosteq.harness.brute_force import brute_density as _brute_density
from almosteq.harness.io import InputDescriptor as _InputDescriptor
from almosteq.harness.io import resolve_languages as _resolve_languages
from almosteq.harness.io import write_json as _write_json
from almosteq.reductions.gap import gap_to_dfa as _gap_to_dfa
from almosteq.reductions.gap import gap_to_dfa_zero_one as _gap_to_dfa_zero_one
from almosteq.reductions.instances import load_cnf as _load_cnf
from almosteq.reductions.instances import load_digraph as _load_digraph
from almosteq.reductions.instances import load_tm as _load_tm
from almosteq.reductions.oracles import bfs_reachable as _bfs_reachable
from almosteq.reductions.oracles import brute_sat as _brute_sat
from almosteq.reductions.oracles import simulate_tm as _simulate_tm
from almosteq.reductions.sat3 import UNARY_SYMBOL as _UNARY_SYMBOL
from almosteq.reductions.sat3 import sat3_to_unary_regex as _sat3_to_unary_regex
from almosteq.reductions.turing_machine import composite_alphabet as _composite_alphabet
from almosteq.reductions.turing_machine import tm_to_regex as _tm_to_regex
from almosteq.regex.ast import to_dict as _to_dict
from almosteq.regex.ast import to_text as _to_text
from almosteq.regex.parser import parse as _parse

_logger = _logging.getLogger("almosteq")

RELATIONS = ("equal", "p-equiv", "f-equiv", "e-equiv", "zero-one", "unary-p-equiv")

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def _add_language_arguments(parser: _argparse.ArgumentParser, suffix: str = "") -> None:
    """Add the mutually exclusive `--re`, `--nfa` and `--dfa` options."""
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(f"--re{suffix}", help="Regular expression.")
    group.add_argument(f"--nfa{suffix}", help="JSON file with an NFA.")
    group.add_argument(f"--dfa{suffix}", help="JSON file with a DFA.")


def _descriptor(args: _argparse.Namespace, suffix: str = "") -> _InputDescriptor:
    """The language given with `--re`, `--nfa` or `--dfa` and a suffix."""
    for kind in ("re", "nfa", "dfa"):
        value = getattr(args, f"{kind}{suffix}")
        if value is not None:
            return _InputDescriptor(kind, value)
    raise ValueError("No input language given")


def _print_json(data: dict) -> None:
    print(_json.dumps(data, indent=2))


def _command_parse(args: _argparse.Namespace) -> int:
    ast = _parse(args.regex, args.alphabet)
    if args.format == "json":
        _print_json(_to_dict(ast))
    else:
        print(_to_text(ast))
    return EXIT_TRUE


def _command_convert(args: _argparse.Namespace) -> int:
    (language,), alphabet = _resolve_languages([_descriptor(args)], args.alphabet)
    automaton = _to_automaton(language, alphabet)
    if args.to == "dfa":
        automaton = _to_dfa(automaton, max_subsets=args.cap_states)
    elif isinstance(automaton, _Dfa):
        automaton = automaton.as_nfa()
    data = _automaton_to_dict(automaton)
    if args.output is None:
        _print_json(data)
    else:
        _write_json(data, args.output)
    _logger.info("Converted to %s with %d states", args.to, automaton.state_count)
    return EXIT_TRUE


def _command_decide(args: _argparse.Namespace) -> int:
    descriptors = [_descriptor(args, "1")]
    second_given = any(
        getattr(args, f"{kind}2") is not None for kind in ("re", "nfa", "dfa")
    )
    if args.relation == "zero-one":
        if second_given:
            raise ValueError(
                "zero-one takes a single language, drop --re2/--nfa2/--dfa2"
            )
    else:
        descriptors.append(_descriptor(args, "2"))
    languages, alphabet = _resolve_languages(descriptors, args.alphabet)
    options = {
        "alphabet": alphabet,
        "max_subsets": args.cap_states,
    }

    if args.relation == "zero-one":
        report = _zero_one(languages[0], **options)
    elif args.relation == "unary-p-equiv":
        report = _unary_p_equiv(
            *(_to_automaton(language, alphabet) for language in languages)
        )
    else:
        options["on_the_fly"] = args.on_the_fly
        relation = _Relation.from_cli_name(args.relation)
        if relation is _Relation.e_equiv:
            if args.e is None:
                raise ValueError("e-equiv needs the exception language --e")
            report = _e_equiv(*languages, _parse(args.e, alphabet), **options)
        else:
            decide = {
                _Relation.equal: _equal,
                _Relation.p_equiv: _p_equiv,
                _Relation.f_equiv: _f_equiv,
            }[relation]
            report = decide(*languages, **options)

    if args.format == "json":
        print(report.to_json(indent=2))
    else:
        print(f"{args.relation}: {str(report.verdict).lower()}")
    _logger.info(
        "%s: %s%s",
        args.relation,
        "holds" if report.verdict else "does not hold",
        "" if report.side is None else f" ({report.side.name})",
    )
    return EXIT_TRUE if report.verdict else EXIT_FALSE


def _command_density(args: _argparse.Namespace) -> int:
    (language,), alphabet = _resolve_languages([_descriptor(args)], args.alphabet)
    dfa = _to_dfa(_to_automaton(language, alphabet), max_subsets=args.cap_states)
    profile = _profile(
        dfa, args.horizon, max_horizon=args.cap_horizon, residues=args.residues
    )
    if args.format == "csv":
        _write_profile_csv(profile, _sys.stdout)
    elif args.format == "json":
        _print_json(_profile_to_dict(profile))
    else:
        for n in range(profile.horizon + 1):
            print(f"{n}\t{profile.counts[n]}\t{profile.mu[n]}")
    _logger.info("Density of the last length: %s", float(profile.mu[-1]))
    return EXIT_TRUE


def _command_reduce(args: _argparse.Namespace) -> int:
    output = _Path(args.output_dir)
    output.mkdir(parents=True, exist_ok=True)

    if args.problem in ("gap", "gap-zero-one"):
        graph = _load_digraph(args.input)
        build = _gap_to_dfa if args.problem == "gap" else _gap_to_dfa_zero_one
        _write_json(_automaton_to_dict(build(graph)), output / "instance.json")
        sidecar = {"oracle": "bfs", "reachable": _bfs_reachable(graph)}
    elif args.problem == "tm":
        if args.word is None:
            raise ValueError("The tm reduction needs the input --word")
        machine = _load_tm(args.input)
        ast = _tm_to_regex(machine, args.word)
        (output / "instance.re").write_text(_to_text(ast) + "\n")
        sidecar = {
            "oracle": "tm",
            "accepts": _simulate_tm(machine, args.word),
            "alphabet": list(_composite_alphabet(machine)),
        }
    else:
        formula = _load_cnf(args.input)
        ast = _sat3_to_unary_regex(formula)
        (output / "instance.re").write_text(_to_text(ast) + "\n")
        sidecar = {
            "oracle": "sat",
            "satisfiable": _brute_sat(formula),
            "alphabet": [_UNARY_SYMBOL],
        }
    _write_json(sidecar, output / "oracle.json")
    _logger.info("Wrote the %s instance to %s", args.problem, output)
    return EXIT_TRUE


def _command_oracle(args: _argparse.Namespace) -> int:
    if args.oracle != "brute-density" and args.input is None:
        raise ValueError(f"The {args.oracle} oracle needs the --input file")
    if args.oracle == "bfs":
        verdict = _bfs_reachable(_load_digraph(args.input))
    elif args.oracle == "tm":
        if args.word is None:
            raise ValueError("The tm oracle needs the input --word")
        verdict = _simulate_tm(_load_tm(args.input), args.word)
    elif args.oracle == "sat":
        verdict = _brute_sat(_load_cnf(args.input))
    else:
        if args.length is None:
            raise ValueError("brute-density needs the word --length")
        if (args.re is None) == (args.input is None):
            raise ValueError("brute-density needs exactly one of --re and --input")
        language = args.re if args.re is not None else _load_automaton(args.input)
        density = _brute_density(
            language,
            args.length,
            alphabet=args.alphabet,
            max_enumeration=args.cap_enumeration,
        )
        print(density)
        return EXIT_TRUE
    print(str(verdict).lower())
    return EXIT_TRUE if verdict else EXIT_FALSE


def build_parser() -> _argparse.ArgumentParser:
    """Create the argument parser with all subcommands."""
    parser = _argparse.ArgumentParser(
        prog="almosteq",
        description="Decide almost-equivalence relations of regular languages.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log debug information."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    parse_parser = subparsers.add_parser("parse", help="Parse and print a regex.")
    parse_parser.add_argument("--alphabet", required=True, help="Symbols, e.g. a1,a2")
    parse_parser.add_argument("--format", choices=("text", "json"), default="text")
    parse_parser.add_argument("regex")
    parse_parser.set_defaults(handler=_command_parse)

    convert_parser = subparsers.add_parser("convert", help="Convert to an automaton.")
    _add_language_arguments(convert_parser)
    convert_parser.add_argument("--alphabet")
    convert_parser.add_argument("--to", choices=("nfa", "dfa"), required=True)
    convert_parser.add_argument("-o", "--output", help="Output file, default stdout.")
    convert_parser.add_argument("--cap-states", type=int, default=None)
    convert_parser.set_defaults(handler=_command_convert)

    decide_parser = subparsers.add_parser("decide", help="Decide a relation.")
    decide_parser.add_argument("relation", choices=RELATIONS)
    decide_parser.add_argument("--alphabet")
    _add_language_arguments(decide_parser, "1")
    group = decide_parser.add_mutually_exclusive_group()
    group.add_argument("--re2", help="Regular expression.")
    group.add_argument("--nfa2", help="JSON file with an NFA.")
    group.add_argument("--dfa2", help="JSON file with a DFA.")
    decide_parser.add_argument("--e", help="Exception language of e-equiv.")
    decide_parser.add_argument("--cap-states", type=int, default=None)
    decide_parser.add_argument(
        "--on-the-fly", action="store_true", help="Determinize both NFAs together."
    )
    decide_parser.add_argument("--format", choices=("json", "text"), default="json")
    decide_parser.set_defaults(handler=_command_decide)

    density_parser = subparsers.add_parser("density", help="Exact density profile.")
    _add_language_arguments(density_parser)
    density_parser.add_argument("--alphabet")
    density_parser.add_argument("--horizon", type=int, required=True)
    density_parser.add_argument(
        "--residues", action="store_true", help="Add residue class estimates."
    )
    density_parser.add_argument("--cap-states", type=int, default=None)
    density_parser.add_argument(
        "--cap-horizon",
        type=int,
        default=None,
        help="Largest allowed horizon, defaults to aeq.max_horizon.",
    )
    density_parser.add_argument(
        "--format", choices=("csv", "json", "text"), default="csv"
    )
    density_parser.set_defaults(handler=_command_density)

    reduce_parser = subparsers.add_parser("reduce", help="Generate a hard instance.")
    reduce_parser.add_argument("problem", choices=("gap", "gap-zero-one", "tm", "sat3"))
    reduce_parser.add_argument("--input", required=True)
    reduce_parser.add_argument("--output-dir", required=True)
    reduce_parser.add_argument("--word", help="Input word of the Turing machine.")
    reduce_parser.set_defaults(handler=_command_reduce)

    oracle_parser = subparsers.add_parser("oracle", help="Run a reference oracle.")
    oracle_parser.add_argument("oracle", choices=("bfs", "tm", "sat", "brute-density"))
    oracle_parser.add_argument("--input")
    oracle_parser.add_argument("--word", help="Input word of the Turing machine.")
    oracle_parser.add_argument("--re", help="Regular expression for brute-density.")
    oracle_parser.add_argument("--alphabet")
    oracle_parser.add_argument("--length", type=int)
    oracle_parser.add_argument("--cap-enumeration", type=int, default=None)
    oracle_parser.set_defaults(handler=_command_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Run the command line interface and return the exit code."""
    args = build_parser().parse_args(argv)
    _logging.basicConfig(
        stream=_sys.stderr,
        format="almosteq: %(levelname)s: %(message)s",
        level=_logging.DEBUG if args.verbose else _logging.INFO,
        force=True,
    )
    try:
        return args.handler(args)
    except (ValueError, RuntimeError, OSError) as error:
        _logger.error("%s", error)
        return EXIT_ERROR


if __name__ == "__main__":
    _sys.exit(main())
