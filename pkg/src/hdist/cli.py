"""Command line front end. ``run`` is the testable entry point; ``main`` wraps it."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .derivations import (
    TableError,
    extend_leibniz,
    kappa_squared,
    kappa_squared_generators,
    kristensen_kappa,
    parse_table,
    verify_derivation_property,
    verify_well_defined,
)
from .faces import check_face_compatibility, check_universality, check_wedge, obstruction_map
from .render import render_text, render_tikz
from .steenrod import GrammarError, SteenrodElement, admissible_basis, format_monomial

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: str


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        # --help lands here; surface it as a normal result
        raise _HelpExit(status, message or "")


class _HelpExit(Exception):
    def __init__(self, status, message):
        self.status, self.message = status, message


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hdist", description="Cube face formula and Steenrod algebra derivation checks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    s = sub.add_parser("faces", help="obstruction table of the n-cube")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=("text", "json", "tikz"), default="text")

    for name, helptext in (("check-compat", "face compatibility sweep"), ("wedge", "wedge collapse sweep"),
                           ("universality", "interval-sum shape of every label")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--json", action="store_true")

    for name, helptext in (("adem", "normalize an expression"), ("kappa", "apply kappa"),
                           ("kappa2", "apply kappa twice")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--expr", required=True)

    s = sub.add_parser("verify-derivation", help="sweep a derivation over Adem relations or basis pairs")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=("kappa", "kappa2"))
    src.add_argument("--table", metavar="FILE")
    s.add_argument("--upto", type=int, required=True)
    s.add_argument("--mode", choices=("adem", "leibniz-pairs"), default="adem")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("basis", help="admissible monomials of a degree")
    s.add_argument("--degree", type=int, required=True)
    return p


def _need(cond: bool, message: str):
    if not cond:
        raise UsageError(message)


def _report(report, as_json: bool) -> CommandResult:
    payload = json.dumps(report.to_json(), indent=2, sort_keys=True) if as_json else report.summary()
    return CommandResult(EXIT_OK if report.passed else EXIT_FAIL, payload)


def _dispatch(args) -> CommandResult:
    cmd = args.command
    if cmd == "faces":
        _need(args.n >= 1, "--n must be at least 1")
        table = obstruction_map(args.n)
        if args.format == "json":
            return CommandResult(EXIT_OK, json.dumps(table.to_json(), indent=2))
        if args.format == "tikz":
            _need(args.n <= 3, "TikZ output is only available for n <= 3")
            return CommandResult(EXIT_OK, render_tikz(table))
        return CommandResult(EXIT_OK, render_text(table))
    if cmd in ("check-compat", "wedge", "universality"):
        _need(args.n >= 1, "--n must be at least 1")
        check = {"check-compat": check_face_compatibility, "wedge": check_wedge,
                 "universality": check_universality}[cmd]
        return _report(check(args.n), args.json)
    if cmd in ("adem", "kappa", "kappa2"):
        x = SteenrodElement.parse(args.expr)
        if cmd == "kappa":
            x = extend_leibniz(kristensen_kappa(), x)
        elif cmd == "kappa2":
            x = kappa_squared()(x)
        return CommandResult(EXIT_OK, str(x))
    if cmd == "verify-derivation":
        _need(args.upto >= 2, "--upto must be at least 2")
        if args.table:
            try:
                with open(args.table, encoding="utf-8") as fh:
                    D = parse_table(fh.read(), name=args.table)
            except OSError as exc:
                raise UsageError(f"cannot read {args.table}: {exc.strerror}") from None
        elif args.builtin == "kappa":
            D = kristensen_kappa()
        else:
            D = kappa_squared_generators()
        if args.mode == "adem":
            return _report(verify_well_defined(D, args.upto), args.json)
        F = kappa_squared() if args.builtin == "kappa2" else D
        return _report(verify_derivation_property(F, D.shift, args.upto), args.json)
    if cmd == "basis":
        _need(args.degree >= 0, "--degree must be non-negative")
        return CommandResult(EXIT_OK, "\n".join(format_monomial(w) for w in admissible_basis(args.degree)))
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        return _dispatch(args)
    except _HelpExit as exc:
        return CommandResult(exc.status, exc.message or parser.format_help())
    except UsageError as exc:
        return CommandResult(EXIT_USAGE, str(exc))
    except GrammarError as exc:
        return CommandResult(EXIT_USAGE, f"hdist: error: malformed Steenrod expression, offending token {exc.token!r}")
    except TableError as exc:
        return CommandResult(EXIT_USAGE, f"hdist: error: bad derivation table: {exc}")


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if result.exit_code == EXIT_USAGE else sys.stdout
    if result.payload:
        print(result.payload, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
