"""Command-line front end.

    layered eval --mode state "div(con 1, con 2)"
    layered serve --kind hotswap --callback nameServer --scenario FILE

A scenario holds one request per line, ``<op> :: <arg> | <arg> ...``.
Blank lines and lines starting with ``#`` are ignored. Without
``--scenario`` requests are read from stdin as they arrive.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Iterable, Iterator

from .callbacks import ServerError, UnknownCallback
from .evaluators import eval_counting, eval_monadic, eval_tracing, eval_with_exceptions
from .expr import DivideByZero, eval_simple, format_number
from .parser import ParseError, parse_expr
from .server import Request, start_up

EXIT_OK, EXIT_USAGE, EXIT_CRASH = 0, 1, 2

EVAL_MODES = {
    "monadic": eval_monadic,
    "exceptions": eval_with_exceptions,
    "state": eval_counting,
    "output": eval_tracing,
}

_NUMBER = re.compile(r"-?\d+(\.\d+)?")


class ScenarioFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def parse_token(token: str):
    if _NUMBER.fullmatch(token):
        return float(token) if "." in token else int(token)
    return token


def parse_scenario_line(line: str, lineno: int = 1) -> Request:
    op, sep, rest = line.partition("::")
    if not sep:
        raise ScenarioFormatError(lineno, "missing '::' separator")
    op = op.strip()
    if not op:
        raise ScenarioFormatError(lineno, "missing operation name")
    rest = rest.strip()
    args = [parse_token(t.strip()) for t in rest.split("|")] if rest else []
    return Request(op, args)


def read_scenario(lines: Iterable[str]) -> Iterator[Request]:
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        yield parse_scenario_line(text, lineno)


def cmd_eval(mode: str, src: str, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        e = parse_expr(src)
        if mode == "simple":
            text = format_number(eval_simple(e))
        else:
            text = str(EVAL_MODES[mode](e))
    except ParseError as exc:
        print(f"parse error {exc}", file=err)
        return EXIT_USAGE
    except DivideByZero as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    out.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def cmd_serve(kind: str, callback: str, lines: Iterable[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr

    def emit(line):
        out.write(line + "\n")
        out.flush()

    try:
        server = start_up(kind, callback, on_log=emit)
        server.server_loop(read_scenario(lines))
    except (UnknownCallback, ScenarioFormatError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except ServerError as exc:
        print(f"server crashed: {exc}", file=err)
        return EXIT_CRASH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="layered", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("--mode", choices=["simple", *EVAL_MODES], default="simple")
    p_eval.add_argument("expr")

    p_serve = sub.add_parser("serve", help="run a scripted server session")
    p_serve.add_argument("--kind", choices=["basic", "transaction", "hotswap"], required=True)
    p_serve.add_argument("--callback", required=True)
    p_serve.add_argument("--scenario", help="scenario file (default: stdin)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "eval":
        return cmd_eval(args.mode, args.expr)
    if args.scenario is None:
        return cmd_serve(args.kind, args.callback, sys.stdin)
    try:
        with open(args.scenario, encoding="utf-8") as fh:
            return cmd_serve(args.kind, args.callback, fh)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
