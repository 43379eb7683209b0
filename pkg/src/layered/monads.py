"""Monad kinds used by the layered evaluators.

Every kind is immutable and offers ``bind(k)``, where ``k`` maps the wrapped
value to another monad value. ``str()`` gives the human-readable rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .expr import render_value


class _Done:
    """Unit value answered by effect-only computations such as ``tally``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "done"

    __str__ = __repr__

    def __reduce__(self):
        return (_Done, ())


done = _Done()


@dataclass(frozen=True)
class Response:
    """A result paired with the state that follows it."""

    result: Any
    state: Any


@dataclass(frozen=True)
class Pure:
    contents: Any

    def bind(self, k):
        return k(self.contents)

    def __str__(self):
        return f"pure({render_value(self.contents)})"


@dataclass(frozen=True)
class Raise:
    reason: str

    def __post_init__(self):
        if not self.reason:
            raise ValueError("a raise needs a non-empty reason")

    def bind(self, k):
        # k is deliberately never called
        return self

    def __str__(self):
        return f"raise({self.reason})"


@dataclass(frozen=True)
class State:
    """A computation from a division count to a ``Response``."""

    computation: Callable[[int], Response]

    def execute_in(self, s: int) -> Response:
        return self.computation(s)

    def bind(self, k):
        def run(s):
            first = self.computation(s)
            return k(first.result).computation(first.state)

        return State(run)

    def __str__(self):
        r = self.execute_in(0)
        return f"result({render_value(r.result)}) count({r.state})"


@dataclass(frozen=True)
class Output:
    contents: Any
    output: str = ""

    def bind(self, k):
        n = k(self.contents)
        return Output(n.contents, self.output + n.output)

    def __str__(self):
        return f"{self.output}value: {render_value(self.contents)}\n"


def unit(kind: str, v):
    """Lift ``v`` into the monad named by ``kind`` without any effect."""
    if kind == "pure":
        return Pure(v)
    if kind == "state":
        return State(lambda s: Response(v, s))
    if kind == "output":
        return Output(v, "")
    raise ValueError(f"no unit for monad kind {kind!r}")


def execute_in(m: State, s: int) -> Response:
    return m.execute_in(s)


def tally() -> State:
    """Count one division; answers ``done``."""
    return State(lambda n: Response(done, n + 1))


def render_monad(m) -> str:
    return str(m)
