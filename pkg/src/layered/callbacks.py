"""Server callbacks: a name server and a one-cell calculator.

A callback is an initial state plus a table of handlers. A client operation
``op`` is served by the handler named ``op + "state"``, which receives the
request arguments and the current state and returns a ``Response``.
Handlers never mutate the state they are given.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Number
from typing import Any, Callable, Mapping, Sequence

from .monads import Response

Handler = Callable[[Sequence[Any], Any], Response]


class ServerError(Exception):
    pass


class NoSuchMethod(ServerError):
    def __init__(self, handler_name: str):
        self.handler_name = handler_name
        super().__init__(handler_name)

    def __str__(self):
        return f"NoSuchMethod: no method {self.handler_name} in mirror for a callback"


class HandlerFailure(ServerError):
    pass


class UnknownCallback(LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"UnknownCallback: {self.name}"


@dataclass(frozen=True)
class Callback:
    name: str
    initial_state: Any
    handlers: Mapping[str, Handler] = field(default_factory=dict)

    def __post_init__(self):
        for handler_name in self.handlers:
            if not handler_name.endswith("state"):
                raise ValueError(f"handler {handler_name!r} must end with 'state'")


def make_name_server() -> Callback:
    def add_place(args, places):
        name, place = args
        return Response(place, {**places, name: place})

    def where_is(args, places):
        (name,) = args
        if name not in places:
            raise HandlerFailure(f"KeyNotFound: {name}")
        return Response(places[name], places)

    return Callback(
        "nameServer",
        {},
        {"add()place()state": add_place, "whereIs()state": where_is},
    )


def make_calculator() -> Callback:
    def clear(args, memory):
        return Response(0, 0)

    def add(args, memory):
        (e,) = args
        if isinstance(e, bool) or not isinstance(e, Number):
            raise HandlerFailure("TypeError: add expects a number")
        total = memory + e
        return Response(total, total)

    return Callback("calculator", 0, {"clearstate": clear, "add()state": add})


CALLBACKS: dict[str, Callable[[], Callback]] = {
    "nameServer": make_name_server,
    "calculator": make_calculator,
}


def load_callback(name: str) -> Callback:
    try:
        factory = CALLBACKS[name]
    except (KeyError, TypeError):
        raise UnknownCallback(name) from None
    return factory()
