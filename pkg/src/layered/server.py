"""Generic request server with explicit state, in three flavours.

``BasicServer`` dispatches each request to the installed callback and threads
the returned state; a failing handler crashes it. ``TransactionServer``
changes only ``handle``: a failure is logged, the request answers
``!CRASH!`` and the state before the request is kept. ``HotSwapServer``
changes only ``handle`` again, intercepting ``!HOTSWAP!`` to install a new
callback and passing everything else to the transactional ``handle``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .callbacks import (
    Callback,
    HandlerFailure,
    NoSuchMethod,
    ServerError,
    UnknownCallback,
    load_callback,
)
from .expr import render_value
from .monads import Response

CRASH = "!CRASH!"
HOTSWAP = "!HOTSWAP!"


@dataclass(frozen=True)
class Request:
    op: str
    args: tuple = field(default=())

    def __post_init__(self):
        if not self.op:
            raise ValueError("a request needs an operation name")
        object.__setattr__(self, "args", tuple(self.args))


def dispatch(cb: Callback, req: Request, state) -> Response:
    """Run the handler ``req.op + "state"`` of ``cb`` on ``state``."""
    handler_name = req.op + "state"
    handler = cb.handlers.get(handler_name)
    if handler is None:
        raise NoSuchMethod(handler_name)
    try:
        response = handler(req.args, state)
    except ServerError:
        raise
    except Exception as exc:
        raise HandlerFailure(f"{type(exc).__name__}: {exc}") from exc
    if not isinstance(response, Response):
        raise HandlerFailure(f"handler {handler_name} did not answer a Response")
    return response


class BasicServer:
    kind_name = "basicServer"

    def __init__(self, callback_name: str, on_log: Callable[[str], Any] | None = None):
        self.log: list[str] = []
        self.on_log = on_log
        self.callback: Callback | None = None
        self.state: Any = None
        self.start_up(callback_name)

    def emit(self, line: str):
        self.log.append(line)
        if self.on_log is not None:
            self.on_log(line)

    def start_up(self, callback_name: str):
        self.callback = load_callback(callback_name)
        self.state = self.callback.initial_state
        self.emit(f"starting {self.kind_name}")

    def log_handled(self, req: Request, result):
        args = ", ".join(render_value(a) for a in req.args)
        self.emit(f"handle: {req.op} args: [{args}]")
        self.emit(f"    result: {render_value(result)}")

    def handle(self, req: Request):
        response = dispatch(self.callback, req, self.state)
        self.state = response.state
        self.log_handled(req, response.result)
        return response.result

    def server_loop(self, requests: Iterable[Request]):
        for req in requests:
            self.handle(req)
        self.emit("done")
        return self


class TransactionServer(BasicServer):
    kind_name = "transactionServer"

    def crash(self, req: Request, err: ServerError):
        self.emit(f"Error --- server crashed with {err}")
        self.log_handled(req, CRASH)
        return CRASH

    def handle(self, req: Request):
        try:
            return super().handle(req)
        except ServerError as err:
            return self.crash(req, err)


class HotSwapServer(TransactionServer):
    kind_name = "hotSwapServer"

    def handle(self, req: Request):
        if req.op != HOTSWAP:
            return super().handle(req)
        try:
            if len(req.args) != 1:
                raise HandlerFailure(f"{HOTSWAP} expects one callback name")
            cb = load_callback(req.args[0])
        except UnknownCallback as err:
            return self.crash(req, HandlerFailure(str(err)))
        except HandlerFailure as err:
            return self.crash(req, err)
        self.callback = cb
        self.state = cb.initial_state
        result = f"{cb.name} started."
        self.log_handled(req, result)
        return result


SERVER_KINDS = {
    "basic": BasicServer,
    "transactional": TransactionServer,
    "transaction": TransactionServer,
    "hotswap": HotSwapServer,
}


def start_up(kind: str, callback_name: str, on_log=None) -> BasicServer:
    try:
        cls = SERVER_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown server kind {kind!r}") from None
    return cls(callback_name, on_log=on_log)


def handle_basic(server: BasicServer, req: Request):
    return BasicServer.handle(server, req)


def handle_transactional(server: TransactionServer, req: Request):
    return TransactionServer.handle(server, req)


def handle_hot_swap(server: HotSwapServer, req: Request):
    return HotSwapServer.handle(server, req)


def server_loop(server: BasicServer, requests: Iterable[Request]) -> BasicServer:
    return server.server_loop(requests)
