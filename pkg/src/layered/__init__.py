"""Layered monadic evaluators and a generic server with transactions and hot swapping."""

from .callbacks import (
    Callback,
    HandlerFailure,
    NoSuchMethod,
    ServerError,
    UnknownCallback,
    load_callback,
    make_calculator,
    make_name_server,
)
from .evaluators import (
    CountingEvaluator,
    ExceptionEvaluator,
    MonadicEvaluator,
    TracingEvaluator,
    eval_counting,
    eval_monadic,
    eval_tracing,
    eval_with_exceptions,
    trace_line,
)
from .expr import Con, Div, DivideByZero, eval_simple, format_number, render_expr
from .monads import Output, Pure, Raise, Response, State, done, execute_in, render_monad, tally, unit
from .parser import ParseError, parse_expr
from .server import (
    CRASH,
    HOTSWAP,
    BasicServer,
    HotSwapServer,
    Request,
    TransactionServer,
    dispatch,
    server_loop,
    start_up,
)

__version__ = "0.1.0"
