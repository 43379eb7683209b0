"""Monadic evaluators for ``Expr``, each one a small override of the last.

``MonadicEvaluator`` fixes the evaluation skeleton: a constant is lifted
into the monad, and a division evaluates its left operand, then its right
operand, then combines them with ``divide_values``. Subclasses replace only
the node actions they need.
"""

from __future__ import annotations

from .expr import Con, Div, Expr, divide, format_number, render_expr, render_value
from .monads import Output, Pure, Raise, State, tally, unit


class MonadicEvaluator:
    kind = "pure"

    def lift(self, v):
        return unit(self.kind, v)

    def eval(self, e: Expr):
        if isinstance(e, Con):
            return self.eval_con(e)
        if isinstance(e, Div):
            return self.eval_div(e)
        raise TypeError(f"not an expression: {e!r}")

    def eval_con(self, e: Con):
        return self.lift(e.value)

    def eval_div(self, e: Div):
        return self.eval(e.left).bind(
            lambda x: self.eval(e.right).bind(lambda y: self.divide_values(x, y))
        )

    def divide_values(self, x, y):
        return self.lift(divide(x, y))


class ExceptionEvaluator(MonadicEvaluator):
    def divide_values(self, x, y):
        if y == 0:
            return Raise(f"dividing {format_number(x)} by zero")
        return super().divide_values(x, y)


class CountingEvaluator(MonadicEvaluator):
    kind = "state"

    def eval_div(self, e: Div):
        inherited = super().eval_div
        return tally().bind(lambda _: inherited(e))


def trace_line(e: Expr, v) -> str:
    return f"eval({render_expr(e)}) => {render_value(v)}\n"


class TracingEvaluator(MonadicEvaluator):
    kind = "output"

    def eval_con(self, e: Con):
        return Output(e.value, trace_line(e, e.value))

    def eval_div(self, e: Div):
        return super().eval_div(e).bind(lambda v: Output(v, trace_line(e, v)))


def eval_monadic(e: Expr) -> Pure:
    return MonadicEvaluator().eval(e)


def eval_with_exceptions(e: Expr) -> Pure | Raise:
    return ExceptionEvaluator().eval(e)


def eval_counting(e: Expr) -> State:
    return CountingEvaluator().eval(e)


def eval_tracing(e: Expr) -> Output:
    return TracingEvaluator().eval(e)
