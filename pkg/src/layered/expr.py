"""The ``con``/``div`` expression language and its direct evaluator."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Union


class DivideByZero(ZeroDivisionError):
    """Raised by the direct evaluator when a divisor is exactly zero."""

    def __init__(self, numerator):
        self.numerator = numerator
        super().__init__(f"dividing {format_number(numerator)} by zero")


@dataclass(frozen=True)
class Con:
    value: float

    def __str__(self):
        return render_expr(self)


@dataclass(frozen=True)
class Div:
    left: Expr
    right: Expr

    def __str__(self):
        return render_expr(self)


Expr = Union[Con, Div]


def format_number(x) -> str:
    """Integer-valued numbers print without a fraction, others in shortest
    round-trip positional form (never exponent notation)."""
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if x != x or x in (float("inf"), float("-inf")):
        return repr(x)
    if x.is_integer():
        return str(int(x))
    return format(Decimal(repr(x)), "f")


def render_value(v) -> str:
    """Render a result or argument for logs and traces."""
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return format_number(v)
    return str(v)


def divide(numerator, divisor):
    if divisor == 0:
        raise DivideByZero(numerator)
    return numerator / divisor


def eval_simple(e: Expr):
    if isinstance(e, Con):
        return e.value
    if isinstance(e, Div):
        return divide(eval_simple(e.left), eval_simple(e.right))
    raise TypeError(f"not an expression: {e!r}")


def render_expr(e: Expr) -> str:
    if isinstance(e, Con):
        return f"con {format_number(e.value)}"
    if isinstance(e, Div):
        return f"div({render_expr(e.left)}, {render_expr(e.right)})"
    raise TypeError(f"not an expression: {e!r}")


def div_count(e: Expr) -> int:
    if isinstance(e, Div):
        return 1 + div_count(e.left) + div_count(e.right)
    return 0


def node_count(e: Expr) -> int:
    if isinstance(e, Div):
        return 1 + node_count(e.left) + node_count(e.right)
    return 1
