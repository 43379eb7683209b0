# Building, printing, parsing and evaluating con/div expressions.

from layered import Con, Div, DivideByZero, eval_simple, parse_expr, render_expr

half = Div(Con(1), Con(2))
print(render_expr(half))            # div(con 1, con 2)
print(eval_simple(half))            # 0.5, division is fractional

nested = parse_expr("div(div(con 84, con 2), con 6)")
print(nested == Div(Div(Con(84), Con(2)), Con(6)))   # True
print(eval_simple(nested))          # 7.0

# the direct evaluator does not catch division by zero
try:
    eval_simple(parse_expr("div(con 3, div(con 0, con 1))"))
except DivideByZero as err:
    print("error:", err)            # dividing 3 by zero
