# The same expression under four evaluators, each a small override of the
# monadic one: plain monadic, exceptions, division counting and tracing.

from layered import (
    CountingEvaluator,
    execute_in,
    eval_counting,
    eval_monadic,
    eval_tracing,
    eval_with_exceptions,
    parse_expr,
)

e = parse_expr("div(con 6, div(con 4, con 2))")

print(eval_monadic(e))                      # pure(3)
print(eval_with_exceptions(e))              # pure(3)
print(eval_counting(e))                     # result(3) count(2), run from count 0
print(execute_in(eval_counting(e), 10))     # Response(result=3.0, state=12)
print(eval_tracing(e), end="")              # one trace line per node, postorder

# exceptions are values: the first zero division, left to right, wins
print(eval_with_exceptions(parse_expr("div(div(con 1, con 0), div(con 2, con 0))")))


# a new variation only overrides the node action it cares about
class LoudCounting(CountingEvaluator):
    def eval_con(self, e):
        print("  visiting", e)
        return super().eval_con(e)


print(LoudCounting().eval(e))
