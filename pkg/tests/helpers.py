"""Random generators and independent oracles shared by the test modules."""

import random

from hypothesis import strategies as st

from layered import Con, Div, Request

# -- expressions -------------------------------------------------------------


def random_expr(rng: random.Random, max_depth=8, allow_zero=False, depth=1):
    if depth >= max_depth or rng.random() < 0.35:
        lo = 0 if allow_zero else 1
        value = rng.randint(lo, 9)
        if rng.random() < 0.2:
            value = -value
        if rng.random() < 0.1:
            value = value + rng.choice([0.5, 0.25, 0.125])
        return Con(float(value))
    return Div(
        random_expr(rng, max_depth, allow_zero, depth + 1),
        random_expr(rng, max_depth, allow_zero, depth + 1),
    )


def depth(e):
    if isinstance(e, Div):
        return 1 + max(depth(e.left), depth(e.right))
    return 1


def postorder(e):
    stack, out = [(e, False)], []
    while stack:
        node, seen = stack.pop()
        if isinstance(node, Con) or seen:
            out.append(node)
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return out


def oracle_eval(e):
    """Stack-machine evaluation over the postorder node list.

    Returns ("ok", value, values_by_node) or ("zero", numerator) for the first
    division whose divisor is zero, in left-to-right evaluation order.
    """
    values = []
    trace = []
    for node in postorder(e):
        if isinstance(node, Con):
            values.append(node.value)
        else:
            y = values.pop()
            x = values.pop()
            if y == 0:
                return ("zero", x)
            values.append(x / y)
        trace.append((node, values[-1]))
    return ("ok", values[-1], trace)


def count_nodes(e, kind=None):
    nodes = postorder(e)
    if kind is None:
        return len(nodes)
    return sum(isinstance(n, kind) for n in nodes)


def exprs(max_depth=8, allow_zero=False):
    numbers = st.integers(-9, 9) if allow_zero else st.integers(1, 9) | st.integers(-9, -1)
    leaves = st.builds(Con, numbers.map(float) | st.sampled_from([0.5, 2.25, -1.125]))
    return st.recursive(
        leaves,
        lambda children: st.builds(Div, children, children),
        max_leaves=2 ** (max_depth - 1),
    ).filter(lambda e: depth(e) <= max_depth)


# -- parser ----------------------------------------------------------------

# (source, 1-based position, expected-token description)
MALFORMED = [
    ("div(con 1 con 2)", 11, "','"),
    ("", 1, "'con' or 'div'"),
    ("   ", 4, "'con' or 'div'"),
    ("con", 4, "digit"),
    ("con x", 5, "digit"),
    ("con -", 6, "digit"),
    ("con 1.", 7, "digit"),
    ("con .5", 5, "digit"),
    ("div con 1, con 2)", 5, "'('"),
    ("div(con 1", 10, "','"),
    ("div(con 1,)", 11, "'con' or 'div'"),
    ("div(con 1, con 2", 17, "')'"),
    ("con 1 junk", 7, "end of input"),
    ("div(con 1, con 2))", 18, "end of input"),
    ("foo", 1, "'con' or 'div'"),
    ("1/2", 1, "'con' or 'div'"),
]


# -- server scenarios --------------------------------------------------------

NAMES = ["BuckinghamPalace", "EiffelTower", "Atlantis", "Colosseum", "BigBen"]
PLACES = ["London", "Paris", "Rome", "Nowhere"]


def random_name_request(rng: random.Random, failures=True):
    roll = rng.random()
    if roll < 0.45:
        return Request("add()place()", [rng.choice(NAMES), rng.choice(PLACES)])
    if not failures:
        return None
    if roll < 0.75:
        return Request("whereIs()", [rng.choice(NAMES)])
    return Request(rng.choice(["boojum()", "snark()", "clear", "add()"]), [rng.choice(NAMES)])


def random_scenario(rng: random.Random, length, failures=True):
    """A name-server request list; without failures only safe lookups occur."""
    reqs, known = [], set()
    for _ in range(length):
        req = random_name_request(rng, failures)
        if req is None:
            if known and rng.random() < 0.5:
                req = Request("whereIs()", [rng.choice(sorted(known))])
            else:
                req = Request("add()place()", [rng.choice(NAMES), rng.choice(PLACES)])
        if req.op == "add()place()":
            known.add(req.args[0])
        reqs.append(req)
    return reqs
