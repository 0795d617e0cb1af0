"""Random term generators shared across the test modules.

Bulk-count tests use random.Random with pinned seeds so failures
reproduce; structural properties use the hypothesis strategies.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from boolecalc.term import Add, Const, Div, Mul, Sub, Term, Var

NAMES3 = ("x", "y", "z")
NAMES4 = ("w", "x", "y", "z")

_LEAF_CONSTS = (0, 0, 1, 1, 1, 2, 3)


def random_term(rng: random.Random, names, depth: int, div_budget: int = 0) -> Term:
    """A random term; at most div_budget quotient nodes in total."""

    def build(d: int, budget: int):
        if d == 0 or rng.random() < 0.3:
            if rng.random() < 0.35:
                return Const(Fraction(rng.choice(_LEAF_CONSTS))), budget
            return Var(rng.choice(names)), budget
        ops = ["add", "sub", "mul", "mul"]
        if budget > 0:
            ops.append("div")
        op = rng.choice(ops)
        if op == "div":
            budget -= 1
        left, budget = build(d - 1, budget)
        right, budget = build(d - 1, budget)
        if op == "add":
            return Add(left, right), budget
        if op == "sub":
            return Sub(left, right), budget
        if op == "mul":
            return Mul(left, right), budget
        return Div(left, right), budget

    term, _ = build(depth, div_budget)
    return term


def random_division_free(rng: random.Random, names, depth: int) -> Term:
    return random_term(rng, names, depth, div_budget=0)


def random_class_term(rng: random.Random, names, depth: int) -> Term:
    """A term built only from variables, 0, 1, products and complements.

    Such terms always satisfy the duality law t*t = t on binary points.
    """
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.15:
            return Const(Fraction(rng.choice((0, 1))))
        return Var(rng.choice(names))
    if rng.random() < 0.55:
        return Mul(
            random_class_term(rng, names, depth - 1),
            random_class_term(rng, names, depth - 1),
        )
    return Sub(Const(Fraction(1)), random_class_term(rng, names, depth - 1))


def random_constituent_term(rng: random.Random, names) -> Term:
    from boolecalc.development import Constituent

    signs = tuple(rng.randint(0, 1) for _ in names)
    return Constituent(tuple(names), signs).term()


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-8, 8), rng.randint(1, 8))


# hypothesis strategies

var_names = st.sampled_from(("x", "y", "z", "w"))

_leaves = st.one_of(
    st.integers(min_value=0, max_value=9).map(lambda n: Const(Fraction(n))),
    var_names.map(Var),
)


def _extend(children):
    pairs = st.tuples(children, children)
    return st.one_of(
        pairs.map(lambda p: Add(p[0], p[1])),
        pairs.map(lambda p: Sub(p[0], p[1])),
        pairs.map(lambda p: Mul(p[0], p[1])),
        pairs.map(lambda p: Div(p[0], p[1])),
    )


def _extend_division_free(children):
    pairs = st.tuples(children, children)
    return st.one_of(
        pairs.map(lambda p: Add(p[0], p[1])),
        pairs.map(lambda p: Sub(p[0], p[1])),
        pairs.map(lambda p: Mul(p[0], p[1])),
    )


# Terms the parser could have produced: nonnegative integer constants only.
parser_image_terms = st.recursive(_leaves, _extend, max_leaves=14)

division_free_terms = st.recursive(_leaves, _extend_division_free, max_leaves=14)
