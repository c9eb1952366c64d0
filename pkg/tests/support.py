"""Shared test helpers: parse shortcuts and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from varinv import Ideal, Polynomial, VarSet, parse_polynomial


def ring(names: str) -> VarSet:
    return VarSet(tuple(s.strip() for s in names.split(",")))


def P(text: str, names: str | VarSet) -> Polynomial:
    vs = names if isinstance(names, VarSet) else ring(names)
    return parse_polynomial(text, vs)


def ideal(names: str, *polys: str) -> Ideal:
    vs = ring(names)
    return Ideal(vs, [P(t, vs) for t in polys])


def random_polynomial(
    rng: random.Random,
    vs: VarSet,
    max_degree: int = 3,
    max_terms: int = 4,
    coeff_bound: int = 4,
    allow_zero: bool = False,
) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * vs.arity
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            mono[rng.randrange(vs.arity)] += 1
        num = rng.randint(-coeff_bound, coeff_bound)
        den = rng.choice((1, 1, 1, 2, 3))
        if num:
            key = tuple(mono)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(num, den)
    p = Polynomial(vs, terms)
    if p.is_zero and not allow_zero:
        return Polynomial.constant(vs, 1) + Polynomial.variable(vs, vs.names[0])
    return p


def random_point(rng: random.Random, arity: int, bound: int = 5) -> tuple[Fraction, ...]:
    return tuple(
        Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 2, 3)))
        for _ in range(arity)
    )
