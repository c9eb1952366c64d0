"""Classification of complex zero loci: decide empty / finite / infinite and
count distinct zeros exactly.

Counting is degree-theoretic: a system is zero-dimensional iff every
variable has a pure power among the leading terms of a reduced basis; the
number of distinct common zeros over the complex numbers then equals the
vector-space dimension of the quotient by the zero-dimensional radical,
obtained by adjoining squarefree parts of the per-variable minimal
polynomials.  "Infinite" relies on algebraic closedness; nothing here
counts real zeros.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .groebner import Ideal, MonomialOrder, default_order, normal_form
from .linalg import RowSpan
from .polyring import Monomial, Polynomial, VarSet, monomial_divides


class NotZeroDimensionalError(ValueError):
    """The ideal has infinitely many zeros (or is not proper as required)."""


@dataclass(frozen=True)
class ZeroCount:
    """Empty, Finite(n), or Infinite, for zeros over the complex numbers.

    ``multiplicity_dimension`` is a diagnostic (quotient dimension before
    passing to the radical); it does not take part in equality.
    """

    kind: str  # "empty" | "finite" | "infinite"
    n: int | None = None
    multiplicity_dimension: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in ("empty", "finite", "infinite"):
            raise ValueError(f"bad zero-count kind {self.kind!r}")
        if self.kind == "finite":
            if self.n is None or self.n < 1:
                raise ValueError("a finite zero count must be at least 1")
        elif self.n is not None:
            raise ValueError("only finite counts carry a number")

    @classmethod
    def empty(cls) -> "ZeroCount":
        return cls("empty")

    @classmethod
    def finite(cls, n: int, multiplicity_dimension: int | None = None) -> "ZeroCount":
        return cls("finite", n, multiplicity_dimension)

    @classmethod
    def infinite(cls) -> "ZeroCount":
        return cls("infinite")

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def __str__(self) -> str:
        return str(self.n) if self.kind == "finite" else self.kind


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials of a zero-dimensional ideal: exactly those
    divisible by no leading term of the reduced basis, sorted ascending."""

    order: MonomialOrder
    monomials: tuple[Monomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def quotient_basis(ideal: Ideal, order: MonomialOrder | None = None) -> QuotientBasis | None:
    """Standard monomials when the ideal is zero-dimensional, None when it
    is not.  The unit ideal yields the empty basis."""
    if order is None:
        order = default_order(ideal.ring)
    basis = ideal.groebner_basis(order)
    arity = ideal.ring.arity
    lms = [max(g.terms, key=order.key) for g in basis]
    bounds: list[int] = []
    for i in range(arity):
        bound = None
        for lm in lms:
            if lm[i] and all(e == 0 for j, e in enumerate(lm) if j != i):
                if bound is None or lm[i] < bound:
                    bound = lm[i]
            elif not any(lm):
                bound = 0  # constant leading term: unit ideal
                break
        if bound is None:
            return None
        bounds.append(bound)
    standard = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(monomial_divides(lm, m) for lm in lms)
    ]
    standard.sort(key=order.key)
    return QuotientBasis(order, tuple(standard))


def minimal_polynomial(ideal: Ideal, var: str, order: MonomialOrder | None = None) -> Polynomial:
    """Monic least-degree univariate m with m(var) in the ideal, found by
    expressing normal forms of the powers of ``var`` over the quotient basis
    and detecting the first linear dependence exactly."""
    if order is None:
        order = default_order(ideal.ring)
    qb = quotient_basis(ideal, order)
    if qb is None:
        raise NotZeroDimensionalError(
            "minimal polynomials require a zero-dimensional ideal"
        )
    if qb.dimension == 0:
        raise ValueError("the unit ideal has no minimal polynomials")
    ideal.ring.index(var)
    position = {m: i for i, m in enumerate(qb.monomials)}
    basis = ideal.groebner_basis(order)
    span = RowSpan(qb.dimension)
    v = Polynomial.variable(ideal.ring, var)
    current = Polynomial.constant(ideal.ring, 1)
    while True:
        vec = [Fraction(0)] * qb.dimension
        for m, c in current.terms.items():
            vec[position[m]] = c
        dependence = span.add(vec)
        if dependence is not None:
            return Polynomial(VarSet((var,)), {(i,): c for i, c in enumerate(dependence) if c})
        current = normal_form(current * v, basis, order)


def _dense_coeffs(p: Polynomial) -> list[Fraction]:
    """Ascending coefficient list of a univariate polynomial."""
    if p.ring.arity != 1:
        raise ValueError("expected a univariate polynomial")
    if p.is_zero:
        return []
    out = [Fraction(0)] * (p.degree() + 1)
    for m, c in p.terms.items():
        out[m[0]] = c
    return out


def _uni_trim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _uni_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, bc in enumerate(b):
            rem[shift + i] -= factor * bc
        _uni_trim(rem)
        if not rem:
            break
    return _uni_trim(quo), rem


def _uni_gcd_monic(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def squarefree_part(m: Polynomial) -> Polynomial:
    """m / gcd(m, m'), monic: same roots, each simple."""
    if m.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    coeffs = _dense_coeffs(m)
    deriv = _uni_trim([c * i for i, c in enumerate(coeffs)][1:])
    g = _uni_gcd_monic(coeffs, deriv)
    quo, rem = _uni_divmod(coeffs, g)
    if rem:
        raise ArithmeticError("gcd does not divide its argument")
    lead = quo[-1]
    return Polynomial(m.ring, {(i,): c / lead for i, c in enumerate(quo) if c})


def _embed_univariate(m: Polynomial, ring: VarSet, var: str) -> Polynomial:
    idx = ring.index(var)
    out = {}
    for (e,), c in m.terms.items():
        exps = [0] * ring.arity
        exps[idx] = e
        out[tuple(exps)] = c
    return Polynomial(ring, out)


def radical_zero_dim(ideal: Ideal, order: MonomialOrder | None = None) -> Ideal:
    """The radical of a proper zero-dimensional ideal: adjoin the squarefree
    part of each variable's minimal polynomial (Seidenberg's lemma); the same
    zero set, now with every zero simple."""
    if order is None:
        order = default_order(ideal.ring)
    extras = []
    for var in ideal.ring.names:
        m = squarefree_part(minimal_polynomial(ideal, var, order))
        extras.append(_embed_univariate(m, ideal.ring, var))
    result = Ideal(ideal.ring, ideal.generators + tuple(extras))
    result.groebner_basis(order)
    return result


def _count_and_radical(
    ideal: Ideal, order: MonomialOrder | None = None
) -> tuple[ZeroCount, Ideal | None]:
    if order is None:
        order = default_order(ideal.ring)
    basis = ideal.groebner_basis(order)
    if len(basis) == 1 and basis[0].is_constant:
        return ZeroCount.empty(), None
    qb = quotient_basis(ideal, order)
    if qb is None:
        return ZeroCount.infinite(), None
    radical = radical_zero_dim(ideal, order)
    rqb = quotient_basis(radical, order)
    assert rqb is not None and rqb.dimension >= 1
    return ZeroCount.finite(rqb.dimension, multiplicity_dimension=qb.dimension), radical


def count_distinct_zeros(
    gens: Sequence[Polynomial] | Ideal, order: MonomialOrder | None = None
) -> ZeroCount:
    """Number of distinct common zeros in complex affine space: Empty when 1
    lies in the ideal, Infinite when the proper ideal is not
    zero-dimensional, otherwise Finite with the exact distinct-point count."""
    if isinstance(gens, Ideal):
        ideal = gens
    else:
        gens = list(gens)
        if not gens:
            raise ValueError("cannot infer the ring from an empty generator list")
        ideal = Ideal(gens[0].ring, gens)
    count, _ = _count_and_radical(ideal, order)
    return count


def rational_roots(m: Polynomial) -> tuple[tuple[Fraction, ...], bool]:
    """Distinct rational roots of a univariate polynomial, sorted, plus a
    flag telling whether they account for the full degree (i.e. the
    polynomial splits into rational linear factors)."""
    coeffs = _dense_coeffs(m)
    if not coeffs:
        raise ValueError("the zero polynomial has every root")
    roots: list[Fraction] = []
    while len(coeffs) > 1 and not coeffs[0]:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        coeffs = coeffs[1:]
    work = _integerize(coeffs)
    while len(work) > 1:
        found = None
        for r in _root_candidates(work):
            if _horner(work, r) == 0:
                found = r
                break
        if found is None:
            break
        if found not in roots:
            roots.append(found)
        work = _integerize(_synthetic_div(work, found))
    return tuple(sorted(roots)), len(work) == 1


def _horner(coeffs: Sequence[Fraction | int], r: Fraction) -> Fraction:
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * r + c
    return value


def _synthetic_div(coeffs: Sequence[int], r: Fraction) -> list[Fraction]:
    """Quotient of an ascending coefficient list by (t - r); the remainder
    is dropped (callers divide by known roots only)."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(coeffs[-1])
    for i in range(len(coeffs) - 2, -1, -1):
        out[i] = carry
        carry = coeffs[i] + carry * r
    return out


def _integerize(coeffs: Sequence[Fraction | int]) -> list[int]:
    from math import lcm

    denom = 1
    for c in coeffs:
        denom = lcm(denom, Fraction(c).denominator)
    return [int(Fraction(c) * denom) for c in coeffs]


def _root_candidates(ints: Sequence[int]):
    from math import isqrt

    def divisors(n: int) -> list[int]:
        n = abs(n)
        if n == 0:
            return [1]
        out = set()
        for d in range(1, isqrt(n) + 1):
            if n % d == 0:
                out.add(d)
                out.add(n // d)
        return sorted(out)

    const, lead = ints[0], ints[-1]
    seen = set()
    for p in divisors(const):
        for q in divisors(lead):
            for sign in (1, -1):
                r = Fraction(sign * p, q)
                if r not in seen:
                    seen.add(r)
                    yield r
