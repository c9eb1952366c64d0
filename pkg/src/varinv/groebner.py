"""Monomial orders, multivariate division, Buchberger's algorithm, and
ideal-level predicates: membership, equality, sums, and elimination.

Reduced bases are monic over the rationals and unique per order; the
integer-scaled presentation exists only at the text boundary.  Buchberger
runs with the normal selection strategy (smallest lcm degree first, ties
broken by the order on lcm monomials) and prunes pairs with the
coprime-leading-term and chain criteria.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .polyring import (
    Monomial,
    Polynomial,
    RingMismatchError,
    VarSet,
    change_ring,
    integer_primitive,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    total_degree,
)

ORDER_KINDS = ("lex", "deglex", "degrevlex")


@dataclass(frozen=True)
class MonomialOrder:
    """Admissible term order (lex, deglex, or degrevlex) with a variable
    priority, highest variable first.  Defaults to declaration order."""

    kind: str
    ring: VarSet
    priority: tuple[str, ...] = ()
    _perm: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        priority = tuple(self.priority) or self.ring.names
        object.__setattr__(self, "priority", priority)
        if sorted(priority) != sorted(self.ring.names):
            raise ValueError(
                f"priority {priority} is not a permutation of ({self.ring})"
            )
        object.__setattr__(self, "_perm", tuple(self.ring.index(n) for n in priority))

    @classmethod
    def lex(cls, ring: VarSet, priority: Sequence[str] = ()) -> "MonomialOrder":
        return cls("lex", ring, tuple(priority))

    @classmethod
    def deglex(cls, ring: VarSet, priority: Sequence[str] = ()) -> "MonomialOrder":
        return cls("deglex", ring, tuple(priority))

    @classmethod
    def degrevlex(cls, ring: VarSet, priority: Sequence[str] = ()) -> "MonomialOrder":
        return cls("degrevlex", ring, tuple(priority))

    def key(self, m: Monomial) -> tuple[int, ...]:
        """Flat integer sort key; bigger key means bigger monomial."""
        perm = self._perm
        if self.kind == "lex":
            return tuple(m[i] for i in perm)
        if self.kind == "deglex":
            return (sum(m), *(m[i] for i in perm))
        return (sum(m), *(-m[i] for i in reversed(perm)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0, or 1 as ``a`` is below, equal to, or above ``b``."""
        if len(a) != self.ring.arity or len(b) != self.ring.arity:
            raise ValueError("monomial arity does not match the order's ring")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def default_order(ring: VarSet) -> MonomialOrder:
    return MonomialOrder.degrevlex(ring)


def leading_monomial(p: Polynomial, order: MonomialOrder) -> Monomial:
    if p.is_zero:
        raise ValueError("the zero polynomial has no leading monomial")
    return max(p.terms, key=order.key)


def leading_coefficient(p: Polynomial, order: MonomialOrder) -> Fraction:
    return p.terms[leading_monomial(p, order)]


def _divisor_table(G: Sequence[Polynomial], order: MonomialOrder, ring: VarSet):
    table = []
    for g in G:
        if g.ring != ring:
            raise RingMismatchError("divisor lives over a different ring")
        if g.is_zero:
            raise ValueError("zero polynomial in divisor list")
        lm = leading_monomial(g, order)
        table.append((lm, g.terms[lm], g))
    return table


def _reduce_terms(work: dict, divisors, order: MonomialOrder) -> dict:
    """Fully reduce a term map against the divisor table.

    Heap-driven: always rewrites the highest reducible term first, using the
    first dividing entry of the table, which makes the result deterministic.
    """
    key = order.key
    heap = [tuple(-v for v in key(m)) for m in work]
    lookup = {tuple(-v for v in key(m)): m for m in work}
    heapq.heapify(heap)
    remainder: dict = {}
    while heap:
        negk = heapq.heappop(heap)
        m = lookup[negk]
        c = work.get(m)
        if not c:
            continue
        del work[m]
        for lm, lc, g in divisors:
            if monomial_divides(lm, m):
                quot = monomial_div(m, lm)
                factor = c / lc
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    t = monomial_mul(quot, gm)
                    prev = work.get(t)
                    if prev is None:
                        work[t] = -factor * gc
                        nk = tuple(-v for v in key(t))
                        lookup[nk] = t
                        heapq.heappush(heap, nk)
                    else:
                        v = prev - factor * gc
                        if v:
                            work[t] = v
                        else:
                            del work[t]
                break
        else:
            remainder[m] = c
    return remainder


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on division by ``G``: no term of the result is
    divisible by a leading term of ``G``, and ``f - result`` lies in <G>."""
    if order is None:
        order = default_order(f.ring)
    divisors = _divisor_table(G, order, f.ring)
    return Polynomial(f.ring, _reduce_terms(dict(f.terms), divisors, order))


def _mono_scaled(p: Polynomial, mono: Monomial, scalar: Fraction) -> dict:
    return {monomial_mul(mono, m): c * scalar for m, c in p.terms.items()}


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """Cancellation of the two leading terms, both sides taken monic."""
    if f.is_zero or g.is_zero:
        raise ValueError("s-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise RingMismatchError("s-polynomial operands over different rings")
    if order is None:
        order = default_order(f.ring)
    lmf = leading_monomial(f, order)
    lmg = leading_monomial(g, order)
    big = monomial_lcm(lmf, lmg)
    left = _mono_scaled(f, monomial_div(big, lmf), Fraction(1) / f.terms[lmf])
    right = _mono_scaled(g, monomial_div(big, lmg), Fraction(1) / g.terms[lmg])
    for m, c in right.items():
        v = left.get(m, Fraction(0)) - c
        if v:
            left[m] = v
        else:
            left.pop(m, None)
    return Polynomial(f.ring, left)


def _buchberger(generators: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    ring = order.ring
    G: list[Polynomial] = []
    for g in generators:
        if not g.is_zero:
            G.append(integer_primitive(g, order.key))
    if not G:
        return []
    lms = [leading_monomial(g, order) for g in G]
    divisors = _divisor_table(G, order, ring)
    pairs: set[tuple[int, int]] = {(i, j) for j in range(len(G)) for i in range(j)}
    lcms: dict[tuple[int, int], Monomial] = {
        p: monomial_lcm(lms[p[0]], lms[p[1]]) for p in pairs
    }

    def chain_prunable(i: int, j: int, big: Monomial) -> bool:
        for k in range(len(G)):
            if k in (i, j):
                continue
            if monomial_divides(lms[k], big):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pairs and b not in pairs:
                    return True
        return False

    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (total_degree(lcms[p]), order.key(lcms[p]), p),
        )
        pairs.remove((i, j))
        big = lcms[(i, j)]
        if big == monomial_mul(lms[i], lms[j]):
            continue  # coprime leading terms
        if chain_prunable(i, j, big):
            continue
        s = s_polynomial(G[i], G[j], order)
        reduced = _reduce_terms(dict(s.terms), divisors, order)
        if not reduced:
            continue
        r = integer_primitive(Polynomial(ring, reduced), order.key)
        t = len(G)
        G.append(r)
        lm = leading_monomial(r, order)
        lms.append(lm)
        divisors.append((lm, r.terms[lm], r))
        for i2 in range(t):
            pairs.add((i2, t))
            lcms[(i2, t)] = monomial_lcm(lms[i2], lm)
    return _reduce_basis(G, order)


def _reduce_basis(G: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Minimalize, make monic, and tail-reduce; the result is the unique
    reduced basis, sorted ascending by leading monomial."""
    by_lm = sorted(G, key=lambda g: order.key(leading_monomial(g, order)))
    kept: list[Polynomial] = []
    kept_lms: list[Monomial] = []
    for g in by_lm:
        lm = leading_monomial(g, order)
        if any(monomial_divides(other, lm) for other in kept_lms):
            continue
        kept.append(g / g.terms[lm])
        kept_lms.append(lm)
    for idx in range(len(kept)):
        others = kept[:idx] + kept[idx + 1:]
        if others:
            kept[idx] = normal_form(kept[idx], others, order)
    return kept


class Ideal:
    """Finitely generated ideal with cached reduced bases per order.

    The value (ring and generator list) is immutable; the cache is a hidden
    memo whose fills are idempotent.
    """

    __slots__ = ("ring", "generators", "_cache")

    def __init__(self, ring: VarSet, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(
                    f"generator over ({g.ring}) does not match ideal ring ({ring})"
                )
            if not g.is_zero:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._cache: dict[MonomialOrder, tuple[Polynomial, ...]] = {}

    def groebner_basis(self, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
        """The unique reduced basis under ``order`` (cached)."""
        if order is None:
            order = default_order(self.ring)
        got = self._cache.get(order)
        if got is None:
            got = tuple(_buchberger(self.generators, order))
            self._cache[order] = got
        return got

    def contains(self, f: Polynomial, order: MonomialOrder | None = None) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError("membership test across different rings")
        if f.is_zero:
            return True
        basis = self.groebner_basis(order)
        if not basis:
            return False
        if order is None:
            order = default_order(self.ring)
        return normal_form(f, basis, order).is_zero

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self, order: MonomialOrder | None = None) -> bool:
        basis = self.groebner_basis(order)
        return len(basis) == 1 and basis[0].is_constant

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal<{gens}>"


def reduced_groebner(ideal: Ideal, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
    return ideal.groebner_basis(order)


def ideal_member(f: Polynomial, ideal: Ideal, order: MonomialOrder | None = None) -> bool:
    return ideal.contains(f, order)


def ideal_equal(left: Ideal, right: Ideal, order: MonomialOrder | None = None) -> bool:
    if left.ring != right.ring:
        raise RingMismatchError("ideal comparison across different rings")
    return left.groebner_basis(order) == right.groebner_basis(order)


def ideal_sum(left: Ideal, right: Ideal) -> Ideal:
    if left.ring != right.ring:
        raise RingMismatchError("ideal sum across different rings")
    return Ideal(left.ring, left.generators + right.generators)


def eliminate(ideal: Ideal, drop: Iterable[str]) -> Ideal:
    """Intersection with the subring omitting ``drop``, via a lex basis with
    the dropped variables highest; the result lives over the smaller ring."""
    ring = ideal.ring
    dropped = []
    for name in drop:
        ring.index(name)
        if name not in dropped:
            dropped.append(name)
    kept = tuple(n for n in ring.names if n not in dropped)
    if not kept:
        raise ValueError("cannot eliminate every variable")
    priority = tuple(n for n in ring.names if n in dropped) + kept
    order = MonomialOrder.lex(ring, priority)
    small = VarSet(kept)
    dropped_idx = [ring.index(n) for n in dropped]
    survivors = []
    for g in ideal.groebner_basis(order):
        if all(all(m[i] == 0 for i in dropped_idx) for m in g.terms):
            survivors.append(change_ring(g, small))
    return Ideal(small, survivors)


def exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    """The quotient f/g when g divides f exactly; raises ValueError when it
    does not.  Used by fraction-free determinant elimination."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.ring != g.ring:
        raise RingMismatchError("exact division across different rings")
    order = default_order(f.ring)
    lm = leading_monomial(g, order)
    lc = g.terms[lm]
    work = dict(f.terms)
    quotient: dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=order.key)
        if not monomial_divides(lm, m):
            raise ValueError("polynomial division is not exact")
        qm = monomial_div(m, lm)
        qc = work[m] / lc
        quotient[qm] = qc
        for gm, gc in g.terms.items():
            t = monomial_mul(qm, gm)
            v = work.get(t, Fraction(0)) - qc * gc
            if v:
                work[t] = v
            else:
                work.pop(t, None)
    return Polynomial(f.ring, quotient)
