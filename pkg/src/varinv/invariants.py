"""Isomorphism and embedding invariants of affine varieties.

Two separable tools live here.  The elementary ideals of the Jacobian
matrix of a generator list, taken together with a reference ideal R and
compared across every variable renaming, give a one-directional
isomorphism test: a failed comparison certifies that the varieties are not
isomorphic, while agreement is inconclusive.  The number of quasi-singular
points of a hypersurface (zeros of the gradient, which need not lie on the
hypersurface) is invariant under algebraic and holomorphic automorphisms of
the ambient space, so differing counts certify inequivalent embeddings even
for isomorphic hypersurfaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .groebner import (
    Ideal,
    MonomialOrder,
    default_order,
    exact_quotient,
    ideal_equal,
    ideal_sum,
)
from .linalg import det
from .polyring import (
    Polynomial,
    RationalPoint,
    RingMismatchError,
    change_ring,
    evaluate,
    gradient,
    rename_variables,
)
from .zerodim import (
    ZeroCount,
    _count_and_radical,
    minimal_polynomial,
    rational_roots,
    squarefree_part,
)

MAX_COMPARE_ARITY = 8


class ArityLimitError(ValueError):
    """Refusal: the permutation search would exceed the arity guard."""


@dataclass(frozen=True)
class JacobianMatrix:
    """Matrix of partial derivatives, one row per polynomial, one column per
    ring variable (in declaration order)."""

    entries: tuple[tuple[Polynomial, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def ring(self):
        return self.entries[0][0].ring


def jacobian(polys: Sequence[Polynomial]) -> JacobianMatrix:
    polys = list(polys)
    if not polys:
        raise ValueError("jacobian of an empty polynomial list")
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise RingMismatchError("jacobian rows over different rings")
    return JacobianMatrix(tuple(gradient(p) for p in polys))


def minors(matrix: JacobianMatrix, size: int) -> list[Polynomial]:
    """All size x size subdeterminants, in lexicographic order of
    (row subset, column subset).  Cofactor expansion up to 3x3, fraction-free
    Bareiss elimination above."""
    if size < 1 or size > min(matrix.rows, matrix.cols):
        raise ValueError(
            f"minor size {size} out of range for a {matrix.rows}x{matrix.cols} matrix"
        )
    ring = matrix.ring
    one = Polynomial.constant(ring, 1)
    out = []
    for rows in itertools.combinations(range(matrix.rows), size):
        for cols in itertools.combinations(range(matrix.cols), size):
            sub = [[matrix.entries[r][c] for c in cols] for r in rows]
            out.append(det(sub, one, exact_quotient))
    return out


class ElementaryIdealFamily:
    """The chain E_0 included in E_1 included in ... for one generator list:
    E_k is generated by the (n-k) x (n-k) Jacobian minors, with E_k = 0 when
    n-k exceeds the row count and E_k the unit ideal when n-k <= 0."""

    def __init__(self, polys: Sequence[Polynomial]):
        self.polys = list(polys)
        if not self.polys:
            raise ValueError("elementary ideals of an empty polynomial list")
        self.ring = self.polys[0].ring
        self.matrix = jacobian(self.polys)
        self._cache: dict[int, Ideal] = {}

    @property
    def arity(self) -> int:
        return self.ring.arity

    @property
    def generator_count(self) -> int:
        return len(self.polys)

    def ideal(self, k: int) -> Ideal:
        if k < 0:
            raise ValueError("elementary ideal index must be non-negative")
        got = self._cache.get(k)
        if got is None:
            size = self.arity - k
            if size > self.generator_count:
                got = Ideal(self.ring, ())
            elif size <= 0:
                got = Ideal(self.ring, (Polynomial.constant(self.ring, 1),))
            else:
                got = Ideal(self.ring, minors(self.matrix, size))
            self._cache[k] = got
        return got


def elementary_ideal(polys: Sequence[Polynomial], k: int) -> Ideal:
    return ElementaryIdealFamily(polys).ideal(k)


@dataclass(frozen=True)
class InvariantVerdict:
    """Outcome of one elementary-ideal comparison.

    ``equal`` False certifies the varieties are not isomorphic; True only
    says this invariant cannot tell them apart.  When True,
    ``witness_renaming`` gives the image names, aligned with the ring's
    declaration order, of the first variable permutation making the ideals
    coincide.
    """

    k: int
    equal: bool
    witness_renaming: tuple[str, ...] | None
    left_basis: tuple[Polynomial, ...]
    right_basis: tuple[Polynomial, ...]


def compare_invariants(
    left: Sequence[Polynomial],
    right: Sequence[Polynomial],
    modulo: Ideal,
    k: int,
    max_arity: int = MAX_COMPARE_ARITY,
    order: MonomialOrder | None = None,
) -> InvariantVerdict:
    """Test E_k(left) + R against E_k(right) + R under every variable
    permutation of the left side; the first success (permutations taken in
    lexicographic order, identity first) is reported as the witness."""
    ring = modulo.ring
    for p in list(left) + list(right):
        if p.ring != ring:
            raise RingMismatchError("comparison operands over different rings")
    if ring.arity > max_arity:
        raise ArityLimitError(
            f"refusing a permutation search over {ring.arity} variables "
            f"(limit {max_arity})"
        )
    if order is None:
        order = default_order(ring)
    left_ideal = ideal_sum(elementary_ideal(left, k), modulo)
    right_ideal = ideal_sum(elementary_ideal(right, k), modulo)
    left_basis = left_ideal.groebner_basis(order)
    right_basis = right_ideal.groebner_basis(order)
    for image in itertools.permutations(ring.names):
        mapping = dict(zip(ring.names, image))
        renamed = Ideal(
            ring,
            [change_ring(rename_variables(g, mapping), ring) for g in left_ideal.generators],
        )
        if ideal_equal(renamed, right_ideal, order):
            return InvariantVerdict(k, True, tuple(image), left_basis, right_basis)
    return InvariantVerdict(k, False, None, left_basis, right_basis)


@dataclass(frozen=True)
class QuasiSingularReport:
    """Zeros of the gradient of a hypersurface polynomial.

    ``rational_points`` lists the common zeros with all-rational
    coordinates; the list is exhaustive for the whole complex zero set
    exactly when ``points_exhaustive`` is True (every per-variable minimal
    polynomial splits into rational linear factors).
    ``multiplicity_dimension`` is the quotient dimension before the radical,
    present only for finite counts.
    """

    count: ZeroCount
    gradient: tuple[Polynomial, ...]
    rational_points: tuple[RationalPoint, ...]
    multiplicity_dimension: int | None
    points_exhaustive: bool


def quasi_singular(p: Polynomial) -> QuasiSingularReport:
    """Count the distinct complex zeros of grad(p) and enumerate the rational
    ones.  Differing counts for two polynomials certify that no algebraic or
    holomorphic ambient automorphism maps one hypersurface onto the other."""
    if p.is_constant:
        raise ValueError("quasi-singular analysis needs a nonconstant polynomial")
    grads = gradient(p)
    ideal = Ideal(p.ring, grads)
    count, radical = _count_and_radical(ideal)
    points: list[RationalPoint] = []
    exhaustive = count.is_empty
    if count.is_finite and radical is not None:
        per_var_roots = []
        exhaustive = True
        for var in p.ring.names:
            m = squarefree_part(minimal_polynomial(radical, var))
            roots, split = rational_roots(m)
            per_var_roots.append(roots)
            exhaustive = exhaustive and split
        for combo in itertools.product(*per_var_roots):
            if all(evaluate(g, combo) == 0 for g in grads):
                points.append(RationalPoint(tuple(combo)))
        points.sort(key=lambda pt: pt.coordinates)
    return QuasiSingularReport(
        count=count,
        gradient=grads,
        rational_points=tuple(points),
        multiplicity_dimension=count.multiplicity_dimension,
        points_exhaustive=exhaustive,
    )
