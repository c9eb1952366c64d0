"""Finite presentations of residue-class algebras and the moves that
preserve their isomorphism type.

A presentation is a variable set plus relator polynomials r (each read as
the relation r = 0); it presents K[vars]/<relators>.  The legal moves are:
introduce a fresh variable with a defining relator, cancel a variable that
has a (scalar-normalized) linear defining relator, rename variables, and
rewrite the relator list by any list generating the same ideal.  Chains of
these moves are the certificates checked by :mod:`varinv.certfile`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .groebner import Ideal, default_order, ideal_equal
from .polyring import (
    Polynomial,
    VarSet,
    change_ring,
    rename_variables,
    substitute,
)


class StepError(ValueError):
    """A presentation move whose precondition does not hold."""


class RewriteMismatchError(StepError):
    """Proposed relators generate a different ideal; carries both reduced
    bases for diagnostics."""

    def __init__(self, message: str, current_basis, proposed_basis):
        super().__init__(message)
        self.current_basis = tuple(current_basis)
        self.proposed_basis = tuple(proposed_basis)


@dataclass(frozen=True)
class Presentation:
    """Variable set plus relator list; equality of the presented algebras is
    checked through relator-ideal equality."""

    vars: VarSet
    relators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            if r.ring != self.vars:
                raise ValueError("relator lives over a different ring")

    def relator_ideal(self) -> Ideal:
        return Ideal(self.vars, self.relators)

    def __str__(self) -> str:
        rels = "; ".join(str(r) for r in self.relators) or "0"
        return f"<{self.vars} | {rels}>"


def introduce(pres: Presentation, name: str, defining: Polynomial) -> Presentation:
    """Adjoin a fresh variable ``name`` with relator name - defining."""
    if name in pres.vars:
        raise StepError(f"variable {name!r} already exists")
    if defining.ring != pres.vars:
        raise StepError("defining polynomial must live over the current variables")
    bigger = VarSet(pres.vars.names + (name,))
    lifted = tuple(change_ring(r, bigger) for r in pres.relators)
    relator = Polynomial.variable(bigger, name) - change_ring(defining, bigger)
    return Presentation(bigger, lifted + (relator,))


def _linear_relator_shape(relator: Polynomial, idx: int) -> Polynomial | None:
    """If ``relator`` is c*y - p with c a nonzero scalar and p free of y
    (y the variable at ``idx``), return p; otherwise None."""
    coeff: Fraction | None = None
    rest: dict = {}
    for m, c in relator.terms.items():
        if m[idx] == 0:
            rest[m] = c
        elif m[idx] == 1 and not any(e for j, e in enumerate(m) if j != idx):
            coeff = c
        else:
            return None
    if coeff is None:
        return None
    return Polynomial(relator.ring, {m: -c / coeff for m, c in rest.items()})


def cancel(pres: Presentation, name: str) -> Presentation:
    """Remove a variable defined by a linear relator c*name - p (p free of
    the variable), substituting p for it in the remaining relators."""
    idx = pres.vars.index(name)
    chosen = None
    for i, r in enumerate(pres.relators):
        p = _linear_relator_shape(r, idx)
        if p is not None:
            chosen = (i, p)
            break
    if chosen is None:
        raise StepError(
            f"no relator of the form c*{name} - p with p free of {name!r}"
        )
    i, image = chosen
    smaller = VarSet(tuple(n for n in pres.vars.names if n != name))
    image_small = change_ring(image, smaller)
    remaining = []
    for j, r in enumerate(pres.relators):
        if j == i:
            continue
        remaining.append(substitute(r, {name: image_small}, smaller))
    return Presentation(smaller, tuple(remaining))


def substituted_relator_count(pres: Presentation, name: str) -> int:
    """How many relators other than the defining one actually mention the
    variable about to be cancelled (recorded in verification reports)."""
    idx = pres.vars.index(name)
    chosen = None
    for i, r in enumerate(pres.relators):
        if _linear_relator_shape(r, idx) is not None:
            chosen = i
            break
    count = 0
    for j, r in enumerate(pres.relators):
        if j == chosen:
            continue
        if any(m[idx] for m in r.terms):
            count += 1
    return count


def rename(pres: Presentation, mapping: Mapping[str, str]) -> Presentation:
    """Rename variables simultaneously; the map must be injective and its
    images must avoid the names of unmapped variables."""
    for old in mapping:
        pres.vars.index(old)
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise StepError("renaming map is not injective")
    unmapped = {n for n in pres.vars.names if n not in mapping}
    for new in images:
        if new in unmapped:
            raise StepError(f"renaming collides with existing variable {new!r}")
    new_vars = VarSet(tuple(mapping.get(n, n) for n in pres.vars.names))
    return Presentation(new_vars, tuple(rename_variables(r, mapping) for r in pres.relators))


def rewrite(pres: Presentation, new_relators: Sequence[Polynomial]) -> Presentation:
    """Replace the relator list by one generating the same ideal."""
    new_relators = tuple(new_relators)
    for r in new_relators:
        if r.ring != pres.vars:
            raise StepError("proposed relator lives over a different ring")
    current = pres.relator_ideal()
    proposed = Ideal(pres.vars, new_relators)
    order = default_order(pres.vars)
    if not ideal_equal(current, proposed, order):
        raise RewriteMismatchError(
            "relator ideals differ",
            current.groebner_basis(order),
            proposed.groebner_basis(order),
        )
    return Presentation(pres.vars, new_relators)


def presentations_equal(left: Presentation, right: Presentation) -> bool:
    """Same variable names (order-insensitively) and equal relator ideals."""
    if set(left.vars.names) != set(right.vars.names):
        return False
    aligned = [change_ring(r, left.vars) for r in right.relators]
    return ideal_equal(left.relator_ideal(), Ideal(left.vars, aligned))
