"""Exact multivariate polynomial arithmetic over the rationals.

The coefficient field is Q, represented by ``fractions.Fraction`` with
arbitrary-precision integers, so no operation ever rounds.  A polynomial is
a sparse map from exponent tuples to nonzero coefficients over a fixed,
ordered variable set.  Values are canonical: equal polynomials hold
identical term maps, and terms are stored in descending degrevlex order
(declaration priority), which makes iteration and serialization
deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]

_IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class RingMismatchError(ValueError):
    """Operands belong to different variable sets."""


class UnknownVariableError(ValueError):
    """A variable name is not part of the ring."""


@dataclass(frozen=True)
class VarSet:
    """Ordered set of distinct variable names; declaration order matters."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not _IDENTIFIER.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(
                f"variable {name!r} is not one of ({', '.join(self.names)})"
            ) from None

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __iter__(self):
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __str__(self) -> str:
        return ", ".join(self.names)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponentwise difference; the caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def total_degree(m: Monomial) -> int:
    return sum(m)


def canonical_key(m: Monomial) -> tuple[int, ...]:
    """Degrevlex sort key with declaration priority (ascending)."""
    return (sum(m), *(-e for e in reversed(m)))


class Polynomial:
    """Immutable polynomial in canonical form over a :class:`VarSet`.

    ``terms`` maps exponent tuples to nonzero Fractions and must be treated
    as read-only.  The empty map is the zero polynomial.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: VarSet, terms: Mapping[Monomial, Fraction | int] | Iterable = ()):
        arity = ring.arity
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != arity:
                raise ValueError(f"monomial {mono} does not match arity {arity}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in monomial {mono}")
            c = acc.get(mono, _ZERO) + Fraction(coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        self.ring = ring
        self.terms = dict(sorted(acc.items(), key=lambda kv: canonical_key(kv[0]), reverse=True))
        self._hash = None

    @classmethod
    def zero(cls, ring: VarSet) -> "Polynomial":
        return cls(ring)

    @classmethod
    def constant(cls, ring: VarSet, value: Fraction | int) -> "Polynomial":
        return cls(ring, {(0,) * ring.arity: Fraction(value)})

    @classmethod
    def variable(cls, ring: VarSet, name: str) -> "Polynomial":
        exps = [0] * ring.arity
        exps[ring.index(name)] = 1
        return cls(ring, {tuple(exps): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), _ZERO)

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def variables(self) -> tuple[str, ...]:
        """Names of the variables actually occurring, in declaration order."""
        seen = [False] * self.ring.arity
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    seen[i] = True
        return tuple(n for n, s in zip(self.ring.names, seen) if s)

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"rings differ: ({self.ring}) vs ({other.ring})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(self.ring, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self.terms.items())))
        return self._hash

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, _ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial(self.ring)
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_mul(ma, mb)
                v = out.get(m, _ZERO) + ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


_ZERO = Fraction(0)


@dataclass(frozen=True)
class RationalPoint:
    """A point with exact rational coordinates."""

    coordinates: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coordinates", tuple(Fraction(c) for c in self.coordinates))

    @classmethod
    def of(cls, *values) -> "RationalPoint":
        return cls(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.coordinates)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coordinates) + ")"


def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    """Formal partial derivative of ``p`` with respect to ``var``."""
    idx = p.ring.index(var)
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        e = m[idx]
        if e:
            lowered = m[:idx] + (e - 1,) + m[idx + 1:]
            out[lowered] = out.get(lowered, _ZERO) + c * e
    return Polynomial(p.ring, out)


def gradient(p: Polynomial) -> tuple[Polynomial, ...]:
    """All partial derivatives, in declaration order."""
    return tuple(partial_derivative(p, v) for v in p.ring.names)


def substitute(
    p: Polynomial,
    mapping: Mapping[str, Polynomial],
    target: VarSet | None = None,
) -> Polynomial:
    """Image of ``p`` under the ring homomorphism sending each mapped
    variable to its image polynomial.

    Every image must live over the same target ring; unmapped variables of
    ``p``'s ring must exist in the target and are sent to themselves.
    """
    for name in mapping:
        p.ring.index(name)
    if target is None:
        images = list(mapping.values())
        target = images[0].ring if images else p.ring
    images_by_index: dict[int, Polynomial] = {}
    for i, name in enumerate(p.ring.names):
        if name in mapping:
            img = mapping[name]
            if img.ring != target:
                raise RingMismatchError(
                    f"image of {name!r} lives over ({img.ring}), expected ({target})"
                )
            images_by_index[i] = img
        else:
            images_by_index[i] = Polynomial.variable(target, name)
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        got = powers.get((i, e))
        if got is None:
            got = images_by_index[i] ** e
            powers[(i, e)] = got
        return got

    total = Polynomial.zero(target)
    for m, c in p.terms.items():
        piece = Polynomial.constant(target, c)
        for i, e in enumerate(m):
            if e:
                piece = piece * power(i, e)
        total = total + piece
    return total


def evaluate(p: Polynomial, point: RationalPoint | Sequence) -> Fraction:
    """Exact value of ``p`` at a rational point."""
    coords = point.coordinates if isinstance(point, RationalPoint) else tuple(Fraction(c) for c in point)
    if len(coords) != p.ring.arity:
        raise ValueError(f"point has {len(coords)} coordinates, ring has arity {p.ring.arity}")
    total = _ZERO
    for m, c in p.terms.items():
        term = c
        for e, v in zip(m, coords):
            if e:
                term *= v ** e
        total += term
    return total


def change_ring(p: Polynomial, target: VarSet) -> Polynomial:
    """Re-express ``p`` over ``target``, matching variables by name.

    Every variable occurring in ``p`` must exist in ``target``; variables may
    be reordered, added, or (if unused) dropped.
    """
    if target == p.ring:
        return p
    positions = []
    for i, name in enumerate(p.ring.names):
        positions.append(target.names.index(name) if name in target.names else -1)
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        exps = [0] * target.arity
        for i, e in enumerate(m):
            if not e:
                continue
            j = positions[i]
            if j < 0:
                raise UnknownVariableError(
                    f"variable {p.ring.names[i]!r} occurs in the polynomial "
                    f"but not in the target ring ({target})"
                )
            exps[j] = e
        out[tuple(exps)] = c
    return Polynomial(target, out)


def rename_variables(p: Polynomial, mapping: Mapping[str, str]) -> Polynomial:
    """Rename variables positionally: the result ring has the same slots with
    new names, and exponent vectors are untouched."""
    new_names = tuple(mapping.get(n, n) for n in p.ring.names)
    return Polynomial(VarSet(new_names), p.terms)


def integer_primitive(p: Polynomial, key=canonical_key) -> Polynomial:
    """Scale ``p`` to integer coefficients with content 1 and a positive
    leading coefficient with respect to ``key``."""
    if p.is_zero:
        return p
    denom_lcm = 1
    for c in p.terms.values():
        denom_lcm = lcm(denom_lcm, c.denominator)
    nums = [c.numerator * (denom_lcm // c.denominator) for c in p.terms.values()]
    content = 0
    for n in nums:
        content = gcd(content, n)
    lead = max(p.terms, key=key)
    sign = -1 if p.terms[lead] < 0 else 1
    factor = Fraction(denom_lcm, sign * content)
    return Polynomial(p.ring, {m: c * factor for m, c in p.terms.items()})


def format_polynomial(p: Polynomial, key=None) -> str:
    """Render ``p`` exactly, terms descending by ``key`` (default degrevlex
    with declaration priority)."""
    if p.is_zero:
        return "0"
    monos = list(p.terms)
    if key is not None:
        monos.sort(key=key, reverse=True)
    names = p.ring.names
    pieces: list[str] = []
    for m in monos:
        c = p.terms[m]
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)
