"""Exact linear algebra over the rationals (and any integral domain whose
elements support +, -, * and an exact-division callback): cofactor and
fraction-free Bareiss determinants, plus an incremental row-space tracker
used for minimal-polynomial computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence


def det_cofactor(rows: Sequence[Sequence], one):
    """Determinant by first-row cofactor expansion; ``one`` is the
    multiplicative identity of the entry domain."""
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        piece = entry * det_cofactor(minor, one)
        if j % 2:
            piece = -piece
        total = piece if total is None else total + piece
    if total is None:
        return rows[0][0] - rows[0][0]  # zero of the domain
    return total


def det_bareiss(rows: Sequence[Sequence], one, exact_div: Callable):
    """Fraction-free Bareiss determinant.  ``exact_div(a, b)`` must return
    a/b exactly; divisibility is guaranteed by the Bareiss identity."""
    n = len(rows)
    if n == 0:
        return one
    m = [list(row) for row in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k]  # a zero column: determinant vanishes
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
            m[i][k] = m[k][k] - m[k][k]
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def det(rows: Sequence[Sequence], one, exact_div: Callable):
    """Exact determinant: cofactor expansion up to 3x3, Bareiss above."""
    if len(rows) <= 3:
        return det_cofactor(rows, one)
    return det_bareiss(rows, one, exact_div)


@dataclass(frozen=True)
class MatrixQ:
    """Rectangular matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise ValueError("rows have differing lengths")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "MatrixQ":
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return det(self.entries, Fraction(1), lambda a, b: a / b)


def _strip_content(row: list[Fraction]) -> list[Fraction]:
    """Scale a rational row to coprime integers (sign preserved)."""
    denom = 1
    for v in row:
        if v:
            denom = lcm(denom, v.denominator)
    content = 0
    for v in row:
        content = gcd(content, v.numerator * (denom // v.denominator))
    if content == 0:
        return row
    factor = Fraction(denom, content)
    return [v * factor for v in row]


class RowSpan:
    """Row space built one vector at a time with exact Gaussian elimination.

    Stored rows are content-stripped to keep coefficient growth in check.
    ``add`` reports the first linear dependence: if the new vector lies in
    the current span it returns coefficients ``c`` (over all vectors added
    so far, last coefficient 1) with ``sum(c[i] * vector_i) == 0``, and does
    not store the vector; otherwise it stores the vector and returns None.
    """

    def __init__(self, width: int):
        self.width = width
        self._rows: list[tuple[int, list[Fraction], list[Fraction]]] = []
        self._added = 0

    def add(self, vector: Sequence[Fraction | int]) -> list[Fraction] | None:
        if len(vector) != self.width:
            raise ValueError(f"vector has length {len(vector)}, expected {self.width}")
        v = [Fraction(x) for x in vector]
        combo = [Fraction(0)] * self._added + [Fraction(1)]
        for pivot_col, row, row_combo in self._rows:
            c = v[pivot_col]
            if c:
                f = c / row[pivot_col]
                v = [a - f * b for a, b in zip(v, row)]
                for i, rc in enumerate(row_combo):
                    combo[i] -= f * rc
        self._added += 1
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            return combo
        stripped = _strip_content(v)
        scale = stripped[pivot] / v[pivot]
        self._rows.append((pivot, stripped, [c * scale for c in combo]))
        return None

    @property
    def rank(self) -> int:
        return len(self._rows)
