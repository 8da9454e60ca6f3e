"""Exact Gaussian elimination over Q(√2).

Rows are plain lists of Scalars.  Pivoting picks the first nonzero entry in
a column — with exact arithmetic there is nothing to gain from magnitude
pivoting.  Pivot rows are normalized to a leading 1 and stored with their
support (nonzero column indices) so that reducing a new row only touches
the entries that can change.
"""

from __future__ import annotations

from .scalar import ZERO, Scalar


class Echelon:
    """Incrementally built reduced row echelon form.

    Feed rows with `add`; `pivots` maps pivot column → row index into
    `rows`.  Rows already inserted stay fully reduced against each other,
    so `reduce` returns the canonical residual of a vector modulo the row
    span.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Scalar]] = []
        self.supports: list[list[int]] = []
        self.pivots: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: list[Scalar]) -> list[Scalar]:
        """Residual of `row` after elimination against all pivot rows."""
        row = list(row)
        for col in sorted(self.pivots):
            f = row[col]
            if f.is_zero():
                continue
            idx = self.pivots[col]
            piv = self.rows[idx]
            for j in self.supports[idx]:
                row[j] = row[j] - f * piv[j]
        return row

    def add(self, row: list[Scalar]) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        row = self.reduce(row)
        lead = next((j for j, x in enumerate(row) if not x.is_zero()), None)
        if lead is None:
            return False
        inv = row[lead].inverse()
        row = [x * inv for x in row]
        support = [j for j, x in enumerate(row) if not x.is_zero()]
        # Back-substitute into existing rows to keep the form fully reduced.
        for idx, other in enumerate(self.rows):
            f = other[lead]
            if f.is_zero():
                continue
            for j in support:
                other[j] = other[j] - f * row[j]
            self.supports[idx] = [j for j, x in enumerate(other) if not x.is_zero()]
        self.rows.append(row)
        self.supports.append(support)
        self.pivots[lead] = len(self.rows) - 1
        return True

    def contains(self, row: list[Scalar]) -> bool:
        return all(x.is_zero() for x in self.reduce(row))


def echelon_of(rows: list[list[Scalar]], width: int | None = None) -> Echelon:
    if width is None:
        width = len(rows[0]) if rows else 0
    ech = Echelon(width)
    for row in rows:
        ech.add(row)
    return ech


def rank_of_rows(rows: list[list[Scalar]]) -> int:
    return echelon_of(rows).rank


def nullspace_of_rows(rows: list[list[Scalar]], width: int) -> list[list[Scalar]]:
    """Basis of {x : R·x = 0} for the stacked constraint rows R.

    Standard free-variable construction from the RREF: one basis vector per
    non-pivot column, with pivot coordinates read off the reduced rows.
    """
    ech = echelon_of(rows, width)
    pivot_cols = set(ech.pivots)
    one = Scalar(1)
    basis = []
    for free in range(width):
        if free in pivot_cols:
            continue
        vec = [ZERO] * width
        vec[free] = one
        for col, idx in ech.pivots.items():
            vec[col] = -ech.rows[idx][free]
        basis.append(vec)
    return basis
