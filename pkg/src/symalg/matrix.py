"""Dense vectors and square matrices over Q(√2).

Values are immutable after construction; all operations return fresh
objects, so instances can be shared freely between threads.  Sizes here are
desk-scale (n ≲ 64), so storage is a flat row-major tuple and products are
straight triple loops with an integer-triple accumulator.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionError
from .scalar import ONE, SQRT2, ZERO, Scalar, as_scalar


class Vector:
    """Column vector with exact entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Iterable):
        e = tuple(as_scalar(x) for x in entries)
        object.__setattr__(self, "n", len(e))
        object.__setattr__(self, "entries", e)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: Vector) -> Vector:
        _same_length(self, other)
        return Vector(x + y for x, y in zip(self.entries, other.entries))

    def __sub__(self, other: Vector) -> Vector:
        _same_length(self, other)
        return Vector(x - y for x, y in zip(self.entries, other.entries))

    def __neg__(self) -> Vector:
        return Vector(-x for x in self.entries)

    def scale(self, c) -> Vector:
        c = as_scalar(c)
        return Vector(c * x for x in self.entries)

    def dot(self, other: Vector) -> Scalar:
        _same_length(self, other)
        acc = ZERO
        for x, y in zip(self.entries, other.entries):
            acc = acc + x * y
        return acc

    def outer(self, other: Vector) -> Matrix:
        """Rank-≤1 square matrix self·otherᵀ (lengths must match)."""
        _same_length(self, other)
        return Matrix(self.n, tuple(x * y for x in self.entries for y in other.entries))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def __repr__(self) -> str:
        return "Vector([" + ", ".join(str(x) for x in self.entries) + "])"


def _same_length(u: Vector, v: Vector) -> None:
    if u.n != v.n:
        raise DimensionError(f"vector lengths differ: {u.n} vs {v.n}")


class Matrix:
    """Square n×n matrix over Q(√2), row-major."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: tuple):
        if n < 1:
            raise DimensionError(f"matrix dimension must be positive, got {n}")
        if len(entries) != n * n:
            raise DimensionError(f"expected {n * n} entries, got {len(entries)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise DimensionError("matrix rows must all have length n")
        return cls(n, tuple(as_scalar(x) for row in rows for x in row))

    def __getitem__(self, ij: tuple) -> Scalar:
        i, j = ij
        return self.entries[i * self.n + j]

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i * self.n : (i + 1) * self.n])

    def col(self, j: int) -> Vector:
        return Vector(self.entries[j :: self.n])

    def rows(self) -> list[list[Scalar]]:
        n = self.n
        return [list(self.entries[i * n : (i + 1) * n]) for i in range(n)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.n == other.n
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n, self.entries))

    def __add__(self, other: Matrix) -> Matrix:
        _same_dim(self, other)
        return Matrix(self.n, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        _same_dim(self, other)
        return Matrix(self.n, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return Matrix(self.n, tuple(-x for x in self.entries))

    def scale(self, c) -> Matrix:
        c = as_scalar(c)
        return Matrix(self.n, tuple(c * x for x in self.entries))

    def __matmul__(self, other):
        if isinstance(other, Vector):
            return self.apply(other)
        _same_dim(self, other)
        n = self.n
        a, b = self.entries, other.entries
        out = []
        # Accumulates each entry as one integer triple (P + Q√2)/D and
        # normalizes once, instead of allocating a Scalar per partial sum.
        for i in range(n):
            arow = a[i * n : (i + 1) * n]
            for j in range(n):
                P = Q = 0
                D = 1
                for k in range(n):
                    x = arow[k]
                    y = b[k * n + j]
                    if (x.p == 0 and x.q == 0) or (y.p == 0 and y.q == 0):
                        continue
                    pp = x.p * y.p + 2 * x.q * y.q
                    qq = x.p * y.q + x.q * y.p
                    dd = x.d * y.d
                    if D == dd:
                        P += pp
                        Q += qq
                    else:
                        P = P * dd + pp * D
                        Q = Q * dd + qq * D
                        D *= dd
                out.append(Scalar._make(P, Q, D))
        return Matrix(n, tuple(out))

    def apply(self, v: Vector) -> Vector:
        if v.n != self.n:
            raise DimensionError(f"matrix is {self.n}×{self.n}, vector has length {v.n}")
        n = self.n
        out = []
        for i in range(n):
            acc = ZERO
            row = self.entries[i * n : (i + 1) * n]
            for x, y in zip(row, v.entries):
                if not (x.is_zero() or y.is_zero()):
                    acc = acc + x * y
            out.append(acc)
        return Vector(out)

    def transpose(self) -> Matrix:
        n = self.n
        e = self.entries
        return Matrix(n, tuple(e[j * n + i] for i in range(n) for j in range(n)))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def total_sum(self) -> Scalar:
        acc = ZERO
        for x in self.entries:
            acc = acc + x
        return acc

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(self[i, j]) for j in range(self.n)) for i in range(self.n)
        )
        return f"Matrix({self.n}: [{body}])"


def _same_dim(a: Matrix, b: Matrix) -> None:
    if a.n != b.n:
        raise DimensionError(f"matrix dimensions differ: {a.n} vs {b.n}")


# -- special matrices and vectors -------------------------------------------


def zeros(n: int) -> Matrix:
    _check_positive(n)
    return Matrix(n, (ZERO,) * (n * n))


def identity(n: int) -> Matrix:
    _check_positive(n)
    return Matrix(n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))


def all_ones(n: int) -> Matrix:
    _check_positive(n)
    return Matrix(n, (ONE,) * (n * n))


def exchange(n: int) -> Matrix:
    """Antidiagonal permutation matrix: ones at (i, n+1−i)."""
    _check_positive(n)
    return Matrix(
        n, tuple(ONE if i + j == n - 1 else ZERO for i in range(n) for j in range(n))
    )


def block_involution(n: int) -> Matrix:
    """The orthogonal symmetric involution used for the block transform.

    For n = 2ν this is (1/√2)·[[I_ν, J_ν], [J_ν, −I_ν]]; for n = 2ν+1 the
    same pattern bordered by a central row/column with a lone 1.  Satisfies
    Xᵀ = X and X² = I for every n ≥ 1 (X_1 = (1)).
    """
    _check_positive(n)
    if n == 1:
        return identity(1)
    nu, odd = divmod(n, 2)
    h = SQRT2 / 2  # 1/√2
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(nu):
        rows[i][i] = h
        rows[i][n - 1 - i] = h
        rows[n - 1 - i][i] = h
        rows[n - 1 - i][n - 1 - i] = -h
    if odd:
        rows[nu][nu] = ONE
    return Matrix(n, tuple(x for row in rows for x in row))


_MATRIX_KINDS = {
    "E": all_ones,
    "O": zeros,
    "J": exchange,
    "I": identity,
    "X": block_involution,
}


def special_matrix(kind: str, n: int) -> Matrix:
    """Named matrix by tag: E (all ones), O (zero), J (antidiagonal), I, X."""
    try:
        builder = _MATRIX_KINDS[kind.upper()]
    except KeyError:
        raise ValueError(f"unknown special matrix kind {kind!r}") from None
    return builder(n)


def ones(n: int) -> Vector:
    _check_positive(n)
    return Vector([ONE] * n)


def zero_vector(n: int) -> Vector:
    _check_positive(n)
    return Vector([ZERO] * n)


def alternating(n: int) -> Vector:
    """The vector with (−1)^(j−1) in position j: (1, −1, 1, …).

    Orthogonal to the all-ones vector exactly when n is even; for odd n the
    last entry is 1 and the dot product is 1.
    """
    _check_positive(n)
    return Vector([ONE if j % 2 == 0 else -ONE for j in range(n)])


_VECTOR_KINDS = {"ones": ones, "zeros": zero_vector, "sigma": alternating}


def special_vector(kind: str, n: int) -> Vector:
    try:
        builder = _VECTOR_KINDS[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown special vector kind {kind!r}") from None
    return builder(n)


def _check_positive(n: int) -> None:
    if n < 1:
        raise DimensionError(f"dimension must be positive, got {n}")


# -- rank / nullity ----------------------------------------------------------


def rank(m: Matrix) -> int:
    """Exact rank by Gaussian elimination over Q(√2)."""
    from .elim import rank_of_rows

    return rank_of_rows(m.rows())


def nullspace_dim(m: Matrix) -> int:
    return m.n - rank(m)
