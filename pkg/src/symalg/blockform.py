"""Block representation of square matrices by conjugation with X_n.

`to_block` maps M to C = X_n·M·X_n
and names the sub-blocks of C; since X_n is an involution the map is its
own inverse, and since conjugation is an algebra homomorphism, products of
block representations are block representations of products.

The parity-dependent layout of C for n = 2ν+1 splits rows and columns as
(ν, 1, ν):

    [ Y   v   Vᵀ ]
    [ yᵀ  α   zᵀ ]
    [ W   x   Z  ]

and for even n = 2ν as (ν, ν) with blocks Y, Vᵀ, W, Z.
"""

from __future__ import annotations

from .matrix import Matrix, Vector, block_involution
from .scalar import Scalar


def nu_sign(nu: int) -> int:
    """+1 for even ν, −1 for odd ν.

    This is the single ±/∓ convention used throughout the odd-dimensional
    representation formulas ("the upper sign applies if ν is even"); it is
    centralized here because J_ν·Σ_ν = −Σ_ν exactly when ν is even.
    """
    return 1 if nu % 2 == 0 else -1


def conjugate_x(m: Matrix) -> Matrix:
    """X_n·M·X_n — self-inverse, exact."""
    x = block_involution(m.n)
    return x @ m @ x


def conjugate_j(m: Matrix) -> Matrix:
    """J_n·M·J_n: rotates the matrix by a half-turn."""
    n = m.n
    e = m.entries
    return Matrix(
        n,
        tuple(
            e[(n - 1 - i) * n + (n - 1 - j)] for i in range(n) for j in range(n)
        ),
    )


class BlockForm:
    """The conjugate C = X_n·M·X_n with named views into its sub-blocks.

    Stores the full conjugate plus index ranges only; views are sliced out
    on demand, so reassembly is trivially exact.
    """

    __slots__ = ("n", "nu", "odd", "conjugate")

    def __init__(self, conjugate: Matrix):
        object.__setattr__(self, "conjugate", conjugate)
        object.__setattr__(self, "n", conjugate.n)
        object.__setattr__(self, "nu", conjugate.n // 2)
        object.__setattr__(self, "odd", conjugate.n % 2 == 1)

    def __setattr__(self, name, value):
        raise AttributeError("BlockForm is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockForm) and self.conjugate == other.conjugate

    def _sub(self, rows: range, cols: range) -> Matrix:
        c = self.conjugate
        k = len(rows)
        return Matrix(k, tuple(c[i, j] for i in rows for j in cols))

    def _lo(self) -> range:
        return range(0, self.nu)

    def _hi(self) -> range:
        return range(self.n - self.nu, self.n)

    @property
    def y_block(self) -> Matrix:
        """Top-left ν×ν block Y."""
        return self._sub(self._lo(), self._lo())

    @property
    def vt_block(self) -> Matrix:
        """Top-right ν×ν block (Vᵀ in the layout)."""
        return self._sub(self._lo(), self._hi())

    @property
    def w_block(self) -> Matrix:
        """Bottom-left ν×ν block W."""
        return self._sub(self._hi(), self._lo())

    @property
    def z_block(self) -> Matrix:
        """Bottom-right ν×ν block Z."""
        return self._sub(self._hi(), self._hi())

    # Central row/column views exist only for odd n.

    def _central(self) -> int:
        if not self.odd:
            raise ValueError("central views are defined only for odd n")
        return self.nu

    @property
    def v_col(self) -> Vector:
        c = self._central()
        return Vector([self.conjugate[i, c] for i in self._lo()])

    @property
    def x_col(self) -> Vector:
        c = self._central()
        return Vector([self.conjugate[i, c] for i in self._hi()])

    @property
    def y_row(self) -> Vector:
        c = self._central()
        return Vector([self.conjugate[c, j] for j in self._lo()])

    @property
    def z_row(self) -> Vector:
        c = self._central()
        return Vector([self.conjugate[c, j] for j in self._hi()])

    @property
    def alpha(self) -> Scalar:
        c = self._central()
        return self.conjugate[c, c]


def to_block(m: Matrix) -> BlockForm:
    return BlockForm(conjugate_x(m))


def from_block(b: BlockForm) -> Matrix:
    return conjugate_x(b.conjugate)
