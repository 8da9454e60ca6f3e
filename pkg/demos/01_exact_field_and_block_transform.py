#!/usr/bin/env python3
# Exact arithmetic in Q(√2) and the block transform M ↦ X·M·X.
#
# Everything in this library is computed over the field of numbers
# a + b·√2 with rational a, b, so every identity below is checked with
# ==, never with a tolerance.

from fractions import Fraction

from symalg import (
    Matrix,
    Scalar,
    all_ones,
    block_involution,
    conjugate_x,
    exchange,
    from_block,
    identity,
    to_block,
)

# -- the field ---------------------------------------------------------------

root2 = Scalar(0, 1)
print("√2 · √2            =", root2 * root2)
print("(1+√2)(1−√2)       =", Scalar(1, 1) * Scalar(1, -1))
print("1 / (1+√2)         =", Scalar(1) / Scalar(1, 1))
print("(1/2 + 1/3·√2)⁻¹   =", Scalar(Fraction(1, 2), Fraction(1, 3)).inverse())

# Every nonzero element has an exact inverse; multiplying back gives 1.
x = Scalar(Fraction(-3, 7), Fraction(5, 2))
assert x * x.inverse() == Scalar(1)

# -- the involution X --------------------------------------------------------

# X_n is symmetric and squares to the identity, for both parities.
for n in (2, 3, 6, 7):
    x_n = block_involution(n)
    assert x_n == x_n.transpose()
    assert x_n @ x_n == identity(n)
print("\nX_3 =")
for i in range(3):
    print("   ", [str(block_involution(3)[i, j]) for j in range(3)])

# -- block representation ----------------------------------------------------

m = Matrix.from_rows([[1, 2], [3, 4]])
bf = to_block(m)
print("\nblock representation of [[1,2],[3,4]]:")
print("   ", bf.conjugate)
assert from_block(bf) == m  # conjugation is an involution

# Conjugation is an algebra homomorphism: the block of a product is the
# product of the blocks.
a = Matrix.from_rows([[0, 1, 2], [3, 4, 5], [6, 7, 8]])
b = Matrix.from_rows([[1, 0, 1], [0, 1, 0], [2, 0, 1]])
assert to_block(a @ b).conjugate == to_block(a).conjugate @ to_block(b).conjugate
print("\nhomomorphism check on a 3×3 product: exact")

# The all-ones matrix compresses into the top-left corner of its block form.
print("\nblock of the all-ones 3×3 matrix:")
print("   ", to_block(all_ones(3)).conjugate)

# The half-turn J conjugates to a signed identity.
print("\nX·J·X at n = 5:")
print("   ", conjugate_x(exchange(5)))
