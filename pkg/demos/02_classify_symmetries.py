#!/usr/bin/env python3
# Classifying matrices against the nine symmetry types.
#
# classify() decides each property twice — once from the entrywise sums,
# once from the matrix-algebra characterisation — and recovers the exact
# weights.  The report also flags membership in the composite spaces
# (most perfect squares, reversible squares, and friends).

from symalg import Matrix, all_ones, classify

# The all-ones matrix carries every symmetry with weight 1.
print("== all-ones, n = 4 ==")
print(classify(all_ones(4)).pretty())

# A 6×6 weightless most perfect square (every row/column sums to 0, every
# cyclic 2×2 block sums to 0, and entries half a period apart cancel).
most_perfect = Matrix.from_rows(
    [
        [-2, 3, 0, -4, 5, -2],
        [1, -2, -1, 5, -6, 3],
        [-2, 3, 0, -4, 5, -2],
        [4, -5, 2, 2, -3, 0],
        [-5, 6, -3, -1, 2, 1],
        [4, -5, 2, 2, -3, 0],
    ]
)
print("\n== a weightless most perfect square, n = 6 ==")
print(classify(most_perfect).pretty())

# An odd-dimensional matrix with the alternating-pairs property (N): the
# report marks the verdict as algebraic because the entrywise sums are
# strictly weaker for odd n.
odd_example = Matrix.from_rows([[1, 2, 1], [1, 0, -1], [0, -2, -2]])
print("\n== alternating-pairs example, n = 3 ==")
print(classify(odd_example).pretty())

# A generic matrix carries nothing.
print("\n== generic matrix ==")
print(classify(Matrix.from_rows([[1, 2], [3, 4]])).pretty())
