import random
from fractions import Fraction

import pytest

from symalg.blockform import (
    BlockForm,
    conjugate_j,
    conjugate_x,
    from_block,
    nu_sign,
    to_block,
)
from symalg.matrix import (
    Matrix,
    Vector,
    all_ones,
    alternating,
    block_involution,
    exchange,
    identity,
    ones,
    zero_vector,
)
from symalg.scalar import SQRT2, Scalar


def rand_matrix(n, rng):
    return Matrix(n, tuple(Scalar(rng.randint(-9, 9)) for _ in range(n * n)))


def test_all_ones_block_even():
    assert to_block(all_ones(2)).conjugate == Matrix.from_rows([[2, 0], [0, 0]])
    b = to_block(all_ones(4)).conjugate
    assert b.y_block if isinstance(b, BlockForm) else True  # sliced below
    bf = to_block(all_ones(4))
    assert bf.y_block == all_ones(2).scale(2)
    assert bf.vt_block.is_zero() and bf.w_block.is_zero() and bf.z_block.is_zero()


def test_all_ones_block_odd():
    bf = to_block(all_ones(3))
    assert bf.conjugate == Matrix.from_rows(
        [[2, SQRT2, 0], [SQRT2, 1, 0], [0, 0, 0]]
    )
    assert bf.y_block == all_ones(1).scale(2)
    assert bf.v_col == Vector([SQRT2])
    assert bf.alpha == Scalar(1)
    assert bf.x_col.is_zero() and bf.z_row.is_zero()


def test_hand_conjugation():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert to_block(m).conjugate == Matrix.from_rows([[5, -1], [-2, 0]])


def test_half_turn_rotation():
    assert conjugate_j(identity(3)) == identity(3)
    assert conjugate_j(Matrix.from_rows([[1, 2], [3, 4]])) == Matrix.from_rows(
        [[4, 3], [2, 1]]
    )
    rng = random.Random(0)
    m = rand_matrix(5, rng)
    assert conjugate_j(conjugate_j(m)) == m
    assert conjugate_j(m) == exchange(5) @ m @ exchange(5)


def test_exchange_conjugate_in_block_form():
    # X·J·X is diagonal ±identity blocks, both parities.
    assert conjugate_x(exchange(2)) == Matrix.from_rows([[1, 0], [0, -1]])
    assert conjugate_x(exchange(5)) == Matrix.from_rows(
        [
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, -1, 0],
            [0, 0, 0, 0, -1],
        ]
    )


def test_involution_round_trip_thousand_matrices():
    rng = random.Random(1)
    for n in range(1, 10):
        for _ in range(112):
            m = rand_matrix(n, rng)
            assert from_block(to_block(m)) == m


def test_conjugation_is_algebra_homomorphism():
    rng = random.Random(2)
    for n in (2, 3, 4, 5, 6):
        a, b = rand_matrix(n, rng), rand_matrix(n, rng)
        assert to_block(a @ b).conjugate == to_block(a).conjugate @ to_block(b).conjugate


def test_views_reassemble_exactly():
    rng = random.Random(3)
    for n in (4, 7):
        bf = to_block(rand_matrix(n, rng))
        nu = bf.nu
        c = bf.conjugate
        for i in range(nu):
            for j in range(nu):
                assert bf.y_block[i, j] == c[i, j]
                assert bf.vt_block[i, j] == c[i, n - nu + j]
                assert bf.w_block[i, j] == c[n - nu + i, j]
                assert bf.z_block[i, j] == c[n - nu + i, n - nu + j]
        if bf.odd:
            for i in range(nu):
                assert bf.v_col[i] == c[i, nu]
                assert bf.x_col[i] == c[nu + 1 + i, nu]
                assert bf.y_row[i] == c[nu, i]
                assert bf.z_row[i] == c[nu, nu + 1 + i]
            assert bf.alpha == c[nu, nu]
        else:
            with pytest.raises(ValueError):
                bf.v_col


def test_nu_sign_convention():
    # The single ± convention: J_ν·Σ_ν = −Σ_ν exactly for even ν.
    for nu in range(1, 8):
        s = nu_sign(nu)
        assert exchange(nu).apply(alternating(nu)) == alternating(nu).scale(-s)


def test_image_of_ones_vector():
    for n in (4, 6):
        nu = n // 2
        img = block_involution(n).apply(ones(n))
        assert img == Vector(list(ones(nu).scale(SQRT2)) + list(zero_vector(nu)))
    for n in (3, 5, 7):
        nu = n // 2
        img = block_involution(n).apply(ones(n))
        expected = list(ones(nu).scale(SQRT2)) + [Scalar(1)] + list(zero_vector(nu))
        assert img == Vector(expected)


def test_image_of_alternating_vector():
    # Even n: X·Σ_n = ∓√2·(0, Σ_ν); odd n: (√2·Σ_ν, ±1, 0) — upper sign
    # when ν is even.
    for n in (4, 6, 8):
        nu = n // 2
        s = nu_sign(nu)
        img = block_involution(n).apply(alternating(n))
        tail = alternating(nu).scale(SQRT2 * (-s))
        assert img == Vector(list(zero_vector(nu)) + list(tail))
    for n in (3, 5, 7, 9):
        nu = n // 2
        s = nu_sign(nu)
        img = block_involution(n).apply(alternating(n))
        expected = (
            list(alternating(nu).scale(SQRT2)) + [Scalar(s)] + list(zero_vector(nu))
        )
        assert img == Vector(expected)
