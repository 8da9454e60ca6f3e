from symalg.elim import Echelon, echelon_of, nullspace_of_rows, rank_of_rows
from symalg.scalar import ONE, ZERO, Scalar


def S(x):
    return Scalar(x)


def test_rank_and_nullspace_of_simple_system():
    rows = [
        [S(1), S(2), S(3)],
        [S(2), S(4), S(6)],
        [S(0), S(1), S(1)],
    ]
    assert rank_of_rows(rows) == 2
    basis = nullspace_of_rows(rows, 3)
    assert len(basis) == 1
    for row in rows:
        acc = ZERO
        for c, x in zip(row, basis[0]):
            acc = acc + c * x
        assert acc.is_zero()


def test_nullspace_of_empty_system_is_everything():
    basis = nullspace_of_rows([], 3)
    assert len(basis) == 3


def test_echelon_span_membership():
    ech = echelon_of([[S(1), S(0), S(1)], [S(0), S(1), S(1)]])
    assert ech.contains([S(2), S(3), S(5)])
    assert not ech.contains([S(0), S(0), S(1)])
    assert ech.rank == 2


def test_echelon_rejects_dependent_rows():
    ech = Echelon(2)
    assert ech.add([ONE, ONE])
    assert not ech.add([S(2), S(2)])
    assert ech.rank == 1


def test_exact_sqrt2_pivoting():
    # Rows proportional over Q(√2) but not over Q must still collapse.
    rows = [[Scalar(0, 1), S(2)], [S(2), Scalar(0, 2)]]
    assert rank_of_rows(rows) == 1
