"""Direct-sum splits of the full matrix space.

Four gradings decompose every square matrix exactly:

    balanced ⊕ associated      even = ½(M + J·M·J)
    semimagic ⊕ vertex-cross   projector P = 1·1ᵀ/n
    alternating ⊕ array-sum    projector P = Σ·Σᵀ/n
    quartered ⊕ pandiagonal    ν×ν block halves (even n only)

The projector splits use the closed forms even = P·M·P + (I−P)·M·(I−P),
odd = P·M·(I−P) + (I−P)·M·P, evaluated entrywise so no projector matrix is
ever materialised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blockform import conjugate_j
from .errors import DimensionError
from .matrix import Matrix, Vector, alternating, ones
from .scalar import Scalar


@dataclass(frozen=True)
class GradedPair:
    """Ordered (even-part, odd-part) result of one split."""

    kind: str
    even_part: Matrix
    odd_part: Matrix
    weight: Scalar | None = None

    def reassemble(self) -> Matrix:
        return self.even_part + self.odd_part


def split_ba(m: Matrix) -> GradedPair:
    """M = ½(M + JMJ) + ½(M − JMJ): balanced part plus associated part."""
    half = Scalar(1) / 2
    rot = conjugate_j(m)
    even = (m + rot).scale(half)
    odd = (m - rot).scale(half)
    return GradedPair("BA", even, odd)


def _projector_split(m: Matrix, y: Vector, kind: str) -> GradedPair:
    n = m.n
    yy = y.dot(y)
    my = m.apply(y)  # M·y
    ytm = m.transpose().apply(y)  # Mᵀ·y, i.e. yᵀ·M as a column
    ymy = y.dot(my)
    # odd = P·M + M·P − 2·P·M·P entrywise; even = M − odd.
    odd_entries = []
    for i in range(n):
        yi = y[i]
        for j in range(n):
            t = (
                yi * ytm[j] / yy
                + my[i] * y[j] / yy
                - 2 * yi * y[j] * ymy / (yy * yy)
            )
            odd_entries.append(t)
    odd = Matrix(n, tuple(odd_entries))
    return GradedPair(kind, m - odd, odd)


def split_sv(m: Matrix) -> GradedPair:
    """Semimagic part plus vertex-cross part (y = all-ones projector).

    The even part's weight (row sum divided by n) is reported so callers
    can peel off the multiple of the all-ones matrix if they want the
    weightless semimagic component.
    """
    pair = _projector_split(m, ones(m.n), "SV")
    w = m.total_sum() / (m.n * m.n)
    return GradedPair("SV", pair.even_part, pair.odd_part, weight=w)


def split_nm(m: Matrix) -> GradedPair:
    """N-type part plus M-type part (y = alternating-vector projector)."""
    return _projector_split(m, alternating(m.n), "NM")


def split_qp(m: Matrix) -> GradedPair:
    """Quartered part plus pandiagonal part, for even n.

    With M = [[A, B], [C, D]] in ν×ν blocks the parts are
    ½[[A+D, B+C], [B+C, A+D]] and ½[[A−D, B−C], [−(B−C), −(A−D)]].
    """
    n = m.n
    if n % 2 == 1:
        raise DimensionError("the quartered/pandiagonal split needs even n")
    nu = n // 2
    half = Scalar(1) / 2
    even_rows = [[None] * n for _ in range(n)]
    odd_rows = [[None] * n for _ in range(n)]
    for i in range(nu):
        for j in range(nu):
            a = m[i, j]
            b = m[i, j + nu]
            c = m[i + nu, j]
            d = m[i + nu, j + nu]
            s1 = (a + d) * half
            s2 = (b + c) * half
            t1 = (a - d) * half
            t2 = (b - c) * half
            even_rows[i][j] = s1
            even_rows[i][j + nu] = s2
            even_rows[i + nu][j] = s2
            even_rows[i + nu][j + nu] = s1
            odd_rows[i][j] = t1
            odd_rows[i][j + nu] = t2
            odd_rows[i + nu][j] = -t2
            odd_rows[i + nu][j + nu] = -t1
    even = Matrix(n, tuple(x for row in even_rows for x in row))
    odd = Matrix(n, tuple(x for row in odd_rows for x in row))
    return GradedPair("QP", even, odd)


SPLITS = {"BA": split_ba, "SV": split_sv, "NM": split_nm, "QP": split_qp}


def split(m: Matrix, kind: str) -> GradedPair:
    try:
        fn = SPLITS[kind.upper()]
    except KeyError:
        raise ValueError(f"unknown split kind {kind!r}") from None
    return fn(m)
