"""Gaussian elimination over a division ring (Q, Q(i) or rational quaternions).

Matrices act on column vectors from the left and scalars act on vectors from
the right, so every row operation here is a *left* multiplication of a row.
That keeps right-linear relations among columns intact: the rank of a
matrix is the dimension of the right span of its columns, and kernel vectors
may be scaled on the right.
"""

from __future__ import annotations

from .errors import NilrevError
from .nilmat import Matrix
from .scalar import inverse


class SingularMatrix(NilrevError, ValueError):
    pass


def rref(rows, ring):
    """Reduced row echelon form of a rectangular list-of-rows; returns ``(R, pivots)``."""
    R = [list(r) for r in rows]
    if not R:
        return R, []
    m, ncols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((k for k in range(r, m) if R[k][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = inverse(R[r][c])
        R[r] = [inv * x for x in R[r]]
        for k in range(m):
            f = R[k][c]
            if k != r and f:
                R[k] = [x - f * y for x, y in zip(R[k], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(rows, ring):
    return len(rref(rows, ring)[1])


def columns_rank(vectors, ring):
    """Dimension of the right span of the given column vectors."""
    if not vectors:
        return 0
    rows = [[v[i] for v in vectors] for i in range(len(vectors[0]))]
    return rank(rows, ring)


def kernel_basis(A):
    """Basis of ``{v : A v = 0}``, one vector per free column in increasing order."""
    rows = A.rows if isinstance(A, Matrix) else A
    ring = A.ring
    ncols = len(rows[0])
    R, pivots = rref(rows, ring)
    zero, one = ring.zero(), ring.one()
    basis = []
    pivot_set = set(pivots)
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -R[r][f]
        basis.append(v)
    return basis


def invert(A):
    """Inverse of a general invertible :class:`Matrix` by Gauss-Jordan."""
    n, ring = A.n, A.ring
    zero, one = ring.zero(), ring.one()
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(A.rows)]
    R, pivots = rref(aug, ring)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix._raw(tuple(tuple(r[n:]) for r in R), ring)


def apply(A, v):
    """``A v`` for a :class:`Matrix` and a column vector given as a list."""
    zero = A.ring.zero()
    out = []
    for row in A.rows:
        acc = zero
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def from_columns(columns, ring):
    n = len(columns)
    return Matrix._raw(tuple(tuple(columns[j][i] for j in range(n)) for i in range(n)), ring)
