"""Constructive reversers in the signed unipotent group.

* :func:`reverse_star` builds ``g`` with ``g X g^{-1} = -X`` for every strictly
  upper ``X`` whose first superdiagonal has no zeros, by induction on the
  size of the leading block.
* :func:`diagonal_parity_reverser` looks for a diagonal +-1 reverser by
  two-colouring the graph of nonzero entries.
* :func:`closed_form_n2` / :func:`closed_form_n3` are the explicit small-size
  involutions.
* :func:`reverse_group_star` moves the algebra-level construction to
  unipotent ``u`` through ``log``/``exp``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .certificate import (
    GroupTag,
    Level,
    Method,
    ReversalCertificate,
    check_certificate,
    make_certificate,
)
from .errors import InternalInvariantError, NotStar, NotUnipotent
from .expmap import log
from .nilmat import Matrix, check_nilpotent_upper, diag, is_unipotent, star_flag
from .scalar import inverse

__all__ = [
    "LevelRecord",
    "InductionTrace",
    "ParityInfeasible",
    "induction_reverser",
    "reverse_star",
    "diagonal_parity_reverser",
    "closed_form_n2",
    "closed_form_n3",
    "reverse_group_star",
    "check_certificate",
    "ReversalCertificate",
]


@dataclass(frozen=True)
class LevelRecord:
    """One induction step: ``g_k`` reverses the leading ``k x k`` block."""

    k: int
    g: Matrix
    epsilon: int
    a: tuple
    b: tuple


@dataclass(frozen=True)
class InductionTrace:
    levels: tuple


def induction_reverser(X):
    """Return ``(g, trace)`` with ``g X g^{-1} = -X`` for ``X`` with nonzero superdiagonal.

    Step ``k`` extends ``g_{k-1}`` to ``[[g_{k-1}, a], [0, eps]]`` where
    ``eps = -(g_{k-1})_{k-1,k-1}`` and ``a`` solves ``X_{k-1} a = b`` with
    ``b = -(g_{k-1} + eps Id) x`` and ``x`` the new column of ``X``.  The
    system is upper triangular with invertible superdiagonal, so ``a`` follows
    by back-substitution, left-dividing by ``x_{i,i+1}``; ``a_1`` is free and
    set to 0.
    """
    check_nilpotent_upper(X)
    if not star_flag(X):
        raise NotStar("reverse_star needs every (i, i+1) entry of X to be nonzero")
    ring, n = X.ring, X.n
    zero = ring.zero()
    rows = X.rows
    g = [[ring.one()]]
    levels = [LevelRecord(1, Matrix._raw(((ring.one(),),), ring), 1, (), ())]
    for k in range(2, n + 1):
        m = k - 1  # size of the block already reversed
        x = [rows[i][m] for i in range(m)]
        eps = -1 if g[m - 1][m - 1] == 1 else 1
        b = []
        for i in range(m):
            acc = zero
            for j in range(i, m):
                if g[i][j] and x[j]:
                    acc = acc + g[i][j] * x[j]
            b.append(-(acc + x[i] * eps))
        if b[m - 1]:
            raise InternalInvariantError(f"b_{m} != 0 at step {k}; sign rule violated")
        a = [zero] * m
        for i in range(m - 2, -1, -1):
            acc = b[i]
            for j in range(i + 2, m):
                if rows[i][j] and a[j]:
                    acc = acc - rows[i][j] * a[j]
            a[i + 1] = inverse(rows[i][i + 1]) * acc
        g = [row + [a[i]] for i, row in enumerate(g)]
        g.append([zero] * m + [ring.coerce(eps)])
        gk = Matrix._raw(tuple(tuple(r) for r in g), ring)
        levels.append(LevelRecord(k, gk, eps, tuple(a), tuple(b)))
    G = Matrix._raw(tuple(tuple(r) for r in g), ring)
    if G @ X != -(X @ G):
        raise InternalInvariantError("induction produced g with g X != -X g")
    return G, InductionTrace(tuple(levels))


def reverse_star(X):
    """Certificate for ``g X g^{-1} = -X`` built by :func:`induction_reverser`."""
    g, _ = induction_reverser(X)
    return make_certificate(X, g, Level.ALGEBRA, Method.INDUCTION, GroupTag.SIGNED_UNIPOTENT)


@dataclass(frozen=True)
class ParityInfeasible:
    """No diagonal +-1 reverser exists: the edges (1-based) form an odd cycle."""

    cycle: tuple

    def __bool__(self):
        return False


def diagonal_parity_reverser(X):
    """Diagonal involution ``diag(eps)`` with ``diag(eps) X diag(eps) = -X``, if any.

    Needs ``eps_i * eps_j = -1`` whenever ``X_ij != 0``.  Each connected
    component is BFS two-coloured from its smallest vertex, which gets +1.
    Returns a certificate, or :class:`ParityInfeasible` holding an odd cycle.
    """
    check_nilpotent_upper(X)
    n = X.n
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if X.rows[i][j]:
                adj[i].append(j)
                adj[j].append(i)
    sign = [0] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if sign[root]:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not sign[w]:
                    sign[w] = -sign[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif sign[w] == sign[v]:
                    return ParityInfeasible(_odd_cycle(v, w, parent, depth))
    g = diag(sign, X.ring)
    return make_certificate(X, g, Level.ALGEBRA, Method.PARITY, GroupTag.SIGNED_UNIPOTENT)


def _odd_cycle(v, w, parent, depth):
    left, right = [v], [w]
    while left[-1] != right[-1]:
        if depth[left[-1]] >= depth[right[-1]]:
            left.append(parent[left[-1]])
        else:
            right.append(parent[right[-1]])
    # left: v -> lca, right: w -> lca
    path = left + right[-2::-1]  # v ... lca ... w
    edges = [tuple(sorted((a + 1, b + 1))) for a, b in zip(path, path[1:])]
    edges.append(tuple(sorted((w + 1, v + 1))))
    return tuple(edges)


def closed_form_n2(X):
    """``diag(1, -1)`` reverses every 2x2 strictly upper matrix."""
    check_nilpotent_upper(X)
    if X.n != 2:
        raise ValueError("closed_form_n2 needs a 2x2 matrix")
    g = diag([1, -1], X.ring)
    return make_certificate(X, g, Level.ALGEBRA, Method.CLOSED_FORM, GroupTag.SIGNED_UNIPOTENT)


def closed_form_n3(X, p=None):
    """Involution ``[[1, p, -p r / 2], [0, -1, r], [0, 0, 1]]`` for ``X = [[0,a,b],[0,0,c],[0,0,0]]``.

    ``p`` and ``r`` must satisfy ``p c + a r + 2 b = 0`` (factor order as
    written, which matters over the quaternions).  With ``a != 0`` we take
    ``p = 0`` unless ``p`` is given and solve for ``r``; with ``a = 0`` and
    ``c != 0`` we take ``r = 0``.  When ``a = b = 0``, or ``a = c = 0``,
    ``diag(1, 1, -1)`` is used instead.
    """
    check_nilpotent_upper(X)
    if X.n != 3:
        raise ValueError("closed_form_n3 needs a 3x3 matrix")
    ring = X.ring
    a, b, c = X.rows[0][1], X.rows[0][2], X.rows[1][2]
    two_b = b * 2
    if (not a and not b) or (not a and not c):
        g = diag([1, 1, -1], ring)
    else:
        if a:
            p = ring.zero() if p is None else ring.coerce(p)
            r = -(inverse(a) * (p * c + two_b))
        else:
            if p is not None:
                raise ValueError("with a = 0 the parameter p is forced")
            r = ring.zero()
            p = -(two_b * inverse(c))
        corner = -(p * r) / 2
        g = Matrix([[1, p, corner], [0, -1, r], [0, 0, 1]], ring)
    return make_certificate(X, g, Level.ALGEBRA, Method.CLOSED_FORM, GroupTag.SIGNED_UNIPOTENT)


def reverse_group_star(u):
    """Certificate for ``h u h^{-1} = u^{-1}``, with ``h`` reversing ``log(u)``."""
    if not is_unipotent(u):
        raise NotUnipotent("u must be upper triangular with all diagonal entries 1")
    if not star_flag(u):
        raise NotStar("u needs every (i, i+1) entry to be nonzero")
    h, _ = induction_reverser(log(u))
    cert = make_certificate(u, h, Level.GROUP, Method.INDUCTION, GroupTag.SIGNED_UNIPOTENT)
    if not check_certificate(cert):
        raise InternalInvariantError("h does not reverse u although it reverses log(u)")
    return cert
