"""Brute-force reverser existence by exact linear feasibility.

For a fixed diagonal sign pattern ``eps`` the reverser equations are linear
in the strictly upper entries of ``g``:

* algebra level, ``g X + X g = 0``;
* group level, ``g u - u^{-1} g = 0``.

Each scalar unknown is realified into 1, 2 or 4 rational coordinates: a term
``g_ik * c`` contributes the right-multiplication matrix of ``c`` and a term
``c * g_kj`` the left-multiplication matrix.  The coefficient matrix does not
depend on ``eps`` and the constant terms are linear in ``eps``, so one
elimination with an ``n``-column right-hand side decides every sign pattern.

Patterns are tried in Gray-code order starting from all ``+1``; the first
feasible one wins.  With ``normalize`` (the default) ``eps_1`` is pinned to
``+1``, which loses nothing since ``g`` and ``-g`` act identically.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .certificate import GroupTag, Level, Method, check_certificate, make_certificate
from .elimination import ReducedSystem
from .errors import DimensionTooLarge, InternalInvariantError
from .nilmat import (
    Matrix,
    check_nilpotent_upper,
    check_signed_unipotent,
    format_matrix,
    invert_signed_unipotent,
)
from .scalar import ScalarRing, coords, from_coords, left_mul_matrix, random_scalar, right_mul_matrix

DEFAULT_DIM_LIMIT = 8

__all__ = [
    "DEFAULT_DIM_LIMIT",
    "FeasibilityResult",
    "SearchReport",
    "dim_limit",
    "sign_patterns",
    "reverser_feasible",
    "group_reverser_feasible",
    "nonreal_search",
    "GroupTag",
]


def dim_limit(override=None):
    """Effective dimension bound: explicit override, else ``NILREV_DIM_LIMIT``, else 8."""
    if override is not None:
        return int(override)
    env = os.environ.get("NILREV_DIM_LIMIT")
    return int(env) if env else DEFAULT_DIM_LIMIT


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    g: Matrix | None
    patterns_tried: int
    level: Level
    group_tag: GroupTag
    pattern: tuple | None = None

    @property
    def status(self):
        return "FEASIBLE" if self.feasible else "INFEASIBLE"


def sign_patterns(n, group_tag, normalize=True):
    """Diagonal sign patterns in Gray-code order, all ``+1`` first."""
    if group_tag is GroupTag.UNIPOTENT:
        yield (1,) * n
        return
    free = n - 1 if normalize else n
    offset = n - free
    for m in range(1 << free):
        gray = m ^ (m >> 1)
        eps = [1] * n
        for bit in range(free):
            if gray >> bit & 1:
                eps[offset + bit] = -1
        yield tuple(eps)


def _unknowns(n):
    index = {}
    for i in range(n):
        for j in range(i + 1, n):
            index[(i, j)] = len(index)
    return index


def _add_block(coefs, var_base, block, row, scale=1):
    for c in range(len(block[row])):
        v = block[row][c]
        if v:
            key = var_base + c
            w = coefs.get(key, 0) + scale * v
            if w:
                coefs[key] = w
            else:
                coefs.pop(key, None)


def _build_system(n, ring, terms):
    """Assemble the realified system.

    ``terms(i, j)`` yields ``(unknown_or_None, side, scalar, sign)`` for entry
    ``(i, j)``: ``unknown`` is ``(p, q)``, ``side`` is ``"L"`` for
    ``scalar * g_pq`` and ``"R"`` for ``g_pq * scalar``; ``unknown is None``
    marks a constant ``sign * scalar * eps_p`` with ``p`` stored in ``side``.
    """
    d = ring.dim
    index = _unknowns(n)
    system = ReducedSystem(d * len(index), n)
    # short-range entries first: they carry no unknowns and reject patterns early
    entries = sorted(((i, j) for i in range(n) for j in range(i + 1, n)), key=lambda e: e[1] - e[0])
    for i, j in entries:
        rows = [dict() for _ in range(d)]
        rhs = [[Fraction(0)] * n for _ in range(d)]
        for unknown, side, scalar, sign in terms(i, j):
            if unknown is None:
                c = coords(scalar)
                for r in range(d):
                    # constant moves to the right-hand side
                    rhs[r][side] -= sign * c[r]
                continue
            block = left_mul_matrix(scalar) if side == "L" else right_mul_matrix(scalar)
            base = d * index[unknown]
            for r in range(d):
                _add_block(rows[r], base, block, r, sign)
        for r in range(d):
            system.add_equation(rows[r], rhs[r])
    return system, index


def _assemble_g(n, ring, index, values, eps):
    d = ring.dim
    rows = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = ring.coerce(eps[i])
    for (i, j), k in index.items():
        rows[i][j] = from_coords(values[d * k : d * k + d], ring)
    return Matrix._raw(tuple(tuple(r) for r in rows), ring)


def _check_dim(n, limit):
    bound = dim_limit(limit)
    if n > bound:
        raise DimensionTooLarge(f"n={n} exceeds the oracle bound {bound} (set NILREV_DIM_LIMIT)")


def _search(n, ring, system, index, group_tag, level, matrix, normalize):
    tried = 0
    for eps in sign_patterns(n, group_tag, normalize):
        tried += 1
        values = system.solve(eps)
        if values is None:
            continue
        g = _assemble_g(n, ring, index, values, eps)
        cert = make_certificate(matrix, g, level, Method.ORACLE, group_tag)
        if not check_certificate(cert):
            raise InternalInvariantError("oracle solution fails the certificate check")
        return FeasibilityResult(True, g, tried, level, group_tag, eps)
    return FeasibilityResult(False, None, tried, level, group_tag)


def reverser_feasible(X, group_tag=GroupTag.SIGNED_UNIPOTENT, *, normalize=True, dim_limit=None):
    """Decide whether some ``g`` in the group satisfies ``g X g^{-1} = -X``.

    Entry ``(i, j)`` of ``g X + X g`` is
    ``(eps_i + eps_j) x_ij + sum_{i<k<j} (g_ik x_kj + x_ik g_kj)``.
    """
    check_nilpotent_upper(X)
    _check_dim(X.n, dim_limit)
    n, ring, x = X.n, X.ring, X.rows

    def terms(i, j):
        if x[i][j]:
            yield None, i, x[i][j], 1
            yield None, j, x[i][j], 1
        for k in range(i + 1, j):
            if x[k][j]:
                yield (i, k), "R", x[k][j], 1
            if x[i][k]:
                yield (k, j), "L", x[i][k], 1

    system, index = _build_system(n, ring, terms)
    return _search(n, ring, system, index, group_tag, Level.ALGEBRA, X, normalize)


def group_reverser_feasible(u, group_tag=GroupTag.SIGNED_UNIPOTENT, *, normalize=True, dim_limit=None):
    """Decide whether some ``g`` in the group satisfies ``g u g^{-1} = u^{-1}``.

    Solves ``g u - w g = 0`` with ``w = u^{-1}``; entry ``(i, j)`` is
    ``eps_i u_ij - w_ij eps_j + sum_{i<k<=j} g_ik u_kj - sum_{i<=k<j} w_ik g_kj``.
    """
    check_signed_unipotent(u)
    _check_dim(u.n, dim_limit)
    n, ring = u.n, u.ring
    U = u.rows
    W = invert_signed_unipotent(u).rows

    def terms(i, j):
        if U[i][j]:
            yield None, i, U[i][j], 1
        if W[i][j]:
            yield None, j, W[i][j], -1
        for k in range(i + 1, j + 1):
            if U[k][j]:
                yield (i, k), "R", U[k][j], 1
        for k in range(i, j):
            if W[i][k]:
                yield (k, j), "L", W[i][k], -1

    system, index = _build_system(n, ring, terms)
    return _search(n, ring, system, index, group_tag, Level.GROUP, u, normalize)


@dataclass
class SearchReport:
    n: int
    ring: ScalarRing
    budget: int
    seed: int
    sampled: int = 0
    feasible: int = 0
    infeasible: list = field(default_factory=list)  # text of each candidate non-real element
    sign_patterns: Counter = field(default_factory=Counter)

    def to_dict(self):
        return {
            "n": self.n,
            "ring": self.ring.value,
            "budget": self.budget,
            "seed": self.seed,
            "sampled": self.sampled,
            "feasible": self.feasible,
            "infeasible": list(self.infeasible),
            "diagonal_patterns": {k: self.sign_patterns[k] for k in sorted(self.sign_patterns)},
        }


def random_signed_unipotent(n, ring, rng):
    rows = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = ring.coerce(rng.choice((1, -1)))
        for j in range(i + 1, n):
            rows[i][j] = random_scalar(ring, rng)
    return Matrix._raw(tuple(tuple(r) for r in rows), ring)


def nonreal_search(n, ring, sample_budget, seed=0, *, dim_limit=None):
    """Sample signed unipotent matrices and report any with no reverser in the group.

    Entries come from rationals p/q with |p|, q <= 9.  Every infeasible
    instance is recorded verbatim in the report; none is expected, but no
    claim is made either way.
    """
    _check_dim(n, dim_limit)
    report = SearchReport(n, ring, sample_budget, seed)
    for t in range(sample_budget):
        rng = Random(f"search:{seed}:{t}")
        u = random_signed_unipotent(n, ring, rng)
        result = group_reverser_feasible(u, GroupTag.SIGNED_UNIPOTENT, dim_limit=dim_limit)
        report.sampled += 1
        signs = "".join("+" if u.rows[i][i] == 1 else "-" for i in range(n))
        report.sign_patterns[signs] += 1
        if result.feasible:
            report.feasible += 1
        else:
            report.infeasible.append(format_matrix(u))
    return report
