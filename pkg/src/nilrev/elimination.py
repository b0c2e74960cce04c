"""Exact rational linear systems with fraction-free sparse elimination.

Equations are integer rows (denominators are cleared on entry) kept primitive
by dividing out the content after every combination.  Right-hand sides are
vectors, so one elimination of the coefficient matrix serves every member of
a family ``A y = sum_k t_k c_k`` that differs only in the weights ``t``.
The oracle uses this to test all diagonal sign patterns against a single
reduction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .scalar import left_mul_matrix


def _primitive(coefs, rhs):
    g = 0
    for v in coefs.values():
        g = gcd(g, v)
    for v in rhs:
        g = gcd(g, v)
    if g > 1:
        coefs = {k: v // g for k, v in coefs.items()}
        rhs = [v // g for v in rhs]
    return coefs, rhs


def _integerize(coefs, rhs):
    den = 1
    for v in coefs.values():
        den = lcm(den, Fraction(v).denominator)
    for v in rhs:
        den = lcm(den, Fraction(v).denominator)
    icoefs = {k: int(Fraction(v) * den) for k, v in coefs.items() if v}
    irhs = [int(Fraction(v) * den) for v in rhs]
    return _primitive(icoefs, irhs)


class ReducedSystem:
    """Echelon form of ``A y = B t`` for unknowns ``y`` and parameter vector ``t``.

    Built from sparse equations ``(coefs, rhs)`` where ``coefs`` maps a variable
    index to a rational and ``rhs`` is a list of ``width`` rationals.
    """

    def __init__(self, nvars, width=1):
        self.nvars = nvars
        self.width = width
        self.pivots = []  # (var, coefs, rhs) in insertion order
        self.null_rows = []  # rhs vectors of equations that reduced to 0 = r

    def add_equation(self, coefs, rhs):
        coefs, rhs = _integerize(coefs, rhs)
        for var, pcoefs, prhs in self.pivots:
            b = coefs.get(var)
            if not b:
                continue
            a = pcoefs[var]
            new = {}
            for k, v in coefs.items():
                new[k] = a * v
            for k, v in pcoefs.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            rhs = [a * x - b * y for x, y in zip(rhs, prhs)]
            coefs, rhs = _primitive(new, rhs)
        if not coefs:
            if any(rhs):
                self.null_rows.append(rhs)
            return
        # smallest magnitude pivot keeps later multipliers small
        var = min(coefs, key=lambda k: (abs(coefs[k]), k))
        self.pivots.append((var, coefs, rhs))

    @property
    def rank(self):
        return len(self.pivots)

    def consistent(self, weights):
        """True iff the system is solvable for parameter vector ``weights``."""
        for rhs in self.null_rows:
            if sum(r * w for r, w in zip(rhs, weights)):
                return False
        return True

    def solve(self, weights):
        """One exact solution (free variables set to 0), or ``None`` if inconsistent."""
        if not self.consistent(weights):
            return None
        values = [Fraction(0)] * self.nvars
        for var, coefs, rhs in reversed(self.pivots):
            acc = Fraction(sum(r * w for r, w in zip(rhs, weights)))
            for k, v in coefs.items():
                if k != var and values[k]:
                    acc -= v * values[k]
            values[var] = acc / coefs[var]
        return values


def solve(equations, nvars):
    """Solve ``sum coefs[k] y_k = rhs`` for a list of ``(coefs, rhs)``; ``None`` if inconsistent."""
    system = ReducedSystem(nvars, 1)
    for coefs, rhs in equations:
        system.add_equation(coefs, [rhs])
    return system.solve([1])


def rational_rank(rows):
    """Rank of a dense rational matrix given as a list of rows."""
    ncols = len(rows[0]) if rows else 0
    system = ReducedSystem(ncols, 0)
    for row in rows:
        system.add_equation({k: v for k, v in enumerate(row) if v}, [])
    return system.rank


def realify(A):
    """Rational ``dn x dn`` matrix of ``v -> A v`` on realified column vectors."""
    d = A.ring.dim
    n = A.n
    out = [[Fraction(0)] * (d * n) for _ in range(d * n)]
    for i in range(n):
        for j in range(n):
            x = A.rows[i][j]
            if not x:
                continue
            block = left_mul_matrix(x)
            for r in range(d):
                for c in range(d):
                    out[d * i + r][d * j + c] = block[r][c]
    return out


def realified_rank(A):
    """Rank over the scalar ring, computed as (rational rank of realification) / dim."""
    r = rational_rank(realify(A))
    d = A.ring.dim
    assert r % d == 0, "realified rank must be a multiple of the ring dimension"
    return r // d


__all__ = [
    "ReducedSystem",
    "solve",
    "rational_rank",
    "realify",
    "realified_rank",
]
