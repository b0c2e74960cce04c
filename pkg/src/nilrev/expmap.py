"""Exponential and logarithm between strictly upper and unipotent matrices.

Both series terminate: ``X**n == 0`` for strictly upper ``X`` and
``(u - Id)**n == 0`` for unipotent ``u``, so each is a finite sum with exact
rational coefficients ``1/k!`` and ``(-1)**(k+1)/k``.
"""

from fractions import Fraction

from .errors import NotUnipotent
from .nilmat import check_nilpotent_upper, identity, is_unipotent


def exp(X):
    """``sum_{k<n} X**k / k!`` for a strictly upper triangular ``X``.

    >>> from nilrev.nilmat import parse_matrix
    >>> str(exp(parse_matrix("0,1,0;0,0,1;0,0,0")))
    '1,1,1/2;0,1,1;0,0,1'
    """
    check_nilpotent_upper(X)
    result = identity(X.n, X.ring)
    term = result
    for k in range(1, X.n):
        term = (term @ X).scale(Fraction(1, k))
        if term.is_zero():
            break
        result = result + term
    return result


def log(u):
    """Inverse of :func:`exp` on upper triangular matrices with unit diagonal.

    Raises :class:`NotUnipotent` if ``u`` is not upper triangular with all
    diagonal entries equal to 1; signed diagonals have no logarithm here.
    """
    if not is_unipotent(u):
        raise NotUnipotent("log needs an upper triangular matrix with all diagonal entries 1")
    N = u - identity(u.n, u.ring)
    result = N
    power = N
    for k in range(2, u.n):
        power = power @ N
        if power.is_zero():
            break
        c = Fraction(1, k) if k % 2 else Fraction(-1, k)
        result = result + power.scale(c)
    return result
