"""Reversal certificates and their independent re-check.

Only :mod:`nilrev.nilmat` primitives are used here, so constructors
(:mod:`nilrev.reverser`) and the brute-force oracle (:mod:`nilrev.oracle`)
can both be validated by the same code without sharing any solving logic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import MalformedCertificate
from .nilmat import (
    Matrix,
    conjugate,
    invert_signed_unipotent,
    is_involution,
    is_signed_unipotent,
    is_strictly_upper,
)
from .scalar import ScalarRing


class GroupTag(enum.Enum):
    UNIPOTENT = "unipotent"
    SIGNED_UNIPOTENT = "signed_unipotent"


class Level(enum.Enum):
    ALGEBRA = "algebra"  # g X g^-1 = -X
    GROUP = "group"  # g u g^-1 = u^-1


class Method(enum.Enum):
    INDUCTION = "induction"
    PARITY = "parity"
    ORACLE = "oracle"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class ReversalCertificate:
    ring: ScalarRing
    n: int
    group_tag: GroupTag
    level: Level
    matrix: Matrix  # X at the algebra level, u at the group level
    g: Matrix
    involution: bool
    produced_by: Method


def make_certificate(matrix, g, level, produced_by, group_tag=None):
    """Build a certificate, deriving the group tag and involution flag from ``g``."""
    if group_tag is None:
        unipotent = all(g.rows[i][i] == 1 for i in range(g.n))
        group_tag = GroupTag.UNIPOTENT if unipotent else GroupTag.SIGNED_UNIPOTENT
    return ReversalCertificate(
        ring=matrix.ring,
        n=matrix.n,
        group_tag=group_tag,
        level=level,
        matrix=matrix,
        g=g,
        involution=is_involution(g),
        produced_by=produced_by,
    )


def _validate_shape(c):
    if not isinstance(c, ReversalCertificate):
        raise MalformedCertificate(f"not a certificate: {type(c).__name__}")
    for name in ("matrix", "g"):
        m = getattr(c, name)
        if not isinstance(m, Matrix):
            raise MalformedCertificate(f"{name} is not a matrix")
        if m.n != c.n:
            raise MalformedCertificate(f"{name} is {m.n}x{m.n}, certificate says n={c.n}")
        if m.ring is not c.ring:
            raise MalformedCertificate(f"{name} is over {m.ring.value}, certificate says {c.ring.value}")
    if not is_signed_unipotent(c.g):
        raise MalformedCertificate("g is not upper triangular with diagonal in {+1, -1}")
    if c.group_tag is GroupTag.UNIPOTENT and any(c.g.rows[i][i] != 1 for i in range(c.n)):
        raise MalformedCertificate("group is unipotent but g has a -1 on the diagonal")
    if c.level is Level.ALGEBRA and not is_strictly_upper(c.matrix):
        raise MalformedCertificate("algebra-level input is not strictly upper triangular")
    if c.level is Level.GROUP and not is_signed_unipotent(c.matrix):
        raise MalformedCertificate("group-level input is not upper triangular with +-1 diagonal")
    if not isinstance(c.involution, bool):
        raise MalformedCertificate("involution flag must be a boolean")


def check_certificate(c):
    """Recompute the reversal identity from scratch; True iff it holds exactly.

    Raises :class:`MalformedCertificate` when the record is not even shaped
    like a certificate (wrong sizes, rings, or a -1 in a unipotent ``g``).
    """
    _validate_shape(c)
    if c.level is Level.ALGEBRA:
        holds = conjugate(c.g, c.matrix) == -c.matrix
    else:
        holds = conjugate(c.g, c.matrix) == invert_signed_unipotent(c.matrix)
    return holds and c.involution == is_involution(c.g)
