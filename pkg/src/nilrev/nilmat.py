"""Square matrices over a :class:`~nilrev.scalar.ScalarRing`.

Indices are 0-based in code; docstrings mention 1-based ``(i, j)`` only
where they mirror the usual textbook convention.  A :class:`Matrix` is an
immutable value.  The named subsets (strictly upper triangular, signed
unipotent, ...) are predicates plus ``check_*`` validators rather than
subclasses, so any product or sum stays a plain :class:`Matrix`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DimensionMismatch,
    NotNilpotentUpper,
    NotSignedUnipotent,
    ParseError,
    RingMismatch,
)
from .scalar import ScalarRing, format_scalar, parse_scalar, ring_of

__all__ = [
    "Matrix",
    "identity",
    "zeros",
    "elementary",
    "diag",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_neg",
    "mat_power",
    "invert_signed_unipotent",
    "conjugate",
    "is_involution",
    "is_strictly_upper",
    "is_signed_unipotent",
    "is_unipotent",
    "star_flag",
    "diagonal_signs",
    "check_nilpotent_upper",
    "check_signed_unipotent",
    "parse_matrix",
    "format_matrix",
    "parse_matrix_file",
    "format_matrix_file",
]


class Matrix:
    """An ``n x n`` matrix over ``ring`` with row-major ``rows``."""

    __slots__ = ("n", "ring", "rows")

    def __init__(self, rows, ring=None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0:
            raise DimensionMismatch("matrix must be at least 1x1")
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch(f"expected {n} entries per row, got {len(r)}")
        if ring is None:
            ring = ScalarRing.RAT
            for r in rows:
                for x in r:
                    if not isinstance(x, (int, Fraction, str)):
                        ring = ring_of(x)
                        break
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", tuple(tuple(ring.coerce(x) for x in r) for r in rows))

    @classmethod
    def _raw(cls, rows, ring):
        # trusted constructor: rows already a tuple of tuples of ring elements
        self = object.__new__(cls)
        object.__setattr__(self, "n", len(rows))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.ring is other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        return f"Matrix({format_matrix(self)!r}, ring={self.ring.value})"

    def __str__(self):
        return format_matrix(self)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __neg__(self):
        return mat_neg(self)

    def scale(self, c):
        """Multiply every entry by a rational ``c`` (central, so side is irrelevant)."""
        return Matrix._raw(tuple(tuple(x * c for x in r) for r in self.rows), self.ring)

    def column(self, j):
        return [r[j] for r in self.rows]

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def to_lists(self):
        return [list(r) for r in self.rows]


def _check_pair(A, B):
    if A.n != B.n:
        raise DimensionMismatch(f"dimensions differ: {A.n} vs {B.n}")
    if A.ring is not B.ring:
        raise RingMismatch(f"rings differ: {A.ring.value} vs {B.ring.value}")


def identity(n, ring=ScalarRing.RAT):
    z, o = ring.zero(), ring.one()
    return Matrix._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), ring)


def zeros(n, ring=ScalarRing.RAT):
    z = ring.zero()
    return Matrix._raw(tuple((z,) * n for _ in range(n)), ring)


def diag(values, ring=None):
    values = list(values)
    n = len(values)
    rows = [[0] * n for _ in range(n)]
    for i, v in enumerate(values):
        rows[i][i] = v
    return Matrix(rows, ring)


def elementary(n, i, j, ring=ScalarRing.RAT, value=1):
    """``E_ij`` with 1-based ``(i, j)``, optionally scaled by ``value``."""
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = value
    return Matrix(rows, ring)


def mat_mul(A, B):
    """Exact product ``A @ B``; zero entries are skipped, order of factors kept."""
    _check_pair(A, B)
    n = A.n
    zero = A.ring.zero()
    brows = B.rows
    out = []
    for arow in A.rows:
        acc = [zero] * n
        for k, a in enumerate(arow):
            if not a:
                continue
            brow = brows[k]
            for j in range(n):
                b = brow[j]
                if b:
                    acc[j] = acc[j] + a * b
        out.append(tuple(acc))
    return Matrix._raw(tuple(out), A.ring)


def mat_add(A, B):
    _check_pair(A, B)
    return Matrix._raw(
        tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A.rows, B.rows)), A.ring
    )


def mat_sub(A, B):
    _check_pair(A, B)
    return Matrix._raw(
        tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(A.rows, B.rows)), A.ring
    )


def mat_neg(A):
    return Matrix._raw(tuple(tuple(-x for x in r) for r in A.rows), A.ring)


def mat_power(A, k):
    if k < 0:
        raise ValueError("negative powers are not supported")
    result = identity(A.n, A.ring)
    base = A
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def is_strictly_upper(A):
    return all(not A.rows[i][j] for i in range(A.n) for j in range(i + 1))


def is_signed_unipotent(A):
    for i in range(A.n):
        d = A.rows[i][i]
        if d != 1 and d != -1:
            return False
        if any(A.rows[i][j] for j in range(i)):
            return False
    return True


def is_unipotent(A):
    return is_signed_unipotent(A) and all(A.rows[i][i] == 1 for i in range(A.n))


def star_flag(A):
    """True iff every first-superdiagonal entry is nonzero."""
    return all(A.rows[i][i + 1] for i in range(A.n - 1))


def diagonal_signs(A):
    check_signed_unipotent(A)
    return tuple(1 if A.rows[i][i] == 1 else -1 for i in range(A.n))


def check_nilpotent_upper(X):
    """Validate that ``X`` is a strictly upper triangular :class:`Matrix`; return it."""
    if not isinstance(X, Matrix):
        raise TypeError(f"expected Matrix, got {type(X).__name__}")
    if not is_strictly_upper(X):
        raise NotNilpotentUpper("matrix is not strictly upper triangular")
    return X


def check_signed_unipotent(g):
    if not isinstance(g, Matrix):
        raise TypeError(f"expected Matrix, got {type(g).__name__}")
    if not is_signed_unipotent(g):
        raise NotSignedUnipotent("matrix is not upper triangular with diagonal in {+1, -1}")
    return g


def invert_signed_unipotent(g):
    """Inverse of an upper triangular matrix with +-1 diagonal, by back-substitution.

    Solves ``g h = Id`` column by column from the bottom row up.  Diagonal
    entries are their own inverses, so no scalar division is needed and the
    routine is valid over the quaternions.
    """
    check_signed_unipotent(g)
    n, ring = g.n, g.ring
    zero = ring.zero()
    G = g.rows
    h = [[zero] * n for _ in range(n)]
    for j in range(n):
        for i in range(j, -1, -1):
            acc = ring.one() if i == j else zero
            for k in range(i + 1, j + 1):
                if G[i][k] and h[k][j]:
                    acc = acc - G[i][k] * h[k][j]
            # g_ii * h_ij = acc and g_ii = g_ii^{-1}
            h[i][j] = G[i][i] * acc
    return Matrix._raw(tuple(tuple(r) for r in h), ring)


def conjugate(g, X):
    """Return ``g X g^{-1}`` for a signed unipotent ``g``."""
    _check_pair(g, X)
    return g @ X @ invert_signed_unipotent(g)


def is_involution(g):
    return g @ g == identity(g.n, g.ring)


# -- text format ------------------------------------------------------------


def format_matrix(A):
    return ";".join(",".join(format_scalar(x) for x in r) for r in A.rows)


def _line_col(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_matrix(text, ring=ScalarRing.RAT, n=None, *, _base=0, _source=None):
    """Parse ``0,1,0;0,0,1;0,0,0`` style text into a :class:`Matrix`.

    Raises :class:`ParseError` carrying the line and column of the offending
    entry (relative to ``_source`` when called from :func:`parse_matrix_file`).
    """
    source = text if _source is None else _source
    rows = []
    row_starts = []
    offset = 0
    for row_text in text.split(";"):
        entries = []
        cell_offset = offset
        for cell in row_text.split(","):
            lead = len(cell) - len(cell.lstrip())
            where = _base + cell_offset + lead
            if not cell.strip():
                raise ParseError("empty matrix entry", *_line_col(source, where))
            try:
                entries.append(parse_scalar(cell, ring))
            except ParseError as exc:
                raise ParseError(exc.message, *_line_col(source, where)) from None
            cell_offset += len(cell) + 1
        rows.append(entries)
        row_starts.append(_base + offset + len(row_text) - len(row_text.lstrip()))
        offset += len(row_text) + 1
    size = len(rows)
    if n is not None and size != n:
        raise ParseError(f"header says n={n} but body has {size} rows", *_line_col(source, _base))
    for r, (entries, start) in enumerate(zip(rows, row_starts)):
        if len(entries) != size:
            raise ParseError(
                f"row {r + 1} has {len(entries)} entries, expected {size}", *_line_col(source, start)
            )
    return Matrix._raw(tuple(tuple(r) for r in rows), ring)


def parse_matrix_file(text, ring=None):
    """Parse the file form: optional ``ring=...`` / ``n=...`` header tokens, then the body.

    A header ring overrides ``ring``; without either, rationals are assumed.
    """
    pos = 0
    header = {}
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        end = pos
        while end < len(text) and not text[end].isspace():
            end += 1
        token = text[pos:end]
        key, eq, value = token.partition("=")
        if not eq or key not in ("ring", "n"):
            break
        if key in header:
            raise ParseError(f"duplicate header token {key!r}", *_line_col(text, pos))
        header[key] = (value, pos)
        pos = end
    if "ring" in header:
        value, where = header["ring"]
        try:
            ring = ScalarRing.parse(value)
        except ParseError as exc:
            raise ParseError(exc.message, *_line_col(text, where)) from None
    ring = ring or ScalarRing.RAT
    n = None
    if "n" in header:
        value, where = header["n"]
        if not value.isdigit() or int(value) < 1:
            raise ParseError(f"bad dimension {value!r}", *_line_col(text, where))
        n = int(value)
    body = text[pos:]
    if not body.strip():
        raise ParseError("missing matrix body", *_line_col(text, pos))
    return parse_matrix(body, ring, n, _base=pos, _source=text)


def format_matrix_file(A):
    return f"ring={A.ring.value} n={A.n}\n{format_matrix(A)}\n"
