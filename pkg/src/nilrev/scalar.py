"""Exact scalars over the rationals, Gaussian rationals and rational quaternions.

Rationals are plain :class:`fractions.Fraction` values.  The two extension
types keep :class:`~fractions.Fraction` components and interoperate with
``int``/``Fraction`` operands, so ``2 * q`` or ``q / 6`` work as expected.
Quaternion products follow ``ij = k, jk = i, ki = j``; factor order matters.

>>> i, j = RationalQuaternion(0, 1, 0, 0), RationalQuaternion(0, 0, 1, 0)
>>> i * j
RationalQuaternion('k')
>>> j * i
RationalQuaternion('-k')
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import ParseError, RingMismatch, ZeroInverse

__all__ = [
    "Fraction",
    "GaussianRational",
    "RationalQuaternion",
    "ScalarRing",
    "ring_of",
    "add",
    "sub",
    "mul",
    "neg",
    "inverse",
    "conj",
    "coords",
    "from_coords",
    "left_mul_matrix",
    "right_mul_matrix",
    "parse_scalar",
    "format_scalar",
    "random_scalar",
]


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroInverse("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroInverse("zero has no inverse")
        return GaussianRational(self.re / n, -self.im / n)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _integer_coords(q):
    """``(A, B, C, D, m)`` with ``q = (A + B i + C j + D k) / m`` and integer entries."""
    m = math.lcm(q.a.denominator, q.b.denominator, q.c.denominator, q.d.denominator)
    return (
        q.a.numerator * (m // q.a.denominator),
        q.b.numerator * (m // q.b.denominator),
        q.c.numerator * (m // q.c.denominator),
        q.d.numerator * (m // q.d.denominator),
        m,
    )


class RationalQuaternion:
    """``a + b*i + c*j + d*k`` with rational coordinates (a, b, c, d)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "c", _frac(c))
        object.__setattr__(self, "d", _frac(d))

    def __setattr__(self, name, value):
        raise AttributeError("RationalQuaternion is immutable")

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RationalQuaternion):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalQuaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalQuaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalQuaternion(self.a * other, self.b * other, self.c * other, self.d * other)
        if not isinstance(other, RationalQuaternion):
            return NotImplemented
        # integer numerators over a common denominator: one reduction per coordinate
        a1, b1, c1, d1, m1 = _integer_coords(self)
        a2, b2, c2, d2, m2 = _integer_coords(other)
        m = m1 * m2
        return RationalQuaternion(
            Fraction(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, m),
            Fraction(a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2, m),
            Fraction(a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, m),
            Fraction(a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2, m),
        )

    def __rmul__(self, other):
        # rational scalars are central
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroInverse("division by zero")
            return RationalQuaternion(self.a / other, self.b / other, self.c / other, self.d / other)
        return NotImplemented

    def __neg__(self):
        return RationalQuaternion(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def conjugate(self):
        return RationalQuaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroInverse("zero has no inverse")
        return RationalQuaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def __repr__(self):
        return f"RationalQuaternion({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


class ScalarRing(enum.Enum):
    RAT = "rat"
    GAUSS = "gauss"
    QUAT = "quat"

    @property
    def dim(self):
        """Dimension over the rationals."""
        return {"rat": 1, "gauss": 2, "quat": 4}[self.value]

    @property
    def units(self):
        return {"rat": "", "gauss": "i", "quat": "ijk"}[self.value]

    @property
    def element_type(self):
        return {"rat": Fraction, "gauss": GaussianRational, "quat": RationalQuaternion}[self.value]

    def zero(self):
        return self.element_type(0)

    def one(self):
        return self.element_type(1)

    def coerce(self, x):
        """Promote an int, Fraction or same-ring element into this ring."""
        cls = self.element_type
        if isinstance(x, cls):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        if isinstance(x, str):
            return parse_scalar(x, self)
        raise RingMismatch(f"{type(x).__name__} is not an element of {self.value}")

    def contains(self, x):
        return isinstance(x, self.element_type)

    @classmethod
    def parse(cls, name):
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ParseError(f"unknown ring {name!r}; expected rat, gauss or quat") from None


def ring_of(x):
    if isinstance(x, RationalQuaternion):
        return ScalarRing.QUAT
    if isinstance(x, GaussianRational):
        return ScalarRing.GAUSS
    if isinstance(x, (int, Fraction)):
        return ScalarRing.RAT
    raise TypeError(f"not a scalar: {x!r}")


def _same_ring(x, y):
    rx, ry = ring_of(x), ring_of(y)
    if rx is not ry:
        raise RingMismatch(f"operands from different rings: {rx.value} and {ry.value}")


def add(x, y):
    _same_ring(x, y)
    return x + y


def sub(x, y):
    _same_ring(x, y)
    return x - y


def mul(x, y):
    _same_ring(x, y)
    return x * y


def neg(x):
    return -x


def inverse(x):
    """Two-sided multiplicative inverse; raises :class:`ZeroInverse` on zero."""
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise ZeroInverse("zero has no inverse")
        return 1 / Fraction(x)
    return x.inverse()


def conj(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return x.conjugate()


def coords(x):
    """Rational coordinate tuple: (x,), (re, im) or (a, b, c, d)."""
    if isinstance(x, RationalQuaternion):
        return (x.a, x.b, x.c, x.d)
    if isinstance(x, GaussianRational):
        return (x.re, x.im)
    return (Fraction(x),)


def from_coords(values, ring):
    values = tuple(values)
    if len(values) != ring.dim:
        raise ValueError(f"{ring.value} needs {ring.dim} coordinates, got {len(values)}")
    return ring.element_type(*values)


def left_mul_matrix(q):
    """Rational matrix ``L`` with ``coords(q*x) == L @ coords(x)``."""
    if isinstance(q, RationalQuaternion):
        a, b, c, d = q.a, q.b, q.c, q.d
        return [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]]
    if isinstance(q, GaussianRational):
        return [[q.re, -q.im], [q.im, q.re]]
    return [[Fraction(q)]]


def right_mul_matrix(q):
    """Rational matrix ``R`` with ``coords(x*q) == R @ coords(x)``."""
    if isinstance(q, RationalQuaternion):
        a, b, c, d = q.a, q.b, q.c, q.d
        return [[a, -b, -c, -d], [b, a, d, -c], [c, -d, a, b], [d, c, -b, a]]
    return left_mul_matrix(q)


_RAT = r"\d+(?:/\d+)?"
_TERM = re.compile(rf"([+-]?)({_RAT})?([ijk]?)")


def parse_scalar(text, ring):
    """Parse a scalar literal such as ``3``, ``-5/2``, ``1+i`` or ``1/2-3i+k``.

    Whitespace is ignored.  Units a ring does not have are rejected, as are
    zero denominators.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty scalar literal")
    parts = [Fraction(0)] * ring.dim
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, unit = m.groups()
        if m.end() == pos or (not num and not unit) or (not sign and not first):
            raise ParseError(f"bad scalar literal {text!r} at offset {pos}")
        if unit and unit not in ring.units:
            raise ParseError(f"unit {unit!r} not allowed in ring {ring.value}: {text!r}")
        if num:
            p, _, q = num.partition("/")
            if q and int(q) == 0:
                raise ParseError(f"zero denominator in {text!r}")
            value = Fraction(int(p), int(q) if q else 1)
        else:
            value = Fraction(1)
        if sign == "-":
            value = -value
        slot = 0 if not unit else "ijk".index(unit) + 1
        parts[slot] += value
        pos = m.end()
        first = False
    return from_coords(parts, ring)


def _fmt_rat(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(x):
    """Inverse of :func:`parse_scalar` (canonical, shortest form)."""
    c = coords(x)
    if len(c) == 1:
        return _fmt_rat(c[0])
    out = []
    for value, unit in zip(c, ("", "i", "j", "k")):
        if not value:
            continue
        if unit and abs(value) == 1:
            body = unit
        else:
            body = _fmt_rat(abs(value)) + unit
        if value < 0:
            out.append("-" + body)
        else:
            out.append(("+" if out else "") + body)
    return "".join(out) or "0"


def random_rational(rng, num_range=9, den_range=9):
    return Fraction(rng.randint(-num_range, num_range), rng.randint(1, den_range))


def random_scalar(ring, rng, nonzero=False):
    """Random element with components p/q, |p| <= 9, 1 <= q <= 9."""
    while True:
        x = from_coords([random_rational(rng) for _ in range(ring.dim)], ring)
        if x or not nonzero:
            return x
