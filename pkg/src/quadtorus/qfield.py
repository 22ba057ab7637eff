"""Exact arithmetic in the real quadratic fields Q(sqrt(2)), Q(sqrt(3)), Q(sqrt(5)).

Every element is stored in the canonical form (a + b*sqrt(d)) / q with
integers a, b and q > 0, gcd(a, b, q) = 1, and d in {2, 3, 5}.  Rational
elements (b = 0) carry d = None so that they are compatible with any field.
All operations, including floor/ceil/frac and comparisons, are exact; no
floating point is used anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

ALLOWED_D = (2, 3, 5)

_Scalar = Union["QuadElem", int, Fraction]


def _isqrt_floor(b: int, d: int) -> int:
    """Exact floor(b * sqrt(d)) for integers b and d >= 0."""
    if b == 0:
        return 0
    s = b * b * d
    t = math.isqrt(s)
    if b > 0:
        return t
    # floor(-x) = -ceil(x); sqrt(s) is irrational unless s is a square
    return -t if t * t == s else -(t + 1)


class QuadElem:
    """An element (a + b*sqrt(d)) / q of a real quadratic field."""

    __slots__ = ("a", "b", "q", "d")

    def __init__(self, a: int, b: int = 0, q: int = 1, d: int | None = None):
        if q == 0:
            raise ZeroDivisionError("denominator q must be nonzero")
        if q < 0:
            a, b, q = -a, -b, -q
        g = math.gcd(math.gcd(a, b), q)
        if g > 1:
            a //= g
            b //= g
            q //= g
        if b == 0:
            d = None
        elif d not in ALLOWED_D:
            raise ValueError(f"d must be one of {ALLOWED_D}, got {d!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("QuadElem is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> QuadElem:
        return cls(n)

    @classmethod
    def rational(cls, p: int, q: int = 1) -> QuadElem:
        return cls(p, 0, q)

    @classmethod
    def from_fraction(cls, f: Fraction) -> QuadElem:
        return cls(f.numerator, 0, f.denominator)

    @classmethod
    def sqrt(cls, d: int) -> QuadElem:
        return cls(0, 1, 1, d)

    def _coerce(self, other: _Scalar) -> QuadElem:
        if isinstance(other, QuadElem):
            return other
        if isinstance(other, int):
            return QuadElem(other)
        if isinstance(other, Fraction):
            return QuadElem.from_fraction(other)
        return NotImplemented  # type: ignore[return-value]

    def _join_d(self, other: QuadElem) -> int | None:
        if self.d is None:
            return other.d
        if other.d is None or other.d == self.d:
            return self.d
        raise ValueError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")

    # -- basic queries -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.q)

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}, decided by integer comparisons only."""
        a, b = self.a, self.b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # a and b of opposite signs: compare a^2 with b^2 d
        t = a * a - b * b * self.d
        if t == 0:
            # impossible: sqrt(d) is irrational
            raise ArithmeticError("inconsistent quadratic element")
        return (1 if t > 0 else -1) if a > 0 else (-1 if t > 0 else 1)

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: _Scalar) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._join_d(o)
        return QuadElem(
            self.a * o.q + o.a * self.q,
            self.b * o.q + o.b * self.q,
            self.q * o.q,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.a, -self.b, self.q, self.d)

    def __sub__(self, other: _Scalar) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: _Scalar) -> QuadElem:
        return (-self) + other

    def __mul__(self, other: _Scalar) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._join_d(o)
        dd = d if d is not None else 0
        return QuadElem(
            self.a * o.a + self.b * o.b * dd,
            self.a * o.b + self.b * o.a,
            self.q * o.q,
            d,
        )

    __rmul__ = __mul__

    def conj(self) -> QuadElem:
        """Galois conjugate: sqrt(d) -> -sqrt(d)."""
        return QuadElem(self.a, -self.b, self.q, self.d)

    def norm(self) -> Fraction:
        """Field norm self * self.conj() as an exact rational."""
        dd = self.d if self.d is not None else 0
        return Fraction(self.a * self.a - self.b * self.b * dd, self.q * self.q)

    def inv(self) -> QuadElem:
        if not self:
            raise ZeroDivisionError("division by zero")
        n = self.norm()
        # 1/x = conj(x) / (x * conj(x))
        c = self.conj()
        return QuadElem(
            c.a * n.denominator, c.b * n.denominator, c.q * n.numerator, self.d
        )

    def __truediv__(self, other: _Scalar) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: _Scalar) -> QuadElem:
        return self._coerce(other) * self.inv()

    def __pow__(self, n: int) -> QuadElem:
        if n < 0:
            return self.inv() ** (-n)
        result = QuadElem(1)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- floor family --------------------------------------------------------

    def floor(self) -> int:
        """Exact floor of the real value.

        With m = floor(b*sqrt(d)) the answer is (a + m) // q: for b != 0 the
        interval (a + m, a + b*sqrt(d)] contains no integer because its
        endpoints lie strictly between the consecutive integers a + m and
        a + m + 1.
        """
        if self.b == 0:
            return self.a // self.q
        m = _isqrt_floor(self.b, self.d)
        return (self.a + m) // self.q

    def ceil(self) -> int:
        return -((-self).floor())

    def frac(self) -> QuadElem:
        """Fractional part self - floor(self), exactly in [0, 1)."""
        return self - self.floor()

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, QuadElem):
            return NotImplemented
        if self.b != 0 and other.b != 0 and self.d != other.d:
            return False
        return (self.a, self.b, self.q) == (other.a, other.b, other.q)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.q, self.d))

    def _cmp(self, other: _Scalar) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented  # type: ignore[return-value]
        return (self - o).sign()

    def __lt__(self, other: _Scalar) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: _Scalar) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: _Scalar) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: _Scalar) -> bool:
        return self._cmp(other) >= 0

    def __abs__(self) -> QuadElem:
        return -self if self.sign() < 0 else self

    # -- conversion ----------------------------------------------------------

    def __float__(self) -> float:
        if self.b == 0:
            return self.a / self.q
        return (self.a + self.b * math.sqrt(self.d)) / self.q

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a) if self.q == 1 else f"{self.a}/{self.q}"
        core = f"({self.a}{self.b:+d}*sqrt({self.d}))"
        return core if self.q == 1 else f"{core}/{self.q}"

    def __repr__(self) -> str:
        return f"QuadElem({self.a}, {self.b}, {self.q}, {self.d})"


_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_QUAD_RE = re.compile(
    r"^([+-]?)\(([+-]?\d+)([+-]\d+)\*sqrt\((\d+)\)\)(?:/(\d+))?$"
)


def parse(text: str) -> QuadElem:
    """Parse the text form emitted by str(QuadElem).

    Accepted grammar: "a", "a/q", "(a+b*sqrt(d))", "(a+b*sqrt(d))/q",
    optionally prefixed with a sign, with arbitrary surrounding whitespace.
    """
    s = re.sub(r"\s+", "", text)
    m = _RATIONAL_RE.match(s)
    if m:
        return QuadElem(int(m.group(1)), 0, int(m.group(2) or 1))
    m = _QUAD_RE.match(s)
    if m:
        outer, a, b, d, q = m.groups()
        e = QuadElem(int(a), int(b), int(q or 1), int(d))
        return -e if outer == "-" else e
    raise ValueError(f"cannot parse quadratic element from {text!r}")
