"""The torus map T(x, y) = (y, {-x - lam' y}) for quadratic parameters lam.

Eight parameters are supported, indexed by string tags.  For each, lam' is the
algebraic conjugate of lam, so that T preserves the lattice Z[lam]^2 modulo
Z^2 and acts as the rotation-like matrix A = [[0, -1], [1, -lam']] between
translations.  A has finite multiplicative order.

Two representations of points are provided:

* tuples of :class:`~quadtorus.qfield.QuadElem`, used by the exact affine
  machinery (matrix powers, scaling maps, first-return bookkeeping);
* :class:`FastPoint`, four integers over a fixed common denominator, used by
  the inner orbit loops where millions of steps may be needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .qfield import QuadElem, parse

Point = tuple[QuadElem, QuadElem]
Matrix = tuple[tuple[QuadElem, QuadElem], tuple[QuadElem, QuadElem]]

_SQRT5 = QuadElem(0, 1, 1, 5)
_GAMMA = QuadElem(1, 1, 2, 5)  # (1 + sqrt 5)/2


@dataclass(frozen=True)
class LambdaCase:
    """One of the eight quadratic parameters lam with its conjugate lam'."""

    tag: str
    lam: QuadElem
    order: int  # multiplicative order of the step matrix A

    @property
    def lam_conj(self) -> QuadElem:
        return self.lam.conj()

    @property
    def d(self) -> int:
        return self.lam.d

    def step(self, z: Point) -> Point:
        x, y = z
        return (y, (-x - self.lam_conj * y).frac())

    def step_inv(self, z: Point) -> Point:
        x, y = z
        return ((-self.lam_conj * x - y).frac(), x)

    def iterate(self, z: Point, n: int) -> Point:
        f = self.step if n >= 0 else self.step_inv
        for _ in range(abs(n)):
            z = f(z)
        return z

    def orbit(self, z: Point) -> Iterator[Point]:
        while True:
            yield z
            z = self.step(z)

    @property
    def matrix(self) -> Matrix:
        zero = QuadElem.from_int(0)
        one = QuadElem.from_int(1)
        return ((zero, -one), (one, -self.lam_conj))

    def matrix_power(self, s: int) -> Matrix:
        return mat_pow(self.matrix, s % self.order)

    def fast(self, z: Point) -> "FastOrbit":
        return FastOrbit(self, z)

    def brute_period(self, z: Point, cap: int) -> int | None:
        """Minimal period of z under T, or None if it exceeds cap steps."""
        orbit = FastOrbit(self, z)
        start = orbit.coords
        for n in range(1, cap + 1):
            orbit.step()
            if orbit.coords == start:
                return n
        return None


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_pow(m: Matrix, n: int) -> Matrix:
    zero = QuadElem.from_int(0)
    one = QuadElem.from_int(1)
    result: Matrix = ((one, zero), (zero, one))
    while n > 0:
        if n & 1:
            result = mat_mul(result, m)
        m = mat_mul(m, m)
        n >>= 1
    return result


def apply_matrix(z: Point, m: Matrix) -> Point:
    """Row vector times matrix: z A."""
    x, y = z
    return (x * m[0][0] + y * m[1][0], x * m[0][1] + y * m[1][1])


_CASE_SPECS = {
    "gamma": ("(1+1*sqrt(5))/2", 5),
    "inv_gamma": ("(-1+1*sqrt(5))/2", 10),
    "neg_gamma": ("(-1-1*sqrt(5))/2", 10),
    "neg_inv_gamma": ("(1-1*sqrt(5))/2", 5),
    "sqrt2": ("(0+1*sqrt(2))", 8),
    "neg_sqrt2": ("(0-1*sqrt(2))", 8),
    "sqrt3": ("(0+1*sqrt(3))", 12),
    "neg_sqrt3": ("(0-1*sqrt(3))", 12),
}

CASES: dict[str, LambdaCase] = {
    tag: LambdaCase(tag, parse(text), order)
    for tag, (text, order) in _CASE_SPECS.items()
}

CASE_TAGS = tuple(CASES)


def get_case(tag: str) -> LambdaCase:
    try:
        return CASES[tag.replace("-", "_")]
    except KeyError:
        raise KeyError(f"unknown parameter tag {tag!r}; expected one of {CASE_TAGS}")


def point(x: str | int | Fraction | QuadElem, y: str | int | Fraction | QuadElem) -> Point:
    def coerce(v):
        if isinstance(v, QuadElem):
            return v
        if isinstance(v, str):
            return parse(v)
        if isinstance(v, Fraction):
            return QuadElem.from_fraction(v)
        return QuadElem.from_int(v)

    return (coerce(x), coerce(y))


# -- integer sequence shadow of the torus map --------------------------------


def seq_step(case: LambdaCase, ab: tuple[int, int]) -> tuple[int, int]:
    """Integer dynamics a_{n+1} = -a_{n-1} - floor(lam a_n), conjugate to T
    on the embedded lattice points ({lam a}, {lam b})."""
    a, b = ab
    return (b, -a - (case.lam * b).floor())

def seq_embed(case: LambdaCase, ab: tuple[int, int]) -> Point:
    a, b = ab
    return ((case.lam * a).frac(), (case.lam * b).frac())


# -- fast integer orbits -----------------------------------------------------


class FastOrbit:
    """Orbit iterator storing a point as ((ax + bx sqrt d) / C, (ay + by sqrt d) / C).

    The common denominator C is fixed along the orbit.  For d = 5 the
    conjugate parameter has denominator 2; C is then forced to be even, and
    both coordinates keep numerator parity a == b (mod 2), which makes every
    division by 2 in the step exact.
    """

    __slots__ = ("case", "d", "p", "q", "c", "ax", "bx", "ay", "by", "_isqrt_cd")

    def __init__(self, case: LambdaCase, z: Point):
        self.case = case
        d = case.d
        if d is None:
            d = 5  # rational points embed with a zero irrational part
        self.d = d
        conj = case.lam_conj
        if conj.d is not None and conj.d != d:
            raise ValueError("point and parameter live in different fields")
        # lam' = (p + q sqrt d) / r with r = conj.q in {1, 2}
        r = conj.q
        self.p = conj.a
        self.q = conj.b
        x, y = z
        for v in (x, y):
            if v.d is not None and v.d != d:
                raise ValueError("point and parameter live in different fields")
        c = math.lcm(x.q, y.q)
        if r == 2 and (c % 2 or (x.a * c // x.q - x.b * c // x.q) % 2
                       or (y.a * c // y.q - y.b * c // y.q) % 2):
            c *= 2
        elif r == 2 and c % 2:
            c *= 2
        self.c = c
        self.ax = x.a * (c // x.q)
        self.bx = x.b * (c // x.q)
        self.ay = y.a * (c // y.q)
        self.by = y.b * (c // y.q)
        if r == 2:
            assert (self.ax - self.bx) % 2 == 0 and (self.ay - self.by) % 2 == 0

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.ax, self.bx, self.ay, self.by)

    def set_coords(self, coords: tuple[int, int, int, int]) -> None:
        self.ax, self.bx, self.ay, self.by = coords

    def to_point(self) -> Point:
        return (
            QuadElem(self.ax, self.bx, self.c, self.d),
            QuadElem(self.ay, self.by, self.c, self.d),
        )

    def _floor(self, a: int, b: int) -> int:
        # floor of (a + b sqrt d) / c for c > 0
        if b == 0:
            m = 0
        elif b > 0:
            m = math.isqrt(b * b * self.d)
        else:
            t = math.isqrt(b * b * self.d)
            m = -t if t * t == b * b * self.d else -t - 1
        return (a + m) // self.c

    def step(self) -> None:
        d, p, q = self.d, self.p, self.q
        if self.case.lam_conj.q == 2:
            e = (p * self.ay + q * d * self.by) // 2
            f = (p * self.by + q * self.ay) // 2
        else:
            e = p * self.ay + q * d * self.by
            f = p * self.by + q * self.ay
        na = -self.ax - e
        nb = -self.bx - f
        na -= self._floor(na, nb) * self.c
        self.ax, self.bx = self.ay, self.by
        self.ay, self.by = na, nb

    def step_inv(self) -> None:
        d, p, q = self.d, self.p, self.q
        if self.case.lam_conj.q == 2:
            e = (p * self.ax + q * d * self.bx) // 2
            f = (p * self.bx + q * self.ax) // 2
        else:
            e = p * self.ax + q * d * self.bx
            f = p * self.bx + q * self.ax
        na = -e - self.ay
        nb = -f - self.by
        na -= self._floor(na, nb) * self.c
        self.ay, self.by = self.ax, self.bx
        self.ax, self.bx = na, nb
