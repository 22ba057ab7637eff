"""Property tests for the exact quadratic-field arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadtorus.qfield import QuadElem, parse

DS = [2, 3, 5]

small_int = st.integers(min_value=-40, max_value=40)
nonzero_den = st.integers(min_value=1, max_value=30)


@st.composite
def quad(draw, d=None):
    dd = d if d is not None else draw(st.sampled_from(DS))
    return QuadElem(draw(small_int), draw(small_int), draw(nonzero_den), dd)


@st.composite
def quad_pair(draw):
    d = draw(st.sampled_from(DS))
    return draw(quad(d)), draw(quad(d))


@st.composite
def quad_triple(draw):
    d = draw(st.sampled_from(DS))
    return draw(quad(d)), draw(quad(d)), draw(quad(d))


def as_float(x: QuadElem) -> float:
    import math

    return (x.a + x.b * math.sqrt(x.d)) / x.q if x.d else x.a / x.q


@given(quad_triple())
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == QuadElem.from_int(0)


@given(quad())
def test_inverse(x):
    if x:
        assert x * x.inv() == QuadElem.from_int(1)
        assert x / x == QuadElem.from_int(1)


@given(quad_pair())
def test_conj_and_norm_multiplicative(xy):
    x, y = xy
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert (x * y).norm() == x.norm() * y.norm()


@given(quad())
def test_sign_matches_float(x):
    f = as_float(x)
    if abs(f) > 1e-6:
        assert x.sign() == (1 if f > 0 else -1)
    if not x:
        assert x.sign() == 0


@given(quad())
def test_floor_exact(x):
    n = x.floor()
    # n <= x < n+1, established purely by exact signs
    assert (x - n).sign() >= 0
    assert (x - (n + 1)).sign() < 0
    assert x.frac() == x - n
    assert x.ceil() == -((-x).floor())


@given(st.integers(min_value=-10**6, max_value=10**6), nonzero_den)
def test_floor_rational_oracle(p, q):
    x = QuadElem.rational(p, q)
    assert x.floor() == Fraction(p, q).__floor__()


@given(quad())
def test_parse_str_roundtrip(x):
    assert parse(str(x)) == x


@given(quad())
@settings(max_examples=40)
def test_pow_matches_repeated_multiplication(x):
    acc = QuadElem.from_int(1)
    for n in range(4):
        assert x**n == acc
        acc = acc * x
    if x:
        assert x**-2 == (x * x).inv()


@given(quad_pair())
def test_reflected_operators(xy):
    x, _ = xy
    assert 1 + x == x + 1
    assert 2 * x == x + x
    assert 1 - x == -(x - 1)
    if x:
        assert (1 / x) * x == QuadElem.from_int(1)
    assert Fraction(1, 2) + x == x + Fraction(1, 2)


def test_mixed_d_rejected():
    a = QuadElem.sqrt(2)
    b = QuadElem.sqrt(3)
    with pytest.raises(ValueError):
        a + b


def test_parse_rejects_decimals():
    with pytest.raises(ValueError):
        parse("0.5")
