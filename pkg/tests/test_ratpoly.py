from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from pairwalls.ratpoly import RatPoly, format_poly, lex_cmp, parse_poly

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(fracs, max_size=5).map(RatPoly)


def test_lex_examples():
    assert lex_cmp(RatPoly([-1, 1]), RatPoly([1, 1])) == -1
    assert lex_cmp(RatPoly([1, 1]), RatPoly([3, 4, 1])) == -1
    w1, w0, top = RatPoly.parse("t-1"), RatPoly.parse("t+1"), RatPoly.parse("t^2+4t+3")
    assert w1 < w0 < top


def test_shift_examples():
    assert RatPoly.binom(3, 3).shift(1) == RatPoly.binom(4, 3)
    assert RatPoly([2, 1]).shift(1) == RatPoly([3, 1])
    p = RatPoly([0, Fraction(8, 3), 2, Fraction(1, 3)])
    assert str(p.shift(1)) == "1/3*t^3+3*t^2+23/3*t+5"


def test_shift_against_sympy():
    t = sp.Symbol("t")
    p = RatPoly([0, Fraction(8, 3), 2, Fraction(1, 3)])
    expr = sum(sp.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(p.coeffs))
    ref = sp.Poly(sp.expand(expr.subs(t, t + 1)), t).all_coeffs()[::-1]
    assert [Fraction(str(c)) for c in ref] == list(p.shift(1).coeffs)


def test_arith_examples():
    assert RatPoly([1, 1]) + RatPoly([1, 1]) == RatPoly([2, 2])
    p = RatPoly([3, 0, Fraction(1, 2)])
    assert (p - p).is_zero()
    assert RatPoly.binom(3, 3)(0) == 1
    assert p.scale(2) == RatPoly([6, 0, 1])


def test_canonical_form():
    assert RatPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert RatPoly([0, 0]).coeffs == ()
    assert RatPoly([Fraction(2, 4)]).coeffs[0].denominator == 2


def test_zero_is_not_positive():
    assert not RatPoly().is_positive()
    assert lex_cmp(RatPoly(), RatPoly([1])) == -1


@pytest.mark.parametrize("text", ["1/3*t^3+3*t^2+23/3*t+5", "t^2+4*t+3", "-t+1", "0", "1/2*t^2+3/2*t+1", "2*t"])
def test_format_parse_roundtrip(text):
    assert format_poly(parse_poly(text)) == text


def test_parse_loose_forms():
    assert parse_poly("(1/2)t^2 - t") == RatPoly([0, -1, Fraction(1, 2)])
    assert parse_poly("2t+2") == RatPoly([2, 2])
    with pytest.raises(ValueError):
        parse_poly("t**2")
    with pytest.raises(ValueError):
        parse_poly("")


def test_immutable():
    with pytest.raises(AttributeError):
        RatPoly([1]).coeffs = ()


@given(polys)
def test_json_roundtrip(p):
    assert RatPoly.from_json(p.to_json()) == p
    assert RatPoly.from_strings(p.to_strings()) == p
    assert parse_poly(format_poly(p)) == p


@settings(max_examples=300)
@given(polys, polys, polys)
def test_lex_total_order(a, b, c):
    ab, ba = lex_cmp(a, b), lex_cmp(b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b) == (a - b).is_zero()
    assert (ab < 0) == ((b - a).leading > 0)
    if ab <= 0 and lex_cmp(b, c) <= 0:
        assert lex_cmp(a, c) <= 0


@given(polys, st.integers(-6, 6), st.integers(-6, 6))
def test_shift_composes(p, a, b):
    assert p.shift(a).shift(b) == p.shift(a + b)


@given(polys, polys, fracs)
def test_ring_and_eval(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert p.shift(3)(x) == p(x + 3)
