from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from pairwalls.numclass import (
    ClassError,
    NumClass,
    ch_from_chern,
    chern_from_ch,
    collapsing_wall,
    curve_poly,
    euler_char,
    hilbert_poly,
    ideal_class,
    parse_chern,
    parse_class,
    twist,
)
from pairwalls.ratpoly import RatPoly

F = Fraction

classes = st.builds(
    NumClass,
    st.integers(0, 3),
    st.integers(-4, 4),
    st.integers(-12, 12).map(lambda n: F(n, 2)),
    st.integers(-36, 36).map(lambda n: F(n, 6)),
)


def test_twist_examples():
    assert twist(NumClass(1, 0, 0, 0), 1) == NumClass(1, 1, F(1, 2), F(1, 6))
    assert twist(NumClass(2, 0, -1, 0), 1) == NumClass(2, 2, 0, F(-2, 3))
    v = NumClass(2, 0, -3, 4)
    assert twist(twist(v, 1), -1) == v


def test_twist_matches_oracle():
    for ch in [(2, 0, -1, 0), (2, 0, -3, 4), (2, -1, F(-1, 2), F(5, 6))]:
        for k in (-2, 1, 3):
            assert twist(NumClass(*ch), k).as_tuple() == oracles.twisted(ch, k)


def test_chern_examples():
    assert chern_from_ch(NumClass(2, 0, -1, 0)) == (0, 1, 0)
    assert chern_from_ch(NumClass(2, 0, -2, 1)) == (0, 2, 2)
    assert chern_from_ch(NumClass(1, 0, 0, 0)) == (0, 0, 0)
    assert chern_from_ch(NumClass(2, -1, F(-1, 2), F(5, 6))) == (-1, 1, 1)
    with pytest.raises(ClassError):
        chern_from_ch(NumClass(3, 0, 0, 0))


@given(st.integers(-3, 3), st.integers(-9, 9), st.integers(-9, 9))
def test_chern_roundtrip(c1, c2, c3):
    # c1*c2 + c3 even keeps every Euler characteristic integral
    c3 = c3 + ((c1 * c2 + c3) % 2)
    v = ch_from_chern(2, c1, c2, c3)
    assert chern_from_ch(v) == (c1, c2, c3)


def test_hilbert_examples():
    assert hilbert_poly(NumClass(1, 0, 0, 0)) == RatPoly.binom(3, 3)
    assert str(hilbert_poly(NumClass(2, 0, -1, 0))) == "1/3*t^3+2*t^2+8/3*t"
    assert hilbert_poly(NumClass(2, 0, -1, 0)).shift(1)(0) == 5
    v = NumClass(2, 0, -2, 0)
    assert euler_char(v, 1) == 2 and euler_char(v, -1) == -2


@settings(max_examples=60, deadline=None)
@given(classes)
def test_hilbert_matches_sympy_hrr(v):
    assert hilbert_poly(v).coeffs == oracles.coeffs(oracles.hilbert(v.as_tuple()))


@settings(max_examples=500)
@given(classes, st.integers(-5, 5))
def test_hrr_twist_commutes(v, k):
    assert hilbert_poly(twist(v, k)) == hilbert_poly(v).shift(k)


@given(classes, classes)
def test_hilbert_additive(v, w):
    assert hilbert_poly(v + w) == hilbert_poly(v) + hilbert_poly(w)


def test_lattice_checks():
    with pytest.raises(ClassError):
        NumClass(2, 0, F(1, 3), 0)
    with pytest.raises(ClassError):
        NumClass(2, F(1, 2), 0, 0)
    with pytest.raises(ClassError):
        NumClass(2, 0, 0, F(1, 4))
    assert NumClass(2, 0, -1, 0).normalized()
    assert not NumClass(2, 2, 0, 0).normalized()


def test_collapsing_examples():
    assert str(collapsing_wall(NumClass(2, 0, -1, 0), 1)) == "t^2+4*t+3"
    assert str(collapsing_wall(NumClass(2, -1, F(-1, 2), F(5, 6)), 1)) == "1/2*t^2+3/2*t+1"
    assert str(collapsing_wall(NumClass(2, 0, -3, 4), 1)) == "t^2+2*t+1"
    with pytest.raises(ClassError):
        collapsing_wall(NumClass(1, 0, 0, 0), 1)


def test_collapsing_oracle(example):
    _, v = example
    assert collapsing_wall(v, 1).coeffs == oracles.coeffs(oracles.collapsing(v.as_tuple(), 1))


@pytest.mark.parametrize(
    "ch, expected",
    [((2, 0, -1, 0), "2*t+2"), ((2, 0, -3, 4), "4*t"), ((2, 0, -2, 0), "3*t+3"), ((2, 0, -2, 1), "3*t+2")],
)
def test_curve_poly_examples(ch, expected):
    assert str(curve_poly(NumClass(*ch), 1)) == expected


def test_curve_poly_oracle(example):
    _, v = example
    for k in (1, 2, 3):
        assert curve_poly(v, k).coeffs == oracles.coeffs(oracles.curve(v.as_tuple(), k))


@settings(max_examples=100)
@given(st.integers(-3, 3), st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 4))
def test_curve_poly_sequence(c1, c2, c3, k):
    # chi(O) + chi(I_Y(m)) = chi(E(k)) with m = 2k + c1
    c3 = c3 + ((c1 * c2 + c3) % 2)
    v = ch_from_chern(2, c1, c2, c3)
    p = curve_poly(v, k)
    assert p.degree <= 1
    m = 2 * k + c1
    y = ideal_class(int(p.coeff(1)), int(p.coeff(0)), m) if all(c.denominator == 1 for c in p.coeffs) else None
    if y is not None:
        assert hilbert_poly(NumClass(1, 0, 0, 0)) + hilbert_poly(y) == hilbert_poly(twist(v, k))


def test_parsers():
    assert parse_class("2,-1,-1/2,5/6") == NumClass(2, -1, F(-1, 2), F(5, 6))
    assert parse_chern("2:0,2,2") == NumClass(2, 0, -2, 1)
    for bad in ["2,0,0", "2,x,0,0", "2,0,1/0,0"]:
        with pytest.raises(ClassError):
            parse_class(bad)
    with pytest.raises(ClassError):
        parse_chern("2;0,2,2")
    with pytest.raises(ClassError):
        parse_chern("3:0,2,2")


def test_json_roundtrip():
    v = NumClass(2, -1, F(-1, 2), F(5, 6))
    assert NumClass.from_json(v.to_json()) == v
