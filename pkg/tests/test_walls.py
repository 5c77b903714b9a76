from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CLASSES, brute_walls
from pairwalls.numclass import ClassError, NumClass, ideal_class, twist
from pairwalls.stability import PairClass, compare
from pairwalls.walls import (
    COLLAPSING,
    DIVISORIAL,
    FLIP,
    REMOVAL,
    VERIFIED,
    FamilyContext,
    WallError,
    WallRecord,
    check_invariants,
    classify_transition,
    enumerate_walls,
    named_walls,
    w0_exists,
    zero_dim_family,
)

F = Fraction


def _rows(walls):
    return [(str(w.delta), str(w.rows()[0]), str(w.rows()[1])) for w in walls]


def test_unique_wall_for_odd_class():
    walls = enumerate_walls(NumClass(2, -1, F(-1, 2), F(5, 6)), 1)
    assert len(walls) == 1
    assert walls[0].kind == COLLAPSING and str(walls[0].delta) == "1/2*t^2+3/2*t+1"


def test_quartic_chart():
    walls = enumerate_walls(NumClass(2, 0, -3, 4), 1)
    assert _rows(walls)[1:] == [
        ("3*t+5", "3*t+2", "0"),
        ("3*t+3", "3*t+1", "1"),
        ("3*t+1", "3*t", "2"),
        ("t+1", "2*t+1", "t+1"),
    ]
    assert sorted(str(w.delta) for w in walls) == sorted(["t+1", "3*t+1", "3*t+3", "3*t+5", "t^2+2*t+1"])


@pytest.mark.parametrize("ch, count", [((2, 0, -2, 0), 6), ((2, 0, -2, 1), 5), ((2, 0, -1, 0), 3)])
def test_counts(ch, count):
    assert len(enumerate_walls(NumClass(*ch), 1)) == count


def test_brute_force_equivalence(example):
    name, v = example
    ours = {
        (w.delta.coeffs, w.group, (w.subA.degree, w.subA.euler), (w.quotB.degree, w.quotB.euler))
        for w in enumerate_walls(v, 1)
    }
    assert ours == set(brute_walls(name))


def test_brute_force_higher_twist():
    import oracles

    v = NumClass(2, 0, -1, 0)
    ours = {
        (w.delta.coeffs, w.group, (w.subA.degree, w.subA.euler), (w.quotB.degree, w.quotB.euler))
        for w in enumerate_walls(v, 2)
    }
    assert ours == oracles.brute_walls(CLASSES["null"], 2, dmax=10, chimax=40)


def test_parallel_is_identical(example):
    _, v = example
    for k in (1, 2):
        assert enumerate_walls(v, k, jobs=4) == enumerate_walls(v, k)


def test_walls_sorted_and_bounded(example):
    _, v = example
    walls = enumerate_walls(v, 2)
    deltas = [w.delta for w in walls]
    assert deltas == sorted(deltas, reverse=True)
    assert check_invariants(v, 2, walls) == []


def test_comparator_roundtrip(example):
    _, v = example
    for k in (1, 2):
        whole = PairClass(twist(v, k), True)
        for w in enumerate_walls(v, k):
            sub = PairClass(ideal_class(w.subA.degree, w.subA.euler, w.group), True)
            assert compare(sub, whole, w.delta).strictly


def test_bad_classes():
    with pytest.raises(ClassError):
        enumerate_walls(NumClass(1, 0, 0, 0), 1)
    with pytest.raises(ClassError):
        enumerate_walls(NumClass(2, 0, -1, 0), -3)
    with pytest.raises(WallError):
        enumerate_walls(NumClass(2, 0, -1, 0), 1, max_group=-1)


@pytest.mark.parametrize(
    "ch, l, budget",
    [((2, 0, -1, 0), 1, "t+2"), ((2, 0, -3, 4), 2, "3*t+2"), ((2, 0, -2, 0), 3, "2*t+4"), ((2, 0, -2, 1), 2, "2*t+3")],
)
def test_zero_dim_family(ch, l, budget):
    got_l, walls = zero_dim_family(NumClass(*ch), 1)
    assert got_l == l and len(walls) == l + 1
    assert str(walls[0].subA.hilbert_poly()) == budget
    assert all(b.delta < a.delta for a, b in zip(walls, walls[1:]))
    assert [w.quotB.euler for w in walls] == list(range(l + 1))
    listed = {(w.delta, w.family_index) for w in enumerate_walls(NumClass(*ch), 1) if w.family_index is not None}
    assert listed == {(w.delta, w.family_index) for w in walls}


def test_family_absent_for_odd_class():
    with pytest.raises(WallError):
        zero_dim_family(NumClass(2, -1, F(-1, 2), F(5, 6)), 1)


def test_w0_exists():
    assert w0_exists(NumClass(2, 0, -1, 0), 1) == (True, 1, 2)
    assert w0_exists(NumClass(2, 0, -3, 4), 1) == (True, 3, 2)
    # curve degree 2k - 1 + c1 sits on the boundary
    assert w0_exists(NumClass(2, 0, 0, 0), 1)[:2] == (False, 0)


def test_named_walls():
    named = named_walls(enumerate_walls(NumClass(2, 0, -3, 4), 1))
    assert named.top.rows() == (named.top.subA.hilbert_poly(), named.top.quotB.hilbert_poly())
    assert str(named.top.subA.hilbert_poly()) == "3*t+2" and named.top.quotB.is_empty
    assert (str(named.bottom.subA.hilbert_poly()), str(named.bottom.quotB.hilbert_poly())) == ("2*t+1", "t+1")

    v = NumClass(2, -1, F(-1, 2), F(5, 6))
    named = named_walls(enumerate_walls(v, 1), v, 1)
    assert named.top.delta == named.bottom.delta == named.collapse.delta
    assert named.minimal_wall_check is True

    named = named_walls(enumerate_walls(NumClass(2, 0, -2, 1), 1))
    assert str(named.bottom.delta) == "1"
    assert (str(named.bottom.subA.hilbert_poly()), str(named.bottom.quotB.hilbert_poly())) == ("t+2", "t+1")
    with pytest.raises(WallError):
        named_walls([])


def _transitions(ch):
    v = NumClass(*ch)
    ctx = FamilyContext.of(v, 1)
    return [classify_transition(w, ctx) for w in enumerate_walls(v, 1)][1:]


def test_transitions_quartic():
    w0, w1, w2, w3 = _transitions((2, 0, -3, 4))
    assert [w0.kind, w1.kind, w2.kind, w3.kind] == [FLIP, DIVISORIAL, REMOVAL, FLIP]
    assert (w3.ss_dim, w3.dim_plus, w3.dim_minus) == (12, 20, 14)
    assert (w3.ext_plus - 1, w3.ext_minus - 1) == (8, 2)
    assert w2.ext_minus == 0


def test_transitions_null_correlation():
    w0, w1 = _transitions((2, 0, -1, 0))
    assert (w0.kind, w1.kind) == (DIVISORIAL, REMOVAL)
    assert (w0.ext_plus - 1, w0.ext_minus - 1) == (5, 0)


@pytest.mark.parametrize("ch", [CLASSES[n] for n in ("null", "quartic", "c3zero", "c3two")])
def test_removal_only_at_last_index(ch):
    v = NumClass(*ch)
    ctx = FamilyContext.of(v, 1)
    for w in enumerate_walls(v, 1):
        if w.family_index is not None and classify_transition(w, ctx).kind == REMOVAL:
            assert w.family_index == ctx.l


def test_actuality():
    walls = enumerate_walls(NumClass(2, 0, -3, 4), 1)
    assert all(w.actual == VERIFIED for w in walls)
    walls = enumerate_walls(NumClass(2, 0, -2, 0), 1)
    assert walls[-1].actual == "numerical"
    deep = enumerate_walls(NumClass(2, 0, -1, 0), 3)
    assert all(w.actual == "numerical" for w in deep if w.group >= 2)


def test_record_json(example):
    _, v = example
    for w in enumerate_walls(v, 2):
        assert WallRecord.from_json(w.to_json()) == w


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(0, 5), st.integers(0, 3), st.integers(1, 3))
def test_random_classes_are_consistent(c2, half_c3, c1_neg, k):
    from pairwalls.numclass import ch_from_chern

    c1 = -(c1_neg % 2)
    c3 = 2 * half_c3 + (c1 * c2) % 2
    v = ch_from_chern(2, c1, c2, c3)
    try:
        walls = enumerate_walls(v, k)
    except ClassError:
        return
    assert check_invariants(v, k, walls) == []
    assert sum(w.kind == COLLAPSING for w in walls) == 1
