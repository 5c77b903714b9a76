"""Wall enumeration for rank-2 pairs on P^3.

A wall in group ``s`` for the twisted class ``v(k)`` comes from a sequence

    0 -> (I_A(s), 1) -> (E(k), section) -> (I_B(m - s), 0) -> 0,   m = 2k + c1,

and its critical value is ``P_E(k)(t) - 2 * P_{I_A(s)}(t)``.  The twist acts
on the subscheme too: ``P_{I_A(s)}(t) = P_O(t + s) - P_A(t + s)``.
"""

from __future__ import annotations

import functools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

from . import cohom
from .numclass import STRUCTURE_SHEAF, ClassError, NumClass, collapsing_wall, curve_poly, hilbert_poly, ideal_class, twist
from .ratpoly import RatPoly, lex_cmp
from .stability import PairClass, compare
from .subscheme import SchemeClass, SchemeError, family_dim, min_euler, realizable, split_planar

VERIFIED = "verified"
NUMERICAL = "numerical"
COLLAPSING = "collapsing"
INTERIOR = "interior"

FLIP = "flip"
DIVISORIAL = "divisorial_contraction"
REMOVAL = "removal"
UNCLASSIFIED = "unclassified"
COLLAPSE = "collapse"


class WallError(ValueError):
    pass


@dataclass(frozen=True)
class WallRecord:
    delta: RatPoly
    group: int
    subA: SchemeClass
    quotB: SchemeClass
    quot_twist: int
    family_index: Optional[int] = None
    actual: str = NUMERICAL
    kind: str = INTERIOR

    def rows(self) -> tuple[RatPoly, RatPoly]:
        return self.subA.hilbert_poly(), self.quotB.hilbert_poly()

    def to_json(self) -> dict:
        return {
            "delta": self.delta.to_json(),
            "delta_str": str(self.delta),
            "group": self.group,
            "subA": self.subA.to_json(),
            "quotB": self.quotB.to_json(),
            "quot_twist": self.quot_twist,
            "family_index": self.family_index,
            "actual": self.actual,
            "kind": self.kind,
        }

    @classmethod
    def from_json(cls, data: dict) -> "WallRecord":
        return cls(
            RatPoly.from_json(data["delta"]),
            data["group"],
            SchemeClass.from_json(data["subA"]),
            SchemeClass.from_json(data["quotB"]),
            data["quot_twist"],
            data["family_index"],
            data["actual"],
            data["kind"],
        )


def _check_class(v: NumClass, k: int) -> None:
    if v.rank != 2:
        raise ClassError(f"wall enumeration needs a rank-2 class, got rank {v.rank}")
    if not collapsing_wall(v, k).is_positive():
        raise ClassError(f"collapsing wall of {v} at twist {k} is not positive")


def _wall_order(a: WallRecord, b: WallRecord) -> int:
    c = lex_cmp(b.delta, a.delta)
    if c:
        return c
    ka = (a.group, -a.subA.degree, -a.subA.euler)
    kb = (b.group, -b.subA.degree, -b.subA.euler)
    return (ka > kb) - (ka < kb)


def sort_walls(walls) -> list[WallRecord]:
    """Descending by critical value; ties broken by group then by A."""
    return sorted(walls, key=functools.cmp_to_key(_wall_order))


def group_budget(v: NumClass, k: int, s: int) -> RatPoly:
    """``P_A(t + s) + P_B(t + m - s)`` forced by additivity."""
    m = 2 * k + v.c1
    p_o = hilbert_poly(STRUCTURE_SHEAF)
    return p_o.shift(s) + p_o.shift(m - s) - hilbert_poly(twist(v, k))


def wall_delta(v: NumClass, k: int, s: int, a: SchemeClass) -> RatPoly:
    p_o = hilbert_poly(STRUCTURE_SHEAF)
    sub = p_o.shift(s) - a.hilbert_poly().shift(s)
    return hilbert_poly(twist(v, k)) - sub.scale(2)


def _scheme(d: int, chi: int) -> Optional[SchemeClass]:
    if d == 0:
        if chi < 0:
            return None
        return SchemeClass.zero_dim(chi)
    c = SchemeClass.curve(d, chi)
    return c if realizable(c) else None


def _low_euler(d: int) -> int:
    return 0 if d == 0 else min_euler(d)


def _group_walls(v: NumClass, k: int, s: int, ceiling: RatPoly) -> list[tuple]:
    m = 2 * k + v.c1
    budget = group_budget(v, k, s)
    if budget.degree > 1 or any(c.denominator != 1 for c in budget.coeffs):
        return []
    total_d, total_x = int(budget.coeff(1)), int(budget.coeff(0))
    if total_d < 0:
        return []
    out = []
    for d_a in range(total_d + 1):
        d_b = total_d - d_a
        # chi_A + chi_B is fixed once the degrees are
        rest = total_x - d_a * s - d_b * (m - s)
        for chi_a in range(_low_euler(d_a), rest - _low_euler(d_b) + 1):
            a = _scheme(d_a, chi_a)
            b = _scheme(d_b, rest - chi_a)
            if a is None or b is None:
                continue
            if s == 0 and a.is_empty:
                continue  # the collapsing wall, added separately
            delta = wall_delta(v, k, s, a)
            if delta.is_positive() and delta < ceiling:
                out.append((delta, s, a, b, m - s))
    return out


def enumerate_walls(v: NumClass, k: int, max_group: Optional[int] = None, jobs: int = 1) -> list[WallRecord]:
    """All numerical walls of ``v(k)`` in groups ``0..max_group``, largest first."""
    _check_class(v, k)
    if max_group is None:
        max_group = k
    if max_group < 0:
        raise WallError("max_group must be >= 0")
    top = collapsing_wall(v, k)
    m = 2 * k + v.c1
    y = SchemeClass.from_poly(curve_poly(v, k))
    groups = range(max_group + 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            found = [row for rows in pool.map(lambda s: _group_walls(v, k, s, top), groups) for row in rows]
    else:
        found = [row for s in groups for row in _group_walls(v, k, s, top)]

    fam = _family_shape(v, k)
    w0 = w0_exists(v, k)[0] if curve_poly(v, k).degree == 1 else False
    records = [WallRecord(top, 0, SchemeClass.empty(), y, m, actual=VERIFIED, kind=COLLAPSING)]
    for delta, s, a, b, qt in found:
        index = None
        if fam is not None and s == 1 and a.degree == fam[0] and b.dim in (0, None):
            index = b.euler
        rec = WallRecord(delta, s, a, b, qt, index)
        records.append(replace(rec, actual=_actuality(rec, w0)))
    return sort_walls(records)


def _actuality(rec: WallRecord, w0: bool) -> str:
    if rec.kind == COLLAPSING:
        return VERIFIED
    if rec.group >= 2:
        return NUMERICAL
    if rec.family_index is not None:
        return VERIFIED if w0 else NUMERICAL
    if rec.group == 1:
        try:
            plus = cohom.ext_group1_pair(rec.subA, rec.quotB, True)
        except cohom.NoFormulaError:
            return NUMERICAL
        return VERIFIED if plus > 0 else NUMERICAL
    return NUMERICAL


def a0_poly(v: NumClass, k: int) -> RatPoly:
    """Hilbert polynomial of the sub-scheme A_0 at the top of the zero-dimensional family."""
    p_o = hilbert_poly(STRUCTURE_SHEAF)
    return p_o + p_o.shift(2 * k - 2 + v.c1) - hilbert_poly(twist(v, k - 1))


def _family_shape(v: NumClass, k: int) -> Optional[tuple[int, int, int]]:
    """``(d, min_euler(d), l)`` of A_0, or None when the family has no walls."""
    try:
        d, floor, l = split_planar(a0_poly(v, k))
    except SchemeError:
        return None
    # the smallest family value must still be a wall
    last = wall_delta(v, k, 1, SchemeClass.curve(d, floor))
    if not last.is_positive() or not wall_delta(v, k, 1, SchemeClass.curve(d, floor + l)) < collapsing_wall(v, k):
        return None
    return d, floor, l


def zero_dim_family(v: NumClass, k: int) -> tuple[int, list[WallRecord]]:
    """``(l, [W_0, ..., W_l])`` where ``l`` is the point budget of A_0."""
    _check_class(v, k)
    shape = _family_shape(v, k)
    if shape is None:
        raise WallError(f"no zero-dimensional family walls (A_0 polynomial {a0_poly(v, k)})")
    d, floor, l = shape
    m = 2 * k + v.c1
    w0 = w0_exists(v, k)[0]
    walls = []
    for i in range(l + 1):
        a = SchemeClass.curve(d, floor + l - i)
        rec = WallRecord(wall_delta(v, k, 1, a), 1, a, SchemeClass.zero_dim(i), m - 1, i)
        walls.append(replace(rec, actual=VERIFIED if w0 else NUMERICAL))
    return l, walls


def w0_exists(v: NumClass, k: int) -> tuple[bool, int, int]:
    p = curve_poly(v, k)
    if p.degree != 1 or any(c.denominator != 1 for c in p.coeffs):
        raise WallError(f"curve polynomial {p} is not that of a curve")
    d_y, chi_y = int(p.coeff(1)), int(p.coeff(0))
    c1 = v.c1
    d_a = d_y - 2 * k + 1 - c1
    chi_a = d_y * (2 * k - 1 + c1) + chi_y - (2 * k + 1 + c1) * (2 * k + c1) // 2 + 1
    return d_a > 0, d_a, chi_a


@dataclass(frozen=True)
class NamedWalls:
    collapse: WallRecord
    top: WallRecord
    bottom: WallRecord
    has_interior: bool
    minimal_wall_check: Optional[bool] = None

    def to_json(self) -> dict:
        return {
            "W_collapse": str(self.collapse.delta),
            "W_T": str(self.top.delta),
            "W_1": str(self.bottom.delta),
            "has_interior": self.has_interior,
            "minimal_wall_check": self.minimal_wall_check,
        }


def named_walls(walls: list[WallRecord], v: Optional[NumClass] = None, k: Optional[int] = None) -> NamedWalls:
    """W_T is the largest interior wall and W_1 the smallest; with no
    interior walls both fall back to the collapsing wall."""
    if not walls:
        raise WallError("no walls")
    ordered = sort_walls(walls)
    collapse = next((w for w in ordered if w.kind == COLLAPSING), ordered[0])
    interior = [w for w in ordered if w.kind != COLLAPSING]
    top = interior[0] if interior else collapse
    bottom = interior[-1] if interior else collapse
    check = None
    if v is not None and k is not None and v.c1 == -1:
        # for c1 = -1 the smallest wall comes from (O(k-1), 1)
        check = bottom.group == k - 1 and bottom.subA.is_empty
    return NamedWalls(collapse, top, bottom, bool(interior), check)


@dataclass(frozen=True)
class Transition:
    kind: str
    ss_dim: Optional[int] = None
    ext_plus: Optional[int] = None
    ext_minus: Optional[int] = None
    ext_minus_cases: dict = field(default_factory=dict)
    dim_plus: Optional[int] = None
    dim_minus: Optional[int] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ss_dim": self.ss_dim,
            "ext_plus": self.ext_plus,
            "ext_minus": self.ext_minus,
            "ext_minus_cases": dict(self.ext_minus_cases),
            "dim_plus": self.dim_plus,
            "dim_minus": self.dim_minus,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Transition":
        return cls(**data)


@dataclass(frozen=True)
class FamilyContext:
    v: NumClass
    k: int
    l: Optional[int]

    @classmethod
    def of(cls, v: NumClass, k: int) -> "FamilyContext":
        shape = _family_shape(v, k)
        return cls(v, k, shape[2] if shape else None)

    @property
    def ext_twist(self) -> int:
        return 2 * self.k - 1 + self.v.c1


def _ss_dim(w: WallRecord) -> Optional[int]:
    try:
        return family_dim(w.subA) + family_dim(w.quotB)
    except SchemeError:
        return None


def _dims(ss, plus, minus):
    dp = ss + plus - 1 if ss is not None and plus else None
    dm = ss + minus - 1 if ss is not None and minus else None
    return dp, dm


def classify_transition(w: WallRecord, ctx: FamilyContext) -> Transition:
    if w.kind == COLLAPSING:
        return Transition(COLLAPSE, note="no pair is semistable beyond this wall")
    ss = _ss_dim(w)
    if w.family_index is not None and ctx.l is not None:
        i, l = w.family_index, ctx.l
        if i <= l - 2:
            kind = FLIP
        elif i == l - 1:
            kind = DIVISORIAL
        else:
            kind = REMOVAL
        plus = cohom.ext_plus(w.subA, ctx.ext_twist)
        cases = cohom.ext_minus_cases(w.subA, w.quotB)
        minus = cohom.ext_minus(w.subA, w.quotB, ctx.ext_twist)
        dp, dm = _dims(ss, plus, minus)
        return Transition(kind, ss, plus, minus, cases, dp, dm, f"family wall W_{i} of W_0..W_{l}")
    try:
        plus = cohom.ext_group1_pair(w.subA, w.quotB, True)
        minus = cohom.ext_group1_pair(w.quotB, w.subA, False)
    except cohom.NoFormulaError:
        return Transition(UNCLASSIFIED, ss, note="no extension formula for this decomposition")
    dp, dm = _dims(ss, plus, minus)
    if plus >= 2 and minus >= 2:
        kind = FLIP
    elif minus == 0:
        kind = REMOVAL
    else:
        kind = UNCLASSIFIED
    return Transition(kind, ss, plus, minus, {}, dp, dm)


def check_invariants(v: NumClass, k: int, walls: list[WallRecord]) -> list[str]:
    """Return a list of violated invariants (empty when all hold)."""
    problems = []
    top = collapsing_wall(v, k)
    ctx = FamilyContext.of(v, k)
    for w in walls:
        if not w.delta.is_positive():
            problems.append(f"non-positive wall {w.delta}")
        if w.kind == COLLAPSING:
            if w.delta != top:
                problems.append(f"collapsing record {w.delta} differs from {top}")
        elif not w.delta < top:
            problems.append(f"interior wall {w.delta} not below {top}")
        budget = group_budget(v, k, w.group)
        pa = w.subA.hilbert_poly().shift(w.group)
        pb = w.quotB.hilbert_poly().shift(w.quot_twist)
        if pa + pb != budget:
            problems.append(f"additivity fails at {w.delta}")
        sub = PairClass(ideal_class(w.subA.degree, w.subA.euler, w.group), True)
        if not compare(sub, PairClass(twist(v, k), True), w.delta).strictly:
            problems.append(f"comparator disagrees at {w.delta}")
        if w.family_index is not None and classify_transition(w, ctx).kind == REMOVAL and w.family_index != ctx.l:
            problems.append(f"removal at family index {w.family_index} != l")
    return problems
