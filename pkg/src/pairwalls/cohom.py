"""Cohomology dimensions of a small family of sheaves on P^3, and the
extension-group dimensions that control wall fibers.

Every sheaf here has an explicit resolution by line bundles, so
``sum((-1)**i * h^i)`` can always be checked against Riemann-Roch through
:func:`kclass`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .subscheme import SchemeClass, SchemeError

LINE_BUNDLE = "line_bundle"
PLANE = "plane"
LINE = "line"
PLANAR_CURVE = "planar_curve"
POINTS = "points"
COMPLETE_INTERSECTION = "complete_intersection"
IDEAL = "ideal_of"

KINDS = (LINE_BUNDLE, PLANE, LINE, PLANAR_CURVE, POINTS, COMPLETE_INTERSECTION, IDEAL)

DISJOINT = "disjoint"
POINT_ON_PURE_CURVE = "point_on_pure_curve"
POINT_EQUALS_EMBEDDED = "point_equals_embedded"
POINT_EQUALS_EMBEDDED_ON_CURVE = "point_equals_embedded_on_curve"
EMBEDDED_OFF_PLANE = "embedded_off_plane"

RELATIONS = (
    DISJOINT,
    POINT_ON_PURE_CURVE,
    POINT_EQUALS_EMBEDDED,
    POINT_EQUALS_EMBEDDED_ON_CURVE,
    EMBEDDED_OFF_PLANE,
)


class CohomError(ValueError):
    pass


class NoFormulaError(CohomError):
    """The requested configuration has no closed-form value."""


@dataclass(frozen=True)
class IncidenceConfig:
    relation: str = DISJOINT

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise CohomError(f"unknown incidence relation {self.relation!r}")


@dataclass(frozen=True)
class StdSheaf:
    """One of the standard sheaves, twisted by ``a``.

    ``d`` is the curve degree for planar curves, ``n`` the length for points,
    ``ab`` the degrees of a complete intersection and ``components`` the
    untwisted structure sheaves of a disjoint union for ideal sheaves.
    """

    kind: str
    a: int = 0
    d: int = 0
    n: int = 0
    ab: tuple = ()
    components: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CohomError(f"unsupported sheaf kind {self.kind!r}")
        if self.kind == PLANAR_CURVE and self.d < 1:
            raise CohomError("planar curve degree must be >= 1")
        if self.kind == POINTS and self.n < 0:
            raise CohomError("number of points must be >= 0")
        if self.kind == COMPLETE_INTERSECTION and (len(self.ab) != 2 or min(self.ab) < 1):
            raise CohomError("complete intersection needs two degrees >= 1")
        if self.kind == IDEAL and any(c.kind in (LINE_BUNDLE, IDEAL) for c in self.components):
            raise CohomError("ideal components must be structure sheaves of subschemes")

    def twisted(self, m: int) -> "StdSheaf":
        if self.kind == POINTS:
            return self
        return StdSheaf(self.kind, self.a + m, self.d, self.n, self.ab, self.components)

    def __str__(self):
        if self.kind == LINE_BUNDLE:
            return f"O({self.a})"
        if self.kind == PLANE:
            return f"O_H({self.a})"
        if self.kind == LINE:
            return f"O_L({self.a})"
        if self.kind == PLANAR_CURVE:
            return f"O_C{self.d}({self.a})"
        if self.kind == POINTS:
            return f"O_Z[{self.n}]"
        if self.kind == COMPLETE_INTERSECTION:
            return f"O_Y{self.ab}({self.a})"
        return "I(" + " + ".join(str(c) for c in self.components) + f")({self.a})"


def line_bundle(a: int) -> StdSheaf:
    return StdSheaf(LINE_BUNDLE, a)


def plane(a: int) -> StdSheaf:
    return StdSheaf(PLANE, a)


def line(a: int) -> StdSheaf:
    return StdSheaf(LINE, a)


def planar_curve(d: int, a: int) -> StdSheaf:
    return StdSheaf(PLANAR_CURVE, a, d=d)


def points(n: int) -> StdSheaf:
    return StdSheaf(POINTS, n=n)


def complete_intersection(a: int, b: int, m: int = 0) -> StdSheaf:
    return StdSheaf(COMPLETE_INTERSECTION, m, ab=(a, b))


def ideal_of(components: Iterable[StdSheaf] | SchemeClass, a: int = 0) -> StdSheaf:
    if isinstance(components, SchemeClass):
        components = components_of(components)
    return StdSheaf(IDEAL, a, components=tuple(components))


def components_of(c: SchemeClass) -> tuple[StdSheaf, ...]:
    """Planar split of a scheme class into a pure curve and its points."""
    if c.is_empty:
        return ()
    if c.dim == 0:
        return (points(c.euler),)
    if not c.planar_pure:
        raise SchemeError("only planar pure parts have a standard decomposition")
    pure = line(0) if c.degree == 1 else planar_curve(c.degree, 0)
    extra = c.euler - c.pure_euler()
    return (pure, points(extra)) if extra else (pure,)


# -- cohomology -----------------------------------------------------------

def _h0_o(a: int) -> int:
    return comb(a + 3, 3) if a >= 0 else 0


def _h3_o(a: int) -> int:
    return _h0_o(-a - 4)


def _h0_plane(a: int) -> int:
    return comb(a + 2, 2) if a >= 0 else 0


def _h2_plane(a: int) -> int:
    return comb(-a - 1, 2) if a <= -3 else 0


def h(f: StdSheaf) -> tuple[int, int, int, int]:
    a = f.a
    if f.kind == LINE_BUNDLE:
        return (_h0_o(a), 0, 0, _h3_o(a))
    if f.kind == PLANE:
        return (_h0_plane(a), 0, _h2_plane(a), 0)
    if f.kind == LINE:
        return (a + 1 if a >= 0 else 0, -a - 1 if a <= -2 else 0, 0, 0)
    if f.kind == PLANAR_CURVE:
        if f.d == 1:
            return h(line(a))
        h0 = _h0_plane(a) - _h0_plane(a - f.d)
        h1 = _h2_plane(a - f.d) - _h2_plane(a)
        return (h0, h1, 0, 0)
    if f.kind == POINTS:
        return (f.n, 0, 0, 0)
    if f.kind == COMPLETE_INTERSECTION:
        p, q = f.ab
        h0_ideal = _h0_o(a - p) + _h0_o(a - q) - _h0_o(a - p - q)
        h0 = _h0_o(a) - h0_ideal
        return (h0, h0 - euler(f), 0, 0)
    # ideal sheaf of a disjoint union, assuming maximal rank for restriction
    parts = [h(c.twisted(a)) for c in f.components]
    h0_z = sum(p[0] for p in parts)
    h1_z = sum(p[1] for p in parts)
    h0_ideal = max(0, _h0_o(a) - h0_z)
    return (h0_ideal, h0_z - _h0_o(a) + h0_ideal, h1_z, _h3_o(a))


def kclass(f: StdSheaf) -> dict[int, int]:
    """Class in K-theory as ``{twist: multiplicity}`` of line bundles; points map to key None."""
    out: dict = {}

    def add(key, coef):
        out[key] = out.get(key, 0) + coef
        if out[key] == 0:
            del out[key]

    a = f.a
    if f.kind == LINE_BUNDLE:
        add(a, 1)
    elif f.kind == PLANE:
        add(a, 1)
        add(a - 1, -1)
    elif f.kind == LINE:
        add(a, 1)
        add(a - 1, -2)
        add(a - 2, 1)
    elif f.kind == PLANAR_CURVE:
        for key, coef in kclass(plane(a)).items():
            add(key, coef)
        for key, coef in kclass(plane(a - f.d)).items():
            add(key, -coef)
    elif f.kind == POINTS:
        if f.n:
            add(None, f.n)
    elif f.kind == COMPLETE_INTERSECTION:
        p, q = f.ab
        add(a, 1)
        add(a - p, -1)
        add(a - q, -1)
        add(a - p - q, 1)
    else:
        add(a, 1)
        for c in f.components:
            for key, coef in kclass(c.twisted(a)).items():
                add(key, -coef)
    return out


def euler(f: StdSheaf) -> int:
    """Euler characteristic from the line-bundle resolution."""
    total = 0
    for key, coef in kclass(f).items():
        total += coef * (1 if key is None else comb(key + 3, 3) if key >= -3 else -comb(-key - 1, 3))
    return total


# -- extension groups ------------------------------------------------------

def ext_plus(a_cls: SchemeClass, l: int, cfg: IncidenceConfig | None = None) -> int:
    """Fiber dimension plus one of the positive extension side at a family wall.

    The image term of the connecting map is taken to be zero, so this is a
    lower bound in general and exact on every known example.
    """
    if l < 1:
        raise CohomError(f"l must be >= 1, got {l}")
    if not a_cls.planar_pure or a_cls.dim != 1:
        raise CohomError("positive extension formula needs a planar 1-dimensional A")
    return (l + 2) * (l + 1) // 2 + h(planar_curve(a_cls.degree, -3 - l))[1]


# (degree of A, points of A, length of P) -> {relation: ext^1}
_EXT_MINUS_TABLE = {
    (1, 0, 1): {POINT_ON_PURE_CURVE: 1, DISJOINT: 0},
    (3, 1, 1): {
        DISJOINT: 1,
        POINT_EQUALS_EMBEDDED: 3,
        POINT_ON_PURE_CURVE: 1,
        POINT_EQUALS_EMBEDDED_ON_CURVE: 6,
    },
    (3, 0, 2): {DISJOINT: 0, POINT_ON_PURE_CURVE: 1, EMBEDDED_OFF_PLANE: 2},
}


def ext_minus(a_cls: SchemeClass, p_cls: SchemeClass, l: int, cfg: IncidenceConfig | None = None) -> int:
    """Dimension of the negative extension side at a family wall."""
    if l < 1:
        raise CohomError(f"l must be >= 1, got {l}")
    cfg = cfg or IncidenceConfig()
    if cfg.relation == DISJOINT:
        return a_cls.points
    key = (a_cls.degree, a_cls.points, p_cls.euler)
    try:
        return _EXT_MINUS_TABLE[key][cfg.relation]
    except KeyError:
        raise NoFormulaError(f"no formula for A={a_cls.label()}, |P|={p_cls.euler}, {cfg.relation}") from None


def ext_minus_cases(a_cls: SchemeClass, p_cls: SchemeClass) -> dict[str, int]:
    """All tabulated incidence cases, or just the disjoint one."""
    key = (a_cls.degree, a_cls.points, p_cls.euler)
    return dict(_EXT_MINUS_TABLE.get(key, {DISJOINT: a_cls.points}))


# ext^1(I_sub(1), I_quot(1)) keyed by ((d, chi) of sub, (d, chi) of quot)
_IDEAL_EXT_TABLE = {
    ((2, 1), (1, 1)): 7,
    ((1, 1), (2, 1)): 3,
}


def ext_group1_pair(sub: SchemeClass, quot: SchemeClass, sub_has_section: bool = True) -> int:
    """Extension dimension between the two rank-1 pairs at a group-1 wall.

    With the section on the sub-object the space also picks up the sections
    of the quotient ideal.
    """
    key = ((sub.degree, sub.euler), (quot.degree, quot.euler))
    if key not in _IDEAL_EXT_TABLE:
        raise NoFormulaError(f"no ideal extension formula for {sub.label()} / {quot.label()}")
    value = _IDEAL_EXT_TABLE[key]
    if sub_has_section:
        value += h(ideal_of(quot, 1))[0]
    return value


def hilbert_fiber_dim(components: Iterable[StdSheaf], m: int) -> int:
    """``h^1(O_Y(m))`` for a disjoint union of standard structure sheaves."""
    total = 0
    for c in components:
        if c.kind in (LINE_BUNDLE, IDEAL):
            raise CohomError(f"{c} is not the structure sheaf of a curve or points")
        total += h(c.twisted(m))[1]
    return total
