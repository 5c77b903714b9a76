"""Numerical subschemes of P^3 of dimension at most one.

Only lengths, degrees and Euler characteristics are tracked.  A curve with
Hilbert polynomial ``d*t + chi`` is split, when needed, into a planar pure
part of minimal Euler characteristic plus a zero-dimensional remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .ratpoly import RatPoly


class SchemeError(ValueError):
    pass


def min_euler(d: int) -> int:
    """Euler characteristic of a plane curve of degree ``d``; the minimum over degree-d curves."""
    if d < 1:
        raise SchemeError(f"degree must be >= 1, got {d}")
    return (3 * d - d * d) // 2


@dataclass(frozen=True)
class SchemeClass:
    """``dim`` is 1, 0 or None (empty scheme)."""

    dim: Optional[int]
    degree: int = 0
    euler: int = 0
    planar_pure: bool = True
    points: int = 0

    @classmethod
    def empty(cls) -> "SchemeClass":
        return cls(None, 0, 0, True, 0)

    @classmethod
    def zero_dim(cls, n: int) -> "SchemeClass":
        if n == 0:
            return cls.empty()
        return cls(0, 0, n, True, n)

    @classmethod
    def curve(cls, d: int, euler: int, planar_pure: bool = True) -> "SchemeClass":
        """A 1-dimensional scheme; ``points`` is the planar point budget."""
        pts = euler - min_euler(d) if planar_pure else 0
        return cls(1, d, euler, planar_pure, max(pts, 0))

    @classmethod
    def from_poly(cls, p: RatPoly, planar_pure: bool = True) -> "SchemeClass":
        if p.degree > 1 or any(c.denominator != 1 for c in p.coeffs):
            raise SchemeError(f"not the Hilbert polynomial of a curve or points: {p}")
        d, chi = int(p.coeff(1)), int(p.coeff(0))
        if d < 0:
            raise SchemeError(f"negative degree in {p}")
        if d == 0:
            if chi < 0:
                raise SchemeError(f"negative length in {p}")
            return cls.zero_dim(chi)
        return cls.curve(d, chi, planar_pure)

    @property
    def is_empty(self) -> bool:
        return self.dim is None

    def hilbert_poly(self) -> RatPoly:
        return RatPoly([self.euler, self.degree])

    def pure_euler(self) -> int:
        """Euler characteristic of the pure part under the minimal planar split."""
        return min_euler(self.degree) if self.dim == 1 else 0

    def label(self) -> str:
        if self.is_empty:
            return "empty"
        if self.dim == 0:
            return f"{self.euler} point" + ("s" if self.euler != 1 else "")
        names = {1: "line", 2: "conic", 3: "cubic", 4: "quartic"}
        base = names.get(self.degree, f"degree-{self.degree} curve")
        if self.planar_pure and self.degree > 1:
            base = "plane " + base
        if self.points:
            base += f" + {self.points} pt" + ("s" if self.points != 1 else "")
        return base

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "degree": self.degree,
            "euler": self.euler,
            "planar_pure": self.planar_pure,
            "points": self.points,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SchemeClass":
        return cls(data["dim"], data["degree"], data["euler"], data["planar_pure"], data["points"])


def realizable(c: SchemeClass) -> bool:
    if c.dim is None:
        return c.degree == 0 and c.euler == 0
    if c.dim == 0:
        return c.degree == 0 and c.euler >= 1
    if c.dim == 1:
        return c.degree >= 1 and c.euler >= min_euler(c.degree)
    return False


def split_planar(p: RatPoly) -> tuple[int, int, int]:
    """``d*t + chi`` -> ``(d, min_euler(d), chi - min_euler(d))``."""
    if p.degree != 1:
        raise SchemeError(f"expected a linear polynomial, got {p}")
    d, chi = p.coeff(1), p.coeff(0)
    if d.denominator != 1 or chi.denominator != 1 or d < 1:
        raise SchemeError(f"not the Hilbert polynomial of a curve: {p}")
    d, chi = int(d), int(chi)
    floor = min_euler(d)
    if chi < floor:
        raise SchemeError(f"{p} is not realizable: euler {chi} < {floor}")
    return d, floor, chi - floor


def planar_relhilb_dim(d: int, n: int) -> int:
    """Dimension of degree-d plane curves plus ``n`` points in the same moving plane."""
    if d < 1:
        raise SchemeError(f"degree must be >= 1, got {d}")
    if n < 0:
        raise SchemeError("number of points must be >= 0")
    return 3 + (comb(d + 2, 2) - 1) + 2 * n


def family_dim(c: SchemeClass) -> int:
    """Dimension of the generic family of schemes realizing ``c``.

    Plane curves of degree >= 2 carry their points in the plane, a line with
    points spans a plane through it, and bare points move freely.
    """
    if c.is_empty:
        return 0
    if c.dim == 0:
        return 3 * c.euler
    if not c.planar_pure:
        raise SchemeError("family dimension only known for planar pure parts")
    if c.degree == 1:
        return 4 if c.points == 0 else 5 + 2 * c.points
    return planar_relhilb_dim(c.degree, c.points)


def stratum_dim(d: int, l: int, i: int) -> int:
    """Dimension of Z_i: a plane curve with ``l - i`` points in its plane and ``i`` off it."""
    if not 0 <= i <= l:
        raise SchemeError(f"stratum index {i} outside [0, {l}]")
    return planar_relhilb_dim(d, l - i) + 3 * i


@dataclass(frozen=True)
class CurveDescription:
    """A curve ``Y``: a pure part of degree ``d`` with Euler characteristic
    ``chi`` (points in the plane included) plus points off the plane."""

    d: int
    chi: int
    off_plane_points: int = 0
    nonplanar: bool = False

    def hilbert_poly(self) -> RatPoly:
        return RatPoly([self.chi + self.off_plane_points, self.d])

    def to_json(self) -> dict:
        return {
            "planar": {"d": self.d, "chi": self.chi},
            "off_plane_points": self.off_plane_points,
            "nonplanar": self.nonplanar,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CurveDescription":
        try:
            planar = data["planar"]
            return cls(
                int(planar["d"]),
                int(planar["chi"]),
                int(data.get("off_plane_points", 0)),
                bool(data.get("nonplanar", False)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemeError(f"bad curve description: {exc}") from None


@dataclass(frozen=True)
class StratumLabel:
    index: Optional[int] = None
    marker: Optional[str] = None

    def __str__(self):
        return f"Z_{self.index}" if self.index is not None else str(self.marker)


OUTSIDE_FAMILY = StratumLabel(marker="outside family")


def classify_stratum(y: CurveDescription, l_v: int, expected: Optional[RatPoly] = None) -> StratumLabel:
    if expected is not None and y.hilbert_poly() != expected:
        raise SchemeError(f"curve has Hilbert polynomial {y.hilbert_poly()}, expected {expected}")
    if y.nonplanar:
        return OUTSIDE_FAMILY
    if y.d >= 1 and y.chi < min_euler(y.d):
        raise SchemeError(f"planar part (d={y.d}, chi={y.chi}) is not realizable")
    if y.off_plane_points > l_v:
        raise SchemeError(f"{y.off_plane_points} off-plane points exceed l = {l_v}")
    return StratumLabel(index=y.off_plane_points)


def plane_points_h1(n: int, m: int) -> int:
    """h^1 of the ideal of ``n`` general points in a plane, twisted by ``m``."""
    return max(0, n - (comb(m + 2, 2) if m >= 0 else 0))


def family_pair_saturated(points_on_plane: int, d: int, k: int) -> bool:
    """Saturation test for an extension at a family wall whose quotient
    points meet the plane in ``points_on_plane`` general points."""
    return plane_points_h1(points_on_plane, k + d - 1) == 0
