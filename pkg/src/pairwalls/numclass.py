"""Chern-character bookkeeping on P^3.

A class is stored as its Chern character ``(ch0, ch1, ch2, ch3)`` with the
hyperplane powers normalised away (``H^3 = 1``).  Hilbert polynomials come
from Hirzebruch-Riemann-Roch with the Todd class ``1 + 2H + 11/6 H^2 + H^3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratpoly import RatPoly

TODD = (Fraction(1), Fraction(2), Fraction(11, 6), Fraction(1))


class ClassError(ValueError):
    """Raised for classes outside the supported lattice or rank range."""


@dataclass(frozen=True)
class NumClass:
    ch0: int
    ch1: int
    ch2: Fraction
    ch3: Fraction

    def __post_init__(self):
        for name in ("ch0", "ch1"):
            val = Fraction(getattr(self, name))
            if val.denominator != 1:
                raise ClassError(f"{name} must be an integer, got {val}")
            object.__setattr__(self, name, int(val))
        ch2, ch3 = Fraction(self.ch2), Fraction(self.ch3)
        if (2 * ch2).denominator != 1:
            raise ClassError(f"ch2 must lie in 1/2 Z, got {ch2}")
        if (6 * ch3).denominator != 1:
            raise ClassError(f"ch3 must lie in 1/6 Z, got {ch3}")
        object.__setattr__(self, "ch2", ch2)
        object.__setattr__(self, "ch3", ch3)

    @property
    def rank(self) -> int:
        return self.ch0

    @property
    def c1(self) -> int:
        return self.ch1

    def as_tuple(self) -> tuple:
        return (self.ch0, self.ch1, self.ch2, self.ch3)

    def normalized(self) -> bool:
        return self.ch0 > 0 and -1 < Fraction(self.ch1, self.ch0) <= 0

    def __add__(self, other: "NumClass") -> "NumClass":
        return NumClass(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other: "NumClass") -> "NumClass":
        return NumClass(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __neg__(self) -> "NumClass":
        return NumClass(*(-a for a in self.as_tuple()))

    def __mul__(self, n: int) -> "NumClass":
        return NumClass(*(n * a for a in self.as_tuple()))

    __rmul__ = __mul__

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.as_tuple()) + ")"

    def to_json(self) -> list[str]:
        return [str(x) for x in self.as_tuple()]

    @classmethod
    def from_json(cls, data) -> "NumClass":
        return cls(*(Fraction(x) for x in data))


STRUCTURE_SHEAF = NumClass(1, 0, 0, 0)
POINT = NumClass(0, 0, 0, 1)


def line_bundle(a: int) -> NumClass:
    return twist(STRUCTURE_SHEAF, a)


def curve_structure_sheaf(degree: int, euler: int) -> NumClass:
    """Class of ``O_C`` for a subscheme with Hilbert polynomial ``degree*t + euler``."""
    return NumClass(0, 0, degree, euler - 2 * degree)


def ideal_class(degree: int, euler: int, a: int = 0) -> NumClass:
    """Class of ``I_C(a)`` for ``C`` with Hilbert polynomial ``degree*t + euler``."""
    return twist(STRUCTURE_SHEAF - curve_structure_sheaf(degree, euler), a)


def twist(v: NumClass, k: int) -> NumClass:
    """Multiply by ``exp(kH)``."""
    r, c, d, e = v.as_tuple()
    k = Fraction(k)
    return NumClass(
        r,
        c + k * r,
        d + k * c + k * k / 2 * r,
        e + k * d + k * k / 2 * c + k**3 / 6 * r,
    )


def chern_from_ch(v: NumClass) -> tuple[int, Fraction, Fraction]:
    if v.ch0 not in (1, 2):
        raise ClassError(f"Chern classes supported for rank 1 and 2 only, got rank {v.ch0}")
    c1 = Fraction(v.ch1)
    c2 = c1 * c1 / 2 - v.ch2
    c3 = 2 * v.ch3 - c1**3 / 3 + c1 * c2
    return v.ch1, c2, c3


def ch_from_chern(rank: int, c1: int, c2, c3) -> NumClass:
    if rank not in (1, 2):
        raise ClassError(f"Chern classes supported for rank 1 and 2 only, got rank {rank}")
    c1f, c2, c3 = Fraction(c1), Fraction(c2), Fraction(c3)
    ch2 = (c1f * c1f - 2 * c2) / 2
    ch3 = (c1f**3 - 3 * c1f * c2 + 3 * c3) / 6
    return NumClass(rank, c1, ch2, ch3)


def hilbert_poly(v: NumClass) -> RatPoly:
    """``t -> chi(v(t))`` by HRR."""
    r, c, d, e = v.as_tuple()
    return RatPoly([
        e + 2 * d + Fraction(11, 6) * c + r,
        d + 2 * c + Fraction(11, 6) * r,
        Fraction(c, 2) + r,
        Fraction(r, 6),
    ])


def euler_char(v: NumClass, t: int = 0) -> Fraction:
    return hilbert_poly(v)(t)


def collapsing_wall(v: NumClass, k: int) -> RatPoly:
    """Critical value of the sub-pair ``(O, 1)`` inside a pair of class ``v(k)``."""
    if v.rank < 2:
        raise ClassError("collapsing wall needs rank >= 2")
    p_o = hilbert_poly(STRUCTURE_SHEAF)
    return (hilbert_poly(twist(v, k)) - p_o.scale(v.rank)) / (v.rank - 1)


def curve_poly(v: NumClass, k: int) -> RatPoly:
    """Hilbert polynomial of ``O_Y`` where ``0 -> O -> E(k) -> I_Y(2k + c1) -> 0``."""
    if v.rank != 2:
        raise ClassError("curve polynomial is defined for rank 2 classes")
    m = 2 * k + v.c1
    p_o = hilbert_poly(STRUCTURE_SHEAF)
    return p_o + p_o.shift(-m) - hilbert_poly(twist(v, k)).shift(-m)


def parse_class(text: str) -> NumClass:
    """``"2,0,-2,1"`` or with fractions ``"2,-1,-1/2,5/6"``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ClassError(f"expected four comma-separated entries, got {text!r}")
    try:
        vals = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ClassError(f"bad class {text!r}: {exc}") from None
    return NumClass(*vals)


def parse_chern(text: str) -> NumClass:
    """``"2:0,2,2"`` meaning rank 2 with ``(c1, c2, c3) = (0, 2, 2)``."""
    try:
        rank_s, rest = text.split(":")
        rank = int(rank_s)
        c1, c2, c3 = (Fraction(p.strip()) for p in rest.split(","))
    except (ValueError, ZeroDivisionError):
        raise ClassError(f"bad Chern data {text!r}; expected rank:c1,c2,c3") from None
    if c1.denominator != 1:
        raise ClassError("c1 must be an integer")
    return ch_from_chern(rank, int(c1), c2, c3)
