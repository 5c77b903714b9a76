"""Reduced delta-Hilbert polynomials and sub-pair comparisons."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .numclass import NumClass, hilbert_poly, ideal_class
from .ratpoly import RatPoly, lex_cmp


class StabilityError(ValueError):
    pass


@dataclass(frozen=True)
class PairClass:
    cls: NumClass
    has_section: bool = True

    @property
    def epsilon(self) -> int:
        return 1 if self.has_section else 0

    @classmethod
    def ideal(cls, d: int, chi: int, twist: int = 0, section: bool = True) -> "PairClass":
        """Pair ``(I_C(twist), s)`` for a curve or points with polynomial ``d*t + chi``."""
        return cls(ideal_class(d, chi, twist), section)


def reduced_poly(p: PairClass, delta: RatPoly) -> RatPoly:
    if p.cls.rank <= 0:
        raise StabilityError("reduced polynomial needs positive rank")
    return (hilbert_poly(p.cls) + delta.scale(p.epsilon)) / p.cls.rank


class Verdict(NamedTuple):
    destabilizes: bool
    strictly: bool


def compare(sub: PairClass, whole: PairClass, delta: RatPoly) -> Verdict:
    """Does ``sub`` destabilize ``whole`` at ``delta``?  ``strictly`` flags equality."""
    c = lex_cmp(reduced_poly(sub, delta), reduced_poly(whole, delta))
    return Verdict(c >= 0, c == 0)


def critical_value(sub: PairClass, whole: PairClass) -> Optional[RatPoly]:
    """The unique ``delta`` where both reduced polynomials agree, if any."""
    rs, rw = sub.cls.rank, whole.cls.rank
    if rs <= 0 or rw <= 0:
        raise StabilityError("critical value needs positive ranks")
    slope = Fraction(sub.epsilon, rs) - Fraction(whole.epsilon, rw)
    if slope == 0:
        return None
    gap = hilbert_poly(whole.cls) / rw - hilbert_poly(sub.cls) / rs
    return gap / slope


def chamber_thresholds(rank: int) -> tuple[Fraction, Fraction]:
    """Constant-delta bounds ``(1/(r-1), 1/r)``.

    Below the first, a stable pair has a semistable sheaf; below the second,
    a stable sheaf with any section gives a stable pair.
    """
    if rank < 2:
        raise StabilityError("thresholds need rank >= 2")
    return Fraction(1, rank - 1), Fraction(1, rank)


def parse_sub(text: str) -> PairClass:
    """``"ideal:d,chi,twist,section"`` with section 0 or 1."""
    try:
        kind, rest = text.split(":", 1)
        d, chi, twist, section = (int(x) for x in rest.split(","))
    except ValueError:
        raise StabilityError(f"bad sub-pair {text!r}; expected ideal:d,chi,twist,section") from None
    if kind.strip() != "ideal" or section not in (0, 1):
        raise StabilityError(f"bad sub-pair {text!r}; expected ideal:d,chi,twist,section")
    return PairClass.ideal(d, chi, twist, bool(section))
