"""Admissible spectra of rank-2 semistable sheaves with c1 = 0 on P^3.

A spectrum is a nondecreasing sequence ``k_1 <= ... <= k_m`` with ``m = c2``
and an integer ``s`` such that ``c3 = -2 * sum(k) - 2 * s`` and
``0 <= s <= (c2**2 + c2) / 2``.  Negative and positive entries are connected
to -1 and 1 respectively.  By default the smallest entry is also required to
be at most -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import NamedTuple, Optional

from . import cohom
from .numclass import ClassError, NumClass, chern_from_ch, euler_char


class SpectrumCandidate(NamedTuple):
    ks: tuple[int, ...]
    s: int

    def to_json(self) -> dict:
        return {"ks": list(self.ks), "s": self.s}


def s_max(c2: int) -> int:
    return (c2 * c2 + c2) // 2


def connected(ks) -> bool:
    present = set(ks)
    lo, hi = min(ks, default=0), max(ks, default=0)
    if lo <= -2 and not all(j in present for j in range(lo, 0)):
        return False
    if hi >= 1 and not all(j in present for j in range(1, hi + 1)):
        return False
    return True


def enumerate_spectra(c2: int, c3: int, require_negative: bool = True) -> list[SpectrumCandidate]:
    """All admissible spectra, sorted lexicographically on ``ks``."""
    if c2 < 1:
        raise ClassError("spectra need c2 >= 1")
    if c3 % 2:
        return []
    top = s_max(c2)
    box = range(-(c2 + top + 2), c2 + 3)
    out = []
    for ks in combinations_with_replacement(box, c2):
        s = -c3 // 2 - sum(ks)
        if not 0 <= s <= top:
            continue
        if require_negative and ks[0] > -1:
            continue
        if connected(ks):
            out.append(SpectrumCandidate(ks, s))
    return out


def h2_twist(spec: SpectrumCandidate, t: int) -> int:
    return sum(cohom.h(cohom.line(k + t + 1))[1] for k in spec.ks)


@dataclass(frozen=True)
class H0Bound:
    bound: Optional[int]
    proven_positive: bool
    spectra: tuple
    h2: tuple

    def to_json(self) -> dict:
        return {
            "spectra": [sp.to_json() for sp in self.spectra],
            "h2": list(self.h2),
            "h0_bound": self.bound,
            "proven_positive": self.proven_positive,
        }


def h0_lower_bound(v: NumClass, t: int, require_negative: bool = True) -> H0Bound:
    """Lower bound for ``h^0(E(t))`` when every spectrum kills ``h^2(E(t))``."""
    if v.rank != 2:
        raise ClassError("spectrum bound needs a rank-2 class")
    c1, c2, c3 = chern_from_ch(v)
    if c1 != 0:
        raise ClassError("spectrum bound is only available for c1 = 0")
    if c2.denominator != 1 or c3.denominator != 1:
        raise ClassError("non-integral Chern classes")
    spectra = tuple(enumerate_spectra(int(c2), int(c3), require_negative))
    h2 = tuple(h2_twist(sp, t) for sp in spectra)
    if not spectra or any(h2):
        return H0Bound(None, False, spectra, h2)
    chi = euler_char(v, t)
    bound = int(chi)
    return H0Bound(bound, bound >= 1, spectra, h2)
