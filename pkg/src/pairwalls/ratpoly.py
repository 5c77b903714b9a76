"""Exact univariate polynomials over the rationals.

Coefficients are kept as :class:`fractions.Fraction` in ascending degree with
no trailing zeros, so two polynomials are equal iff their coefficient tuples
are equal.  Ordering is the lexicographic order on ``Q[t]``: ``a < b`` iff the
leading coefficient of ``b - a`` is positive.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_TERM_RE = re.compile(
    r"""^(?P<coef>\(?[0-9]+(?:/[0-9]+)?\)?)?\*?
         (?P<var>t(?:\^(?P<exp>[0-9]+))?)?$""",
    re.VERBOSE,
)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


@functools.total_ordering
class RatPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "RatPoly":
        return cls([c])

    @classmethod
    def t(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, slope: Scalar, intercept: Scalar) -> "RatPoly":
        return cls([intercept, slope])

    @classmethod
    def binom(cls, shift: int, n: int) -> "RatPoly":
        """The polynomial ``binom(t + shift, n)`` in ``t``."""
        p = cls.const(1)
        for j in range(n):
            p = p * cls([shift - j, 1])
        return p.scale(Fraction(1, factorial(n)))

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_positive(self) -> bool:
        return self.leading > 0

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, q):
        if not isinstance(q, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1) / _frac(q))

    def scale(self, q: Scalar) -> "RatPoly":
        q = _frac(q)
        return RatPoly(q * c for c in self.coeffs)

    def __call__(self, t0: Scalar) -> Fraction:
        t0 = _frac(t0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    eval_at = __call__

    def shift(self, k: int) -> "RatPoly":
        """Return ``q`` with ``q(t) = p(t + k)``."""
        # Horner in the polynomial ring, substituting (t + k) for t.
        acc = RatPoly()
        step = RatPoly([k, 1])
        for c in reversed(self.coeffs):
            acc = acc * step + RatPoly([c])
        return acc

    # -- ordering ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return lex_cmp(self, other) < 0

    def __hash__(self):
        return hash(self.coeffs)

    # -- text / json ------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"RatPoly({format_poly(self)!r})"

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def to_json(self) -> list[dict]:
        return [{"num": str(c.numerator), "den": str(c.denominator)} for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "RatPoly":
        return cls(Fraction(int(d["num"]), int(d["den"])) for d in data)

    @classmethod
    def from_strings(cls, data) -> "RatPoly":
        return cls(Fraction(s) for s in data)

    @classmethod
    def parse(cls, text: str) -> "RatPoly":
        return parse_poly(text)


def _coerce(x):
    if isinstance(x, RatPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RatPoly.const(x)
    return NotImplemented


def lex_cmp(a: RatPoly, b: RatPoly) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    lead = (a - b).leading
    return (lead > 0) - (lead < 0)


def binom_poly(shift: int, n: int) -> RatPoly:
    return RatPoly.binom(shift, n)


def _fmt_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: RatPoly) -> str:
    """Human form, e.g. ``1/3*t^3+3*t^2+23/3*t+5``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = _fmt_coef(a)
        else:
            mono = "t" if i == 1 else f"t^{i}"
            body = mono if a == 1 else f"{_fmt_coef(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def parse_poly(text: str) -> RatPoly:
    """Parse the human form; also tolerates spaces and ``(1/2)t`` style."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms = re.findall(r"[+-][^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        m = _TERM_RE.match(term[1:])
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        coef = m.group("coef")
        c = Fraction(coef.strip("()")) if coef else Fraction(1)
        if m.group("var") is None:
            e = 0
        else:
            e = int(m.group("exp")) if m.group("exp") else 1
        coeffs[e] = coeffs.get(e, Fraction(0)) + sign * c
    top = max(coeffs)
    return RatPoly(coeffs.get(i, 0) for i in range(top + 1))
