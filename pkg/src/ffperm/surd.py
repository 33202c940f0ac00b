"""Exact numbers of the form r + c*sqrt(s) with rational r, c, s.

All bound values in this package (window bounds, weight lower bounds)
are quadratic irrationals of this shape.  Keeping them exact makes
"count <= bound" assertions bit-exact: no epsilon is ever chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def _sqrt_exact(s: Fraction) -> Fraction | None:
    """Return sqrt(s) when it is rational, else None."""
    if s < 0:
        raise ValueError("negative radicand")
    rn = math.isqrt(s.numerator)
    rd = math.isqrt(s.denominator)
    if rn * rn == s.numerator and rd * rd == s.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class Surd:
    """Value rational + coef * sqrt(radicand), compared exactly.

    The constructor normalizes: a perfect-square radicand is folded into
    the rational part, and a zero coefficient clears the radicand.
    """

    rational: Fraction
    coef: Fraction = Fraction(0)
    radicand: Fraction = Fraction(0)

    def __post_init__(self):
        rat = Fraction(self.rational)
        coef = Fraction(self.coef)
        rad = Fraction(self.radicand)
        if rad < 0:
            raise ValueError("negative radicand")
        if coef == 0 or rad == 0:
            coef, rad = Fraction(0), Fraction(0)
        else:
            root = _sqrt_exact(rad)
            if root is not None:
                rat += coef * root
                coef, rad = Fraction(0), Fraction(0)
        object.__setattr__(self, "rational", rat)
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "radicand", rad)

    @property
    def is_rational(self) -> bool:
        return self.coef == 0

    def __float__(self) -> float:
        return float(self.rational) + float(self.coef) * math.sqrt(float(self.radicand))

    # sign of (self - other) for rational other, computed without rounding
    def _cmp(self, other) -> int:
        t = Fraction(other)
        d = t - self.rational  # compare coef*sqrt(rad) against d
        if self.coef == 0:
            return 0 if d == 0 else (1 if d < 0 else -1)
        lhs_sq = self.coef * self.coef * self.radicand
        if self.coef > 0:
            if d <= 0:
                return 1
            return -1 if lhs_sq < d * d else (0 if lhs_sq == d * d else 1)
        if d >= 0:
            return -1
        return 1 if lhs_sq < d * d else (0 if lhs_sq == d * d else -1)

    def _coerce(self, other):
        if isinstance(other, Surd):
            if other.is_rational:
                return other.rational
            if other.radicand == self.radicand:
                # shift the other surd's radical onto this side
                merged = Surd(self.rational - other.rational,
                              self.coef - other.coef, self.radicand)
                return merged, Fraction(0)
            return NotImplemented
        if isinstance(other, Rational):
            return other
        return NotImplemented

    def __eq__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        if isinstance(c, tuple):
            return c[0]._cmp(c[1]) == 0
        return self._cmp(c) == 0

    def __lt__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        if isinstance(c, tuple):
            return c[0]._cmp(c[1]) < 0
        return self._cmp(c) < 0

    def __le__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        if isinstance(c, tuple):
            return c[0]._cmp(c[1]) <= 0
        return self._cmp(c) <= 0

    def __gt__(self, other):
        lt = self.__le__(other)
        return NotImplemented if lt is NotImplemented else not lt

    def __ge__(self, other):
        lt = self.__lt__(other)
        return NotImplemented if lt is NotImplemented else not lt

    def __hash__(self):
        if self.is_rational:
            return hash(self.rational)
        return hash((self.rational, self.coef, self.radicand))

    def __neg__(self) -> "Surd":
        return Surd(-self.rational, -self.coef, self.radicand)

    def __add__(self, other) -> "Surd":
        if isinstance(other, Rational):
            return Surd(self.rational + other, self.coef, self.radicand)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "Surd":
        if isinstance(other, Rational):
            return Surd(self.rational - other, self.coef, self.radicand)
        return NotImplemented

    def __rsub__(self, other) -> "Surd":
        return (-self).__add__(other)

    def __repr__(self) -> str:
        if self.is_rational:
            return f"Surd({self.rational})"
        sign = "+" if self.coef >= 0 else "-"
        return f"Surd({self.rational} {sign} {abs(self.coef)}*sqrt({self.radicand}))"


def sqrt_plus(radicand, shift, coef=1) -> Surd:
    """Shortcut for shift + coef*sqrt(radicand)."""
    return Surd(Fraction(shift), Fraction(coef), Fraction(radicand))
