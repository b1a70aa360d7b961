"""Exact arithmetic on the strictly positive rationals.

Everything downstream manipulates sets of these values, so the
representation stays small: a reduced pair of positive Python ints.
All operations are exact; numerators and denominators may grow without
bound and are never rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class NonPositiveError(ValueError):
    """A value that must be strictly positive was zero or negative."""


class NotGreaterError(ValueError):
    """Strict subtraction a - b was requested with a <= b."""


class NotLessError(ValueError):
    """An operation requiring a < b was given a >= b."""


@dataclass(frozen=True, slots=True)
class PosRational:
    """A strictly positive rational, always stored reduced.

    Structural equality coincides with value equality because of the
    canonical form, so instances can be dict keys or set members.
    """

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        if self.num <= 0 or self.den <= 0:
            raise NonPositiveError(f"{self.num}/{self.den} is not strictly positive")
        g = math.gcd(self.num, self.den)
        if g > 1:
            # bypass the frozen guard once to normalise
            object.__setattr__(self, "num", self.num // g)
            object.__setattr__(self, "den", self.den // g)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"PosRational({self.num}, {self.den})"

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    # arithmetic, all exact on cross-multiplied ints

    def __add__(self, other: PosRational) -> PosRational:
        return PosRational(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    def __mul__(self, other: PosRational) -> PosRational:
        return PosRational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: PosRational) -> PosRational:
        return PosRational(self.num * other.den, self.den * other.num)

    def __sub__(self, other: PosRational) -> PosRational:
        """Strict subtraction: defined only when self > other."""
        if not other < self:
            raise NotGreaterError(f"{self} - {other} leaves the positive rationals")
        return PosRational(self.num * other.den - other.num * self.den,
                           self.den * other.den)

    def reciprocal(self) -> PosRational:
        return PosRational(self.den, self.num)

    # total order by cross multiplication

    def __lt__(self, other: PosRational) -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: PosRational) -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: PosRational) -> bool:
        return other < self

    def __ge__(self, other: PosRational) -> bool:
        return other <= self


ONE = PosRational(1)
TWO = PosRational(2)


def compare(a: PosRational, b: PosRational) -> int:
    """Exact three-way comparison: -1 if a < b, 0 if equal, +1 if a > b."""
    lhs = a.num * b.den
    rhs = b.num * a.den
    return (lhs > rhs) - (lhs < rhs)


def mediant(a: PosRational, b: PosRational) -> PosRational:
    """The mediant of a < b, computed on the stored reduced pairs.

    Adding numerators and denominators of a < b always lands strictly
    between the two, which makes this the cheapest way to manufacture a
    rational inside a known gap.
    """
    if not a < b:
        raise NotLessError(f"mediant needs {a} < {b}")
    return PosRational(a.num + b.num, a.den + b.den)


def archimedean_bound(r: PosRational) -> int:
    """A positive integer strictly greater than r.

    num + 1 works for any reduced num/den with den >= 1; no search and
    no division needed.
    """
    return r.num + 1


def ceil_int(r: PosRational) -> int:
    """Smallest integer >= r."""
    return -(-r.num // r.den)


def halve(r: PosRational) -> PosRational:
    return PosRational(r.num, 2 * r.den)
