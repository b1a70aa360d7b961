"""Signed reals as formal differences of two positive cuts.

A real is a pair (pos, neg) standing for the value of pos minus the
value of neg.  Two pairs denote the same number exactly when cross sums
agree, but that equality is never decided here; all observations go
through brackets of the two components and carry their precision with
them.  Addition is componentwise, negation swaps the components, and
multiplication expands the formal product of differences:

    (a - b) * (c - d)  =  (ac + bd) - (ad + bc)

so no operation ever needs to know the sign of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cut
from .qpos import ONE, PosRational
from .cut import Comparison, Cut


class ZeroAtPrecision(ArithmeticError):
    """An inverse was requested of a value not certified away from zero.

    Carries the precision at which certification was attempted; a finer
    precision may still succeed, unless the value really is zero.
    """

    def __init__(self, precision: int, message: str | None = None) -> None:
        self.precision = precision
        super().__init__(message or
                         f"not separable from zero at width 1/{precision}")


@dataclass(frozen=True)
class Positive:
    pass


@dataclass(frozen=True)
class Negative:
    pass


@dataclass(frozen=True)
class IndistinguishableFromZero:
    """Brackets at the given precision straddle zero; no sign certified."""

    precision: int


SignVerdict = Positive | Negative | IndistinguishableFromZero


@dataclass(frozen=True)
class PositiveForm:
    """Certified positive: value equals the magnitude cut's value."""

    magnitude: Cut


@dataclass(frozen=True)
class NegativeForm:
    """Certified negative: value equals minus the magnitude cut's value."""

    magnitude: Cut


@dataclass(frozen=True)
class ZeroForm:
    """Exactly zero, known syntactically (both components are one node)."""


@dataclass(frozen=True)
class Indeterminate:
    """No sign certificate at the given precision; not a zero claim."""

    precision: int


CanonicalForm = PositiveForm | NegativeForm | ZeroForm | Indeterminate


@dataclass(frozen=True, eq=False)
class Real:
    """A formal difference of two cuts.  Identity-based equality only."""

    pos: Cut
    neg: Cut

    def __add__(self, other: Real) -> Real:
        return add(self, other)

    def __sub__(self, other: Real) -> Real:
        return sub(self, other)

    def __mul__(self, other: Real) -> Real:
        return mul(self, other)

    def __neg__(self) -> Real:
        return neg(self)


def from_pair(pos: Cut, neg: Cut) -> Real:
    return Real(pos, neg)


def zero() -> Real:
    """The pair (S_1, S_1); sharing the node makes the zero syntactic."""
    s1 = cut.s_r(ONE)
    return Real(s1, s1)


def unity() -> Real:
    s1 = cut.s_r(ONE)
    return Real(cut.add(s1, s1), s1)


def add(x: Real, y: Real) -> Real:
    return Real(cut.add(x.pos, y.pos), cut.add(x.neg, y.neg))


def neg(x: Real) -> Real:
    return Real(x.neg, x.pos)


def sub(x: Real, y: Real) -> Real:
    return add(x, neg(y))


def mul(x: Real, y: Real) -> Real:
    return Real(cut.add(cut.mul(x.pos, y.pos), cut.mul(x.neg, y.neg)),
                cut.add(cut.mul(x.pos, y.neg), cut.mul(x.neg, y.pos)))


def sign(x: Real, n: int, budget: int | None = None) -> SignVerdict:
    """Sign certificate at precision 1/n.

    Zero is never certified: a verdict of IndistinguishableFromZero
    says only that |value| <= 2/n, which is all brackets can see.
    """
    verdict = cut.compare(x.pos, x.neg, n, budget)
    if verdict is Comparison.GREATER:
        return Positive()
    if verdict is Comparison.LESS:
        return Negative()
    return IndistinguishableFromZero(n)


def less_than(x: Real, y: Real, n: int, budget: int | None = None) -> Comparison:
    """Order certificate: x < y iff pos_x + neg_y sits below neg_x + pos_y."""
    return cut.compare(cut.add(x.pos, y.neg), cut.add(x.neg, y.pos), n, budget)


def canonicalize(x: Real, n: int, budget: int | None = None) -> CanonicalForm:
    """Resolve the pair into a signed magnitude, when a sign is certifiable.

    A certified sign turns the pair into one positive cut: the component
    gap, recovered by cut.difference.  ZeroForm appears only when the
    two components are literally the same node, the one situation where
    zero is decidable; every other unresolved case stays Indeterminate,
    which is a statement about the precision, not about the value.
    """
    if x.pos is x.neg:
        return ZeroForm()
    verdict = sign(x, n, budget)
    if isinstance(verdict, Positive):
        return PositiveForm(cut.difference(x.neg, x.pos))
    if isinstance(verdict, Negative):
        return NegativeForm(cut.difference(x.pos, x.neg))
    return Indeterminate(n)


def inv(x: Real, n: int, budget: int | None = None) -> Real:
    """Multiplicative inverse, guarded by a nonzero certificate at 1/n.

    The canonical form [(S_1 + C, S_1)] of a certified positive inverts
    to [(S_1 + C^, S_1)] with C^ the reciprocal cut of the magnitude;
    the negative case mirrors the components.
    """
    form = canonicalize(x, n, budget)
    if isinstance(form, PositiveForm):
        s1 = cut.s_r(ONE)
        return Real(cut.add(s1, cut.inverse(form.magnitude)), s1)
    if isinstance(form, NegativeForm):
        s1 = cut.s_r(ONE)
        return Real(s1, cut.add(s1, cut.inverse(form.magnitude)))
    if isinstance(form, ZeroForm):
        raise ZeroAtPrecision(n, "the value is exactly zero and has no inverse")
    raise ZeroAtPrecision(n)
