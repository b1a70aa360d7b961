"""Certified rational intervals and decimal rendering for signed reals.

The interval returned for a real provably contains its value: the lower
end subtracts an over-estimate of the negative component from an
under-estimate of the positive one, and symmetrically for the upper
end.  Decimal output is derived from such an interval two guard digits
finer than requested, so a plain digit string is only ever printed when
both ends of the enclosure round to it; anything less certain is shown
as an explicit interval.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cut
from .embed import SignedRational
from .real import Real


@dataclass(frozen=True, slots=True)
class SignedInterval:
    """A closed interval with exact signed rational endpoints."""

    lo: SignedRational
    hi: SignedRational

    def __post_init__(self) -> None:
        if self.hi < self.lo:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def width(self) -> SignedRational:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"

    def __contains__(self, value: SignedRational) -> bool:
        return not (value < self.lo or self.hi < value)


def rational_interval(x: Real, n: int, budget: int | None = None) -> SignedInterval:
    """An interval of width at most 1/n certified to contain the value.

    Each component is bracketed at 2n, so the two half-widths add up to
    the requested tolerance.
    """
    if n < 1:
        raise ValueError(f"precision denominator must be >= 1, got {n}")
    bp = cut.bracket(x.pos, 2 * n, budget)
    bm = cut.bracket(x.neg, 2 * n, budget)
    lo = _signed(bp.lo) - _signed(bm.hi)
    hi = _signed(bp.hi) - _signed(bm.lo)
    return SignedInterval(lo, hi)


def decimal(x: Real, digits: int, budget: int | None = None) -> str:
    """Decimal rendering with `digits` fractional digits, never a lie.

    Works from an interval 10^-(digits+2) wide.  When both endpoints
    round to the same fixed-point string, that string is the correctly
    rounded value and is returned bare.  When they disagree, or when the
    interval straddles zero (so not even the sign is certified), the
    result is the interval itself, endpoints rounded outward.
    """
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    iv = rational_interval(x, 10 ** (digits + 2), budget)
    if not (iv.lo.sign < 0 < iv.hi.sign):
        a = _round_half_up(iv.lo, digits)
        b = _round_half_up(iv.hi, digits)
        if a == b:
            return _format_scaled(a, digits)
    return (f"[{_format_scaled(_round_floor(iv.lo, digits), digits)}, "
            f"{_format_scaled(_round_ceil(iv.hi, digits), digits)}]")


def _signed(r) -> SignedRational:
    return SignedRational.from_pos(r)


def _as_scaled_pair(v: SignedRational, digits: int) -> tuple[int, int]:
    # v * 10^digits as an exact integer pair (numerator, denominator > 0)
    if v.sign == 0:
        return 0, 1
    return v.sign * v.mag.num * 10 ** digits, v.mag.den


def _round_half_up(v: SignedRational, digits: int) -> int:
    # floor(v * 10^d + 1/2); monotone, so agreement of both interval ends
    # pins the rounding of everything between them
    t, q = _as_scaled_pair(v, digits)
    return (2 * t + q) // (2 * q)


def _round_floor(v: SignedRational, digits: int) -> int:
    t, q = _as_scaled_pair(v, digits)
    return t // q


def _round_ceil(v: SignedRational, digits: int) -> int:
    t, q = _as_scaled_pair(v, digits)
    return -((-t) // q)


def _format_scaled(units: int, digits: int) -> str:
    # `units` counts 10^-digits steps; render as fixed-point decimal
    sign = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
