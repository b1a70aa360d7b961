"""Shared test helpers: independent oracles and random generators.

Expected values are never copied out of the implementation.  Rational
arithmetic is checked against fractions.Fraction, roots against integer
square/k-th root bisection, and decimal strings against a rounding rule
recomputed here from exact values.
"""

from __future__ import annotations

import contextlib
import io
import math
import random
from fractions import Fraction

from segreals import Bracket, Cut, PosRational, cli_main, oracle_cut, root_cut, s_r
from segreals.approx import SignedInterval
from segreals.cut import OracleCut, RationalCut, RootCut


def q(num: int, den: int = 1) -> PosRational:
    return PosRational(num, den)


def fr(x) -> Fraction:
    """Exact value of a PosRational or SignedRational as a Fraction."""
    return x.as_fraction()


def brackets_overlap(a: Bracket, b: Bracket) -> bool:
    return not (a.hi < b.lo or b.hi < a.lo)


def straddles(b: Bracket, value: Fraction) -> bool:
    """lo < value <= hi, the enclosure a bracket promises for its value."""
    return fr(b.lo) < value <= fr(b.hi)


def interval_contains(iv: SignedInterval, value: Fraction) -> bool:
    return fr(iv.lo) <= value <= fr(iv.hi)


def leaf_member_oracle(leaf: Cut, x: PosRational) -> bool:
    """Membership recomputed independently with Fraction arithmetic."""
    if isinstance(leaf, RationalCut):
        return fr(x) < fr(leaf.bound)
    if isinstance(leaf, RootCut):
        return fr(x) ** leaf.degree < fr(leaf.radicand)
    if isinstance(leaf, OracleCut):
        return bool(leaf.member(x))
    raise TypeError(f"not a leaf: {type(leaf).__name__}")


def sqrt_bounds(value: Fraction, scale: int) -> tuple[Fraction, Fraction]:
    """Oracle enclosure of sqrt(value) of width 1/scale, by integer isqrt."""
    m = math.isqrt(value.numerator * scale ** 2 // value.denominator)
    # m/scale <= sqrt(value) < (m+1)/scale, checked exactly
    assert Fraction(m, scale) ** 2 <= value < Fraction(m + 1, scale) ** 2
    return Fraction(m, scale), Fraction(m + 1, scale)


def oracle_half_up(value: Fraction, digits: int) -> int:
    """floor(value * 10^digits + 1/2), computed straight from the Fraction."""
    scaled = value * 10 ** digits
    return math.floor(scaled + Fraction(1, 2))


def oracle_decimal(value: Fraction, digits: int) -> str:
    """The decimal string a certified renderer must print for `value`.

    Only valid when `value` keeps clear of rounding ties: anything
    within a guard width of a half-grid point could legitimately render
    as an interval instead, so such values are rejected here.
    """
    scaled = value * 10 ** digits
    tie_distance = abs(scaled + Fraction(1, 2) - round(scaled + Fraction(1, 2)))
    assert tie_distance > Fraction(1, 100), \
        f"{value} is too close to a rounding tie at {digits} digits"
    return format_scaled(oracle_half_up(value, digits), digits)


def format_scaled(units: int, digits: int) -> str:
    sign = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Run the CLI in process, capturing (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_main(argv)
    return code, out.getvalue(), err.getvalue()


# ---------------------------------------------------------------------------
# seeded random generators (acceptance tests need fixed counts, so these
# use random.Random rather than hypothesis)


def random_posrational(rng: random.Random, lo: int = 1, hi: int = 40) -> PosRational:
    return PosRational(rng.randint(lo, hi), rng.randint(lo, hi))


def random_leaf(rng: random.Random) -> Cut:
    """A random leaf cut: rational, root, or oracle-backed rational."""
    kind = rng.randrange(4)
    if kind <= 1:
        return s_r(random_posrational(rng))
    if kind == 2:
        return root_cut(rng.randint(2, 4), random_posrational(rng))
    bound = random_posrational(rng)
    return oracle_cut(lambda x, b=bound: x < b,
                      PosRational(bound.num, bound.den + 1), bound)


def random_rational_leaf(rng: random.Random) -> tuple[Cut, Fraction]:
    bound = random_posrational(rng)
    return s_r(bound), fr(bound)
