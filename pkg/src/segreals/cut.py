"""Initial segments of the positive rationals, queried through brackets.

A positive real is represented by the set of positive rationals lying
strictly below it: a nonempty, proper, downward closed set with no
maximum element.  Sets are never materialised; a cut is an expression
tree whose leaves answer exact membership queries and whose composite
nodes (sum, product, inverse, difference, finite sup) define membership
of the derived set.

Nothing here ever decides equality of two cuts.  The one universally
available observation is ``bracket(a, n)``: a pair of rationals
``lo < hi`` with ``lo`` inside the set, ``hi`` outside it, and
``hi - lo <= 1/n``.  Everything downstream (signs, comparisons, decimal
printing) is phrased in terms of such certified enclosures, so every
answer the library gives is exact about its own uncertainty.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable

from .qpos import (
    ONE,
    PosRational,
    archimedean_bound,
    ceil_int,
    halve,
    mediant,
)

# Cap on the precision denominator reached while hunting for a
# separation inside `difference`.  Exhausting it raises instead of
# looping forever on an unseparable (equal-valued) pair.
DEFAULT_BUDGET = 2 ** 64

_SQRT2 = PosRational(2)


class BadDegreeError(ValueError):
    """Root degree below 2 requested."""


class NotALeafError(TypeError):
    """A leaf-only operation was applied to a composite cut."""


class NotAMemberError(ValueError):
    """next_member_above was asked to climb from outside the set."""


class EmptyFamilyError(ValueError):
    """sup_finite needs at least one cut."""


class PrecisionBudgetExhausted(ArithmeticError):
    """difference could not separate its arguments within the budget.

    Raised, never looped on: two cuts with equal values can never be
    separated, and the caller is the only one who knows how long a wait
    is worth it.
    """


class Comparison(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    OVERLAP = "overlap"


@dataclass(frozen=True, slots=True)
class Bracket:
    """A certified enclosure: lo is in the set, hi is not.

    Since every member is strictly below every non-member, the value of
    the cut lies in (lo, hi].
    """

    lo: PosRational
    hi: PosRational

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"bracket endpoints out of order: {self.lo} >= {self.hi}")

    @property
    def width(self) -> PosRational:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


class Cut:
    """Base class for cut expression nodes.

    Nodes are immutable once built; the only mutable state is a private
    per-node bracket cache keyed by precision.  Cached values are pure
    functions of the node, so concurrent readers at worst recompute the
    same bracket and store identical results (dict updates are atomic).
    Identity, not structure, is node equality: value equality of cuts is
    only ever semidecidable and is deliberately not spelled __eq__.
    """

    __slots__ = ("_cache", "_sep")

    def __init__(self) -> None:
        self._cache: dict = {}
        self._sep = None  # separation precision, used by Difference only

    def __add__(self, other: Cut) -> Cut:
        return add(self, other)

    def __mul__(self, other: Cut) -> Cut:
        return mul(self, other)

    def __repr__(self) -> str:
        return to_sexpr(self)


class RationalCut(Cut):
    """All positive rationals strictly below a given one."""

    __slots__ = ("bound",)

    def __init__(self, bound: PosRational) -> None:
        super().__init__()
        self.bound = bound


class RootCut(Cut):
    """All positive rationals whose k-th power is below the radicand."""

    __slots__ = ("degree", "radicand")

    def __init__(self, degree: int, radicand: PosRational) -> None:
        super().__init__()
        self.degree = degree
        self.radicand = radicand


class OracleCut(Cut):
    """A leaf defined by a caller-supplied exact membership predicate.

    The predicate must describe a genuine initial segment: downward
    closed, no maximum, neither empty nor everything.  The library
    cannot check that; it only spot-checks the two witnesses.
    """

    __slots__ = ("member", "witness_in", "witness_out")

    def __init__(self, member: Callable[[PosRational], bool],
                 witness_in: PosRational, witness_out: PosRational) -> None:
        super().__init__()
        self.member = member
        self.witness_in = witness_in
        self.witness_out = witness_out


class Sum(Cut):
    """Pairwise sums of members of the two operands."""

    __slots__ = ("left", "right")

    def __init__(self, left: Cut, right: Cut) -> None:
        super().__init__()
        self.left = left
        self.right = right


class Product(Cut):
    """Pairwise products of members of the two operands."""

    __slots__ = ("left", "right")

    def __init__(self, left: Cut, right: Cut) -> None:
        super().__init__()
        self.left = left
        self.right = right


class Inverse(Cut):
    """Rationals lying below the reciprocal of some non-member."""

    __slots__ = ("operand",)

    def __init__(self, operand: Cut) -> None:
        super().__init__()
        self.operand = operand


class Difference(Cut):
    """The unique cut that, added to `lower`, gives `upper`.

    Membership: every z expressible as x - y with x a member of upper,
    y a non-member of lower and x > y.  Only meaningful when the value
    of lower is strictly below the value of upper; bracketing detects
    the failure of that premise as budget exhaustion, never silently.
    """

    __slots__ = ("lower", "upper")

    def __init__(self, lower: Cut, upper: Cut) -> None:
        super().__init__()
        self.lower = lower
        self.upper = upper


class SupFinite(Cut):
    """Union of finitely many cuts: the least upper bound of the family."""

    __slots__ = ("members",)

    def __init__(self, members: tuple[Cut, ...]) -> None:
        super().__init__()
        self.members = members


_LEAF_TYPES = (RationalCut, RootCut, OracleCut)


# ---------------------------------------------------------------------------
# constructors


def s_r(r: PosRational) -> RationalCut:
    """The segment of everything strictly below the rational r."""
    return RationalCut(r)


def root_cut(degree: int, radicand: PosRational) -> RootCut:
    """The segment whose value is the degree-th root of the radicand."""
    if degree < 2:
        raise BadDegreeError(f"root degree must be at least 2, got {degree}")
    return RootCut(degree, radicand)


def oracle_cut(member: Callable[[PosRational], bool],
               witness_in: PosRational, witness_out: PosRational) -> OracleCut:
    if not member(witness_in):
        raise ValueError(f"witness_in {witness_in} rejected by the predicate")
    if member(witness_out):
        raise ValueError(f"witness_out {witness_out} accepted by the predicate")
    return OracleCut(member, witness_in, witness_out)


def add(a: Cut, b: Cut) -> Sum:
    return Sum(a, b)


def mul(a: Cut, b: Cut) -> Product:
    return Product(a, b)


def inverse(a: Cut) -> Inverse:
    return Inverse(a)


def difference(a: Cut, b: Cut) -> Difference:
    """The cut c with a + c = b, assuming a's value is below b's."""
    return Difference(a, b)


def sup_finite(members: Iterable[Cut]) -> SupFinite:
    family = tuple(members)
    if not family:
        raise EmptyFamilyError("sup_finite of an empty family")
    return SupFinite(family)


# ---------------------------------------------------------------------------
# leaves: exact membership and climbing


def membership_leaf(a: Cut, x: PosRational) -> bool:
    """Exact membership test, defined on leaves only."""
    if isinstance(a, RationalCut):
        return x < a.bound
    if isinstance(a, RootCut):
        # x^k < r, cross-multiplied so only integers are compared
        return x.num ** a.degree * a.radicand.den < x.den ** a.degree * a.radicand.num
    if isinstance(a, OracleCut):
        return bool(a.member(x))
    raise NotALeafError(f"membership is exact on leaves only, not {type(a).__name__}")


def next_member_above(a: Cut, x: PosRational) -> PosRational:
    """A member strictly above x, witnessing that leaves have no maximum."""
    if not membership_leaf(a, x):  # raises NotALeafError on composites
        raise NotAMemberError(f"{x} is not a member")
    if isinstance(a, RationalCut):
        # everything strictly between x and the bound is a member
        return mediant(x, a.bound)
    if isinstance(a, RootCut) and a.degree == 2 and a.radicand == _SQRT2:
        return _next_member_sqrt2(x)
    # generic leaf: bisect the gap down towards x until we land inside
    hi = a.witness_out if isinstance(a, OracleCut) else _root_witness_out(a)
    while True:
        cand = halve(x + hi)
        if membership_leaf(a, cand):
            return cand
        hi = cand


def _next_member_sqrt2(x: PosRational) -> PosRational:
    """Climbing inside the square-root-of-two segment, in closed form.

    For x = a/b with a >= b, the mediants (n*a + 2)/(n*b + 1) walk down
    from 2/1 towards x; the index bound below guarantees the candidate's
    square is still under 2, so a single exact check suffices.
    """
    if x < ONE:
        return ONE  # 1 is a member and already above x
    a, b = x.num, x.den
    d = 2 * b * b - a * a  # positive exactly because x is a member
    n = max(3, 4 * (a - b) // d + 1)
    while True:
        cand = PosRational(n * a + 2, n * b + 1)
        if cand.num ** 2 < 2 * cand.den ** 2:
            return cand
        n += 1  # unreachable by the index bound; kept as a guard


def _root_witness_in(a: RootCut) -> PosRational:
    # half of min(1, r) always lands inside; halve further just in case
    w = halve(ONE if ONE < a.radicand else a.radicand)
    while not membership_leaf(a, w):
        w = halve(w)
    return w


def _root_witness_out(a: RootCut) -> PosRational:
    # 1 + num(r) overshoots the root for any degree >= 2; double to be sure
    w = PosRational(1 + a.radicand.num)
    while membership_leaf(a, w):
        w = w + w
    return w


def _leaf_witnesses(a: Cut) -> tuple[PosRational, PosRational]:
    if isinstance(a, RationalCut):
        r = a.bound
        # mediant of r with the origin corner: always a member
        return PosRational(r.num, r.den + 1), r
    if isinstance(a, RootCut):
        return _root_witness_in(a), _root_witness_out(a)
    if isinstance(a, OracleCut):
        return a.witness_in, a.witness_out
    raise NotALeafError(f"witnesses exist on leaves only, not {type(a).__name__}")


# ---------------------------------------------------------------------------
# bracketing


def bracket(a: Cut, n: int, budget: int | None = None) -> Bracket:
    """A certified enclosure of width at most 1/n.

    Returns (lo, hi) with lo a member of a, hi a non-member, and
    hi - lo <= 1/n.  Composite cuts recurse structurally; each node
    memoises its answers per precision, so shared subtrees are bracketed
    once.  `budget` caps the precision denominator reached while
    separating the operands of a difference; when it runs out,
    PrecisionBudgetExhausted propagates.
    """
    if n < 1:
        raise ValueError(f"precision denominator must be >= 1, got {n}")
    if budget is None:
        budget = DEFAULT_BUDGET
    cached = a._cache.get(n)
    if cached is not None:
        return cached
    result = _bracket_fresh(a, n, budget)
    a._cache[n] = result
    return result


def _bracket_fresh(a: Cut, n: int, budget: int) -> Bracket:
    if isinstance(a, _LEAF_TYPES):
        lo, hi = _leaf_witnesses(a)
        return _bisect(a, lo, hi, n)

    if isinstance(a, Sum):
        # widths add, so ask each operand for half the tolerance
        ba = bracket(a.left, 2 * n, budget)
        bb = bracket(a.right, 2 * n, budget)
        return Bracket(ba.lo + bb.lo, ba.hi + bb.hi)

    if isinstance(a, Product):
        ba, bb = _refined_factors(a, n, budget)
        return Bracket(ba.lo * bb.lo, ba.hi * bb.hi)

    if isinstance(a, Inverse):
        return _bracket_inverse(a, n, budget)

    if isinstance(a, Difference):
        return _bracket_difference(a, n, budget)

    if isinstance(a, SupFinite):
        parts = [bracket(m, n, budget) for m in a.members]
        lo = max((p.lo for p in parts))
        hi = max((p.hi for p in parts))
        # hi dominates every part's hi, so it is outside every member set;
        # the width is at most the width of the part owning the largest hi
        return Bracket(lo, hi)

    raise TypeError(f"cannot bracket {type(a).__name__}")


def _bisect(a: Cut, lo: PosRational, hi: PosRational, n: int) -> Bracket:
    # exact bisection between a member and a non-member; each step keeps
    # the invariant lo in, hi out, and halves the gap
    tol = PosRational(1, n)
    while tol < hi - lo:
        mid = halve(lo + hi)
        if membership_leaf(a, mid):
            lo = mid
        else:
            hi = mid
    return Bracket(lo, hi)


def _clamp(fine: Bracket, coarse: Bracket) -> Bracket:
    # max of two members is a member, min of two non-members is not,
    # so intersecting certified brackets preserves certification
    lo = fine.lo if coarse.lo < fine.lo else coarse.lo
    hi = fine.hi if fine.hi < coarse.hi else coarse.hi
    return Bracket(lo, hi)


def _refined_factors(a: Product, n: int, budget: int) -> tuple[Bracket, Bracket]:
    # magnitude first: hi_left + hi_right bounds the derivative of x*y on
    # the enclosure, so refining both operands to ceil(n * M) suffices
    ca = bracket(a.left, 1, budget)
    cb = bracket(a.right, 1, budget)
    mag = ca.hi + cb.hi
    m = max(n, ceil_int(PosRational(n) * mag))
    fa = _clamp(bracket(a.left, m, budget), ca)
    fb = _clamp(bracket(a.right, m, budget), cb)
    return fa, fb


def _bracket_inverse(a: Inverse, n: int, budget: int) -> Bracket:
    coarse = bracket(a.operand, 1, budget)
    x0 = coarse.lo
    # 1/x - 1/y = (y - x)/(x*y) <= (y - x)/x0^2 once both endpoints sit
    # above x0, so operand width x0^2/(2n) keeps the reciprocal gap under
    # 1/(2n)
    m = max(1, ceil_int(PosRational(2 * n * x0.den ** 2, x0.num ** 2)))
    fine = _clamp(bracket(a.operand, m, budget), coarse)
    x, y = fine.lo, fine.hi
    hi = x.reciprocal()  # above every member of the inverse set
    # a member: anything strictly below 1/y qualifies since y is outside
    # the operand; shave 1/(y*(k+1)) <= 1/(2n) off the reciprocal
    k = max(1, ceil_int(PosRational(2 * n * y.den, y.num)))
    lo = y.reciprocal() * PosRational(k, k + 1)
    return Bracket(lo, hi)


def _bracket_difference(a: Difference, n: int, budget: int) -> Bracket:
    t = a._sep
    if t is None:
        t = 1
        while True:
            ba = bracket(a.lower, t, budget)
            bb = bracket(a.upper, t, budget)
            if ba.hi < bb.lo:
                a._sep = t
                break
            t *= 2
            if t > budget:
                raise PrecisionBudgetExhausted(
                    f"no separation between the operands down to width 1/{t // 2}; "
                    f"their values may be equal")
    else:
        ba = bracket(a.lower, t, budget)
        bb = bracket(a.upper, t, budget)
    m = max(2 * n, t)
    fa = _clamp(bracket(a.lower, m, budget), ba)
    fb = _clamp(bracket(a.upper, m, budget), bb)
    # fb.lo - fa.hi is a genuine member: upper-member minus lower-non-member,
    # positive thanks to the separation; fb.hi - fa.lo dominates every member
    return Bracket(fb.lo - fa.hi, fb.hi - fa.lo)


def bracket_stepwise(a: Cut, n: int) -> Bracket:
    """Leaf bracketing by linear stepping instead of bisection.

    Splits the gap between the witnesses into more than n * gap equal
    steps and walks up until the first step outside the set.  Costs a
    number of membership tests linear in n, so it is only a cross-check
    for the bisecting `bracket`, not a replacement.
    """
    if n < 1:
        raise ValueError(f"precision denominator must be >= 1, got {n}")
    x0, y0 = _leaf_witnesses(a)
    gap = y0 - x0
    k = archimedean_bound(PosRational(n) * gap)
    step = gap / PosRational(k)
    prev = x0
    for _ in range(k):
        cand = prev + step
        if not membership_leaf(a, cand):
            return Bracket(prev, cand)
        prev = cand
    # the final step reaches y0, a non-member, so we cannot get here
    raise AssertionError("stepping ran past the outside witness")


def ratio_refine(a: Cut, m: int, budget: int | None = None) -> Bracket:
    """A bracket whose endpoints agree to a relative factor (m-1)/m.

    Any member x1 bounds the value from below, so width 1/h with
    h > m/x1 forces lo/hi > 1 - 1/(h*hi) > 1 - 1/m.  Useful when the
    magnitude of the value is unknown but relative accuracy is wanted.
    """
    if m < 2:
        raise ValueError(f"relative refinement needs m >= 2, got {m}")
    x1 = bracket(a, 1, budget).lo
    h = archimedean_bound(PosRational(m * x1.den, x1.num))
    return bracket(a, h, budget)


def compare(a: Cut, b: Cut, n: int, budget: int | None = None) -> Comparison:
    """Order certificate at precision 1/n, honest about ties.

    LESS and GREATER are certificates: a non-member of one side sits at
    or below a member of the other, which forces strict containment of
    the segments.  OVERLAP is not a judgement of equality, only that
    brackets of width 1/n could not tell the values apart (they then
    differ by at most 2/n).
    """
    ba = bracket(a, n, budget)
    bb = bracket(b, n, budget)
    if ba.hi <= bb.lo:
        return Comparison.LESS
    if bb.hi <= ba.lo:
        return Comparison.GREATER
    return Comparison.OVERLAP


# ---------------------------------------------------------------------------
# debugging aid


def to_sexpr(a: Cut) -> str:
    """A compact s-expression rendering of the cut's structure."""
    if isinstance(a, RationalCut):
        return f"(s_r {a.bound})"
    if isinstance(a, RootCut):
        return f"(root {a.degree} {a.radicand})"
    if isinstance(a, OracleCut):
        return f"(oracle {a.witness_in} {a.witness_out})"
    if isinstance(a, Sum):
        return f"(sum {to_sexpr(a.left)} {to_sexpr(a.right)})"
    if isinstance(a, Product):
        return f"(product {to_sexpr(a.left)} {to_sexpr(a.right)})"
    if isinstance(a, Inverse):
        return f"(inverse {to_sexpr(a.operand)})"
    if isinstance(a, Difference):
        return f"(difference {to_sexpr(a.lower)} {to_sexpr(a.upper)})"
    if isinstance(a, SupFinite):
        parts = " ".join(to_sexpr(m) for m in a.members)
        return f"(sup {parts})"
    raise TypeError(f"cannot serialise {type(a).__name__}")
