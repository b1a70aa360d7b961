"""Expression language and command line front end.

The language is deliberately tiny: field arithmetic over rational
literals plus k-th roots of positive rational literals.

    expr     := term (("+" | "-") term)*
    term     := factor (("*" | "/") factor)*
    factor   := "-" factor | primary
    primary  := rational
              | "sqrt" "(" radicand ")"
              | "root" "(" nat "," radicand ")"
              | "(" expr ")"
    rational := nat ("/" nat)?      # "/ nat" absorbed only for nat > 0
    radicand := "-"? rational       # sign rejected with DomainError
    nat      := [0-9]+

Whitespace never matters.  "1/2" and "1 / 2" are both the literal
one-half; a zero denominator is the one case where "/" falls through to
division, so "1/0" is division by the literal zero and fails at
evaluation time (no nonzero certificate), not at parse time.

Exit codes: 0 for any certified answer including "overlap", 2 for
syntax and domain errors, 3 when certification failed (zero divisor or
exhausted precision budget).  Answers go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import approx, cut, real
from .embed import SignedRational, f_embed, g_embed
from .real import Real, ZeroAtPrecision

CONFIG_FILE = "reals.toml"
ENV_BUDGET = "REALS_BUDGET"
DEFAULT_DIGITS = 10
DEFAULT_COMPARE_PRECISION = 10 ** 6


class ParseError(ValueError):
    """Input rejected by the grammar; `offset` is the byte it happened at."""

    def __init__(self, message: str, offset: int) -> None:
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")


class DomainError(ValueError):
    """Syntactically fine but mathematically out of range (roots only)."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class ZeroDivisorAtPrecision(ArithmeticError):
    """A divisor could not be certified nonzero at the working precision."""

    def __init__(self, precision: int) -> None:
        self.precision = precision
        super().__init__(
            f"divisor not separable from zero at width 1/{precision}; "
            f"it may be exactly zero")


# ---------------------------------------------------------------------------
# syntax trees


@dataclass(frozen=True)
class Literal:
    value: SignedRational


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class Root:
    degree: int
    radicand: Literal


Expr = Literal | Add | Sub | Mul | Div | Neg | Root


# ---------------------------------------------------------------------------
# parsing


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", one of "+-*/(),", or "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/(),":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.offset)
        return self.take()

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.offset)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take().kind
            rhs = self.factor()
            e = Mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def factor(self) -> Expr:
        if self.peek().kind == "-":
            self.take()
            return Neg(self.factor())
        return self.primary()

    def primary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "int":
            return Literal(self.rational())
        if tok.kind == "name":
            return self.root_form()
        if tok.kind == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"expected a value, found {tok.text or 'end of input'!r}",
                         tok.offset)

    def rational(self) -> SignedRational:
        whole = self.expect("int")
        num = int(whole.text)
        # absorb "/ nat" into the literal unless the denominator is the
        # literal 0, which stays behind as a division
        if self.peek().kind == "/" and self.peek(1).kind == "int" \
                and int(self.peek(1).text) > 0:
            self.take()
            den = int(self.take().text)
            return SignedRational.from_fraction(Fraction(num, den))
        return SignedRational.from_int(num)

    def radicand(self) -> Literal:
        tok = self.peek()
        negative = False
        if tok.kind == "-":
            self.take()
            negative = True
        start = self.peek()
        if start.kind != "int":
            raise ParseError(
                f"expected a rational literal, found {start.text or 'end of input'!r}",
                start.offset)
        num = int(self.take().text)
        den = 1
        if self.peek().kind == "/":
            self.take()
            den = int(self.expect("int").text)
        if negative or num == 0 or den == 0:
            raise DomainError("root radicand must be a positive rational literal",
                              tok.offset)
        return Literal(SignedRational.from_fraction(Fraction(num, den)))

    def root_form(self) -> Expr:
        name = self.take()
        if name.text == "sqrt":
            self.expect("(")
            rad = self.radicand()
            self.expect(")")
            return Root(2, rad)
        if name.text == "root":
            self.expect("(")
            deg_tok = self.expect("int")
            degree = int(deg_tok.text)
            self.expect(",")
            rad = self.radicand()
            self.expect(")")
            if degree < 2:
                raise DomainError(f"root degree must be at least 2, got {degree}",
                                  deg_tok.offset)
            return Root(degree, rad)
        raise ParseError(f"unknown function {name.text!r}", name.offset)


def parse(text: str) -> Expr:
    """Parse an expression; ParseError and DomainError carry byte offsets."""
    return _Parser(text).parse()


def unparse(e: Expr) -> str:
    """Render a tree back to source that reparses to an identical tree.

    Operands are always parenthesised: the literal-absorption rule would
    otherwise fuse a rendered "1 / 2" back into the literal one-half.
    """
    if isinstance(e, Literal):
        v = e.value
        if v.sign == 0:
            return "0"
        body = str(v.mag.num) if v.mag.den == 1 else f"{v.mag.num}/{v.mag.den}"
        return body if v.sign > 0 else f"-{body}"
    if isinstance(e, Neg):
        return f"-({unparse(e.operand)})"
    if isinstance(e, Root):
        return f"root({e.degree}, {unparse(e.radicand)})"
    ops = {Add: "+", Sub: "-", Mul: "*", Div: "/"}
    op = ops[type(e)]
    return f"({unparse(e.left)}) {op} ({unparse(e.right)})"


# ---------------------------------------------------------------------------
# evaluation


def evaluate(e: Expr, n: int, budget: int | None = None) -> Real:
    """Evaluate a tree to a signed real, certifying divisors nonzero at 1/n."""
    if isinstance(e, Literal):
        return g_embed(e.value)
    if isinstance(e, Add):
        return real.add(evaluate(e.left, n, budget), evaluate(e.right, n, budget))
    if isinstance(e, Sub):
        return real.sub(evaluate(e.left, n, budget), evaluate(e.right, n, budget))
    if isinstance(e, Mul):
        return real.mul(evaluate(e.left, n, budget), evaluate(e.right, n, budget))
    if isinstance(e, Div):
        numer = evaluate(e.left, n, budget)
        denom = evaluate(e.right, n, budget)
        try:
            return real.mul(numer, real.inv(denom, n, budget))
        except ZeroAtPrecision as exc:
            raise ZeroDivisorAtPrecision(n) from exc
    if isinstance(e, Neg):
        return real.neg(evaluate(e.operand, n, budget))
    if isinstance(e, Root):
        v = e.radicand.value
        if v.sign <= 0:
            raise DomainError("root radicand must be a positive rational literal")
        if e.degree < 2:
            raise DomainError(f"root degree must be at least 2, got {e.degree}")
        return f_embed(cut.root_cut(e.degree, v.mag))
    raise TypeError(f"cannot evaluate {type(e).__name__}")


# ---------------------------------------------------------------------------
# command line


def _parse_width(text: str) -> int:
    """A width argument "1/N" (any p/q accepted) into a denominator n."""
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 0
    except ValueError:
        p, q = 0, 0
    if not sep or p < 1 or q < 1:
        raise argparse.ArgumentTypeError(
            f"expected a width like 1/1000000, got {text!r}")
    return -(-q // p)  # ceil(q / p): any interval of width p/q is fine at 1/n


def _load_config() -> dict:
    """Read key = value pairs from reals.toml in the working directory."""
    settings = {}
    path = Path(CONFIG_FILE)
    if not path.is_file():
        return settings
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line or "=" not in line:
            continue
        key, _, value = line.partition("=")
        key = key.strip()
        if key in ("digits", "budget"):
            try:
                settings[key] = int(value.strip())
            except ValueError:
                pass  # malformed entries are ignored, not fatal
    return settings


def _resolve_budget(flag: int | None, config: dict) -> int | None:
    if flag is not None:
        return flag
    env = os.environ.get(ENV_BUDGET)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return config.get("budget")


def _build_argparser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reals",
        description="Exact real arithmetic with certified output.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate an expression")
    ev.add_argument("expression")
    how = ev.add_mutually_exclusive_group()
    how.add_argument("--digits", type=int, metavar="D",
                     help=f"certified decimal digits (default {DEFAULT_DIGITS})")
    how.add_argument("--interval", type=_parse_width, metavar="1/N",
                     help="print an exact rational interval of width at most 1/N")
    ev.add_argument("--budget", type=int, metavar="B",
                    help="cap on the precision denominator while separating cuts")

    cp = sub.add_parser("compare", help="order two expressions")
    cp.add_argument("expression")
    cp.add_argument("other")
    cp.add_argument("--precision", type=_parse_width, metavar="1/N",
                    help="certification width (default 1/1000000)")
    cp.add_argument("--budget", type=int, metavar="B",
                    help="cap on the precision denominator while separating cuts")
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    try:
        args = _build_argparser().parse_args(argv)
    except SystemExit as exit_:  # argparse already printed the diagnostic
        return int(exit_.code or 0)
    config = _load_config()
    budget = _resolve_budget(args.budget, config)

    try:
        if args.command == "eval":
            expr = parse(args.expression)
            if args.interval is not None:
                n = args.interval
                value = evaluate(expr, n, budget)
                print(approx.rational_interval(value, n, budget))
            else:
                digits = args.digits if args.digits is not None \
                    else config.get("digits", DEFAULT_DIGITS)
                value = evaluate(expr, 10 ** (digits + 2), budget)
                print(approx.decimal(value, digits, budget))
        else:
            n = args.precision if args.precision is not None \
                else DEFAULT_COMPARE_PRECISION
            left = evaluate(parse(args.expression), n, budget)
            right = evaluate(parse(args.other), n, budget)
            print(real.less_than(left, right, n, budget).value)
        return 0
    except (ParseError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ZeroDivisorAtPrecision, ZeroAtPrecision,
            cut.PrecisionBudgetExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))
