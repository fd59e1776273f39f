"""Exact arithmetic on the rank-2 lattice and on quadratic-irrational slopes.

Every comparison made anywhere in this package bottoms out in the integer
sign computations defined here; no floating point enters any decision.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Union

Rational = Union[int, Fraction]


class ParseError(ValueError):
    """A text literal failed to parse or violates a type invariant."""


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


class GroupElement(NamedTuple):
    """A point of (Z^2, +); tuple order (x, then y) is the canonical order."""

    x: int
    y: int

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "GroupElement":
        return GroupElement(-self.x, -self.y)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


ORIGIN = GroupElement(0, 0)


def sign_quad(p: Rational, q: Rational, n: int) -> int:
    """Exact sign of p + q*sqrt(n) for rational p, q and non-square n >= 1.

    Same-sign p, q are immediate; mixed signs reduce to comparing p^2 with
    q^2 * n in rational arithmetic.  Because n is not a perfect square that
    comparison can only tie when p = q = 0, so the result is always decided.
    """
    if n < 1 or is_perfect_square(n):
        raise ValueError(f"n must be a non-square positive integer, got {n}")
    sp = _sign(p)
    sq = _sign(q)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    mag = _sign(p * p - q * q * n)
    return mag if sp > 0 else -mag


@dataclass(frozen=True)
class QuadraticIrrational:
    """A positive quadratic irrational a + b*sqrt(n).

    a and b are rationals stored reduced, b != 0, and n is a non-square
    positive integer; together these force the value to be irrational.
    """

    a: Fraction
    b: Fraction
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.n < 1 or is_perfect_square(self.n):
            raise ValueError(f"n must be a non-square positive integer, got {self.n}")
        if self.b == 0:
            raise ValueError("b must be nonzero so the value is irrational")
        if sign_quad(self.a, self.b, self.n) <= 0:
            raise ValueError(f"{self.a}+{self.b}*sqrt({self.n}) is not positive")

    @cached_property
    def _scaled(self) -> tuple[int, int, int]:
        # alpha = (A + B*sqrt(n)) / D with integer A, B and integer D > 0
        d = math.lcm(self.a.denominator, self.b.denominator)
        return int(self.a * d), int(self.b * d), d

    def __str__(self) -> str:
        return format_alpha(self)


def cmp_slope(alpha: QuadraticIrrational, x: int, y: int) -> int:
    """Exact sign of alpha*x - y; zero only at (x, y) = (0, 0)."""
    a_num, b_num, den = alpha._scaled
    return sign_quad(a_num * x - den * y, b_num * x, alpha.n)


def floor_mul(alpha: QuadraticIrrational, x: int) -> int:
    """Exact floor(alpha * x).

    With alpha = (A + B*sqrt(n))/D the answer is (A*x + floor(B*x*sqrt(n))) // D;
    the inner floor is +-isqrt((B*x)^2 * n), corrected by -1 on the negative
    side, and it never ties because (B*x)^2 * n is not a perfect square unless
    B*x = 0.
    """
    a_num, b_num, den = alpha._scaled
    t = b_num * x
    if t >= 0:
        inner = math.isqrt(t * t * alpha.n)
    else:
        inner = -math.isqrt(t * t * alpha.n) - 1
    return (a_num * x + inner) // den


_ELEMENT_RE = re.compile(r"\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\Z")

_RAT = r"[+-]?\d+(?:/\d+)?"
_ALPHA_RE = re.compile(
    rf"(?:(?P<a>{_RAT})\s*(?P<sep>[+-])\s*)?(?:(?P<b>{_RAT})\s*\*\s*)?"
    r"sqrt\(\s*(?P<n>\d+)\s*\)\Z"
)


def parse_element(text: str) -> GroupElement:
    """Parse `(x,y)` with optional signs into a GroupElement."""
    m = _ELEMENT_RE.match(text.strip())
    if m is None:
        raise ParseError(f"invalid element literal {text!r}; expected (x,y)")
    return GroupElement(int(m.group(1)), int(m.group(2)))


def format_element(g: GroupElement) -> str:
    return f"({g.x},{g.y})"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {text!r}") from exc


def parse_alpha(text: str) -> QuadraticIrrational:
    """Parse `sqrt(n)`, `b*sqrt(n)` or `a+b*sqrt(n)` (rationals written p/q).

    Rejects perfect-square n, b = 0, and nonpositive values.
    """
    m = _ALPHA_RE.match(text.strip())
    if m is None:
        raise ParseError(f"invalid slope literal {text!r}; expected a+b*sqrt(n)")
    a = _parse_rational(m["a"]) if m["a"] else Fraction(0)
    b = _parse_rational(m["b"]) if m["b"] else Fraction(1)
    if m["sep"] == "-":
        b = -b
    try:
        return QuadraticIrrational(a, b, int(m["n"]))
    except ValueError as exc:
        raise ParseError(f"invalid slope literal {text!r}: {exc}") from exc


def format_alpha(alpha: QuadraticIrrational) -> str:
    """Canonical text form; round-trips through parse_alpha."""
    mag = abs(alpha.b)
    tail = f"sqrt({alpha.n})" if mag == 1 else f"{mag}*sqrt({alpha.n})"
    if alpha.a == 0:
        return tail  # positivity forces b > 0 here
    sep = "-" if alpha.b < 0 else "+"
    return f"{alpha.a}{sep}{tail}"
