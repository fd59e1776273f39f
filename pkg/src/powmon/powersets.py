"""Finite identity-containing subsets of Z^2 under setwise addition, the
unique normalizing shift (two independent algorithms), and the shift-induced
transport map between valuation cones."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .cones import Cone
from .lattice import ORIGIN, GroupElement, ParseError, parse_element


class ShiftError(RuntimeError):
    """A normalizing-shift computation violated the unique-shift guarantee.

    Any of the concrete subclasses signals an implementation bug in cone
    membership, never a property of the input; they must not be swallowed.
    """


class NoShiftFound(ShiftError):
    pass


class MultipleShiftsFound(ShiftError):
    pass


class PostconditionFailed(ShiftError):
    pass


class NotInSourceMonoid(ValueError):
    def __init__(self, g: GroupElement, m: Cone) -> None:
        super().__init__(f"{g} is not a member of the source monoid {m}")
        self.g = g
        self.m = m


class FinSubset:
    """A finite subset of Z^2 containing (0,0), kept sorted and duplicate-free.

    Accepts any iterable of points ((x, y) tuples are coerced); equality is
    structural on the normal form.
    """

    __slots__ = ("elems",)

    def __init__(self, points: Iterable[tuple[int, int]]):
        pts = {GroupElement(int(x), int(y)) for x, y in points}
        if ORIGIN not in pts:
            raise ValueError("a FinSubset must contain (0,0)")
        self.elems: tuple[GroupElement, ...] = tuple(sorted(pts))

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, g: object) -> bool:
        return g in self.elems

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FinSubset):
            return self.elems == other.elems
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.elems)

    def __mul__(self, other: "FinSubset") -> "FinSubset":
        if isinstance(other, FinSubset):
            return setwise_product(self, other)
        return NotImplemented

    def __str__(self) -> str:
        return format_subset(self)

    def __repr__(self) -> str:
        return f"FinSubset({format_subset(self)!r})"

    def to_json(self) -> list[list[int]]:
        return [[g.x, g.y] for g in self.elems]


IDENTITY = FinSubset([ORIGIN])


def setwise_product(X: FinSubset, Y: FinSubset) -> FinSubset:
    """{x + y : x in X, y in Y} in normal form."""
    return FinSubset(x + y for x in X for y in Y)


def translate(a: GroupElement, points: Iterable[tuple[int, int]]) -> tuple[GroupElement, ...]:
    """{a + p : p in points} in canonical order; a raw tuple, not a FinSubset."""
    ax, ay = a
    return tuple(sorted(GroupElement(ax + x, ay + y) for x, y in points))


@dataclass(frozen=True)
class ShiftResult:
    shift: GroupElement
    normalized: FinSubset


def candidate_shifts(m: Cone, X: FinSubset) -> list[GroupElement]:
    """All shifts a with a + X inside m; since (0,0) must land in a + X, the
    candidates are exactly the negations of X's elements.  For a valuation
    cone exactly one candidate succeeds."""
    hits = []
    for x in X:
        a = -x
        if all(m.contains(a + e) for e in X):
            hits.append(a)
    return hits


def normalize_shift_bruteforce(m: Cone, X: FinSubset) -> ShiftResult:
    """Reference algorithm: test every candidate shift and insist on a unique hit."""
    hits = candidate_shifts(m, X)
    if not hits:
        raise NoShiftFound(f"no shift takes X={X} into {m}")
    if len(hits) > 1:
        raise MultipleShiftsFound(f"shifts {hits} all take X={X} into {m}")
    shift = hits[0]
    return ShiftResult(shift, FinSubset(translate(shift, X)))


def normalize_shift_inductive(m: Cone, X: FinSubset) -> ShiftResult:
    """Induction on |X|: peel off the canonically largest non-identity element,
    normalize the rest, keep the inherited shift if it also covers the peeled
    element, and otherwise restart from that element's negation.  The recursion
    is unrolled into an ascending sweep."""
    shift = ORIGIN
    for x in sorted(e for e in X if e != ORIGIN):
        if not m.contains(shift + x):
            shift = -x
    moved = translate(shift, X)
    if not all(m.contains(e) for e in moved):
        raise PostconditionFailed(f"shift {shift} does not take X={X} into {m}")
    return ShiftResult(shift, FinSubset(moved))


def transport_shift(src: Cone, dst: Cone, X: FinSubset) -> ShiftResult:
    """Normalizing shift of X into dst, after checking X lies inside src."""
    for e in X:
        if not src.contains(e):
            raise NotInSourceMonoid(e, src)
    return normalize_shift_inductive(dst, X)


def transport(src: Cone, dst: Cone, X: FinSubset) -> FinSubset:
    """The image of X under the shift-normalization isomorphism into the
    power monoid over dst."""
    return transport_shift(src, dst, X).normalized


def parse_subset(text: str) -> FinSubset:
    """Parse `{(0,0),(1,2),(-3,1)}`; whitespace-insensitive."""
    compact = "".join(text.split())
    if not (compact.startswith("{") and compact.endswith("}")):
        raise ParseError(f"invalid set literal {text!r}; expected {{(x,y),...}}")
    body = compact[1:-1]
    parts = re.findall(r"\([^()]*\)", body)
    if ",".join(parts) != body:
        raise ParseError(f"invalid set literal {text!r}; expected {{(x,y),...}}")
    try:
        return FinSubset(parse_element(p) for p in parts)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_subset(X: FinSubset) -> str:
    """Canonical text form; round-trips through parse_subset."""
    return "{" + ",".join(str(g) for g in X) + "}"
