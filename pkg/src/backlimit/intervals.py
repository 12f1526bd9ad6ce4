"""Exact intervals and finite interval unions over the rationals.

Endpoints are Fractions and may be individually open or closed, so
membership, intersection, union, complement and coverage are all decidable
exactly.  ``IntervalUnion`` keeps its parts sorted, disjoint and
non-adjacent; it is the representation used for neighbourhoods of limit
sets and for the finite subcovers built by the excursion-bound search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .rationals import format_rational


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError("degenerate interval must be closed on both sides")

    # -- queries ---------------------------------------------------------

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and self.lo_open:
            return False
        if x == self.hi and self.hi_open:
            return False
        return True

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def closed(self) -> bool:
        return not self.lo_open and not self.hi_open

    def closure(self) -> "Interval":
        return Interval(self.lo, self.hi)

    def length(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def intersection(self, other: "Interval") -> Optional["Interval"]:
        lo, lo_open = max(
            (self.lo, self.lo_open), (other.lo, other.lo_open),
            key=lambda t: (t[0], t[1]),
        )
        hi, hi_open = min(
            (self.hi, self.hi_open), (other.hi, other.hi_open),
            key=lambda t: (t[0], not t[1]),
        )
        return _maybe(lo, hi, lo_open, hi_open)

    def intersects(self, other: "Interval") -> bool:
        return self.intersection(other) is not None

    def contains_interval(self, other: "Interval") -> bool:
        got = self.intersection(other)
        return got == other

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        lb = "(" if self.lo_open else "["
        rb = ")" if self.hi_open else "]"
        return f"{lb}{format_rational(self.lo)},{format_rational(self.hi)}{rb}"


def _maybe(lo: Fraction, hi: Fraction, lo_open: bool, hi_open: bool) -> Optional[Interval]:
    """Interval if nonempty, else None (degenerate point only if closed)."""
    if lo > hi:
        return None
    if lo == hi and (lo_open or hi_open):
        return None
    return Interval(lo, hi, lo_open, hi_open)


def closed(lo, hi) -> Interval:
    return Interval(Fraction(lo), Fraction(hi))


def open_iv(lo, hi) -> Interval:
    return Interval(Fraction(lo), Fraction(hi), True, True)


def point(x) -> Interval:
    x = Fraction(x)
    return Interval(x, x)


def _touches(a: Interval, b: Interval) -> bool:
    """a, b with a.lo <= b.lo: do they overlap or close a shared endpoint?"""
    if b.lo < a.hi:
        return True
    if b.lo == a.hi:
        # (x,..] after [..,x) leaves the single point x uncovered.
        return not (a.hi_open and b.lo_open)
    return False


def _merge(a: Interval, b: Interval) -> Interval:
    lo, lo_open = min(
        (a.lo, a.lo_open), (b.lo, b.lo_open), key=lambda t: (t[0], t[1])
    )
    hi, hi_open = max(
        (a.hi, a.hi_open), (b.hi, b.hi_open), key=lambda t: (t[0], not t[1])
    )
    return Interval(lo, hi, lo_open, hi_open)


@dataclass(frozen=True)
class IntervalUnion:
    parts: tuple[Interval, ...]

    @staticmethod
    def of(parts: Iterable[Interval]) -> "IntervalUnion":
        """Normalize: sort ascending, merge overlapping/adjacent parts."""
        items = sorted(parts, key=lambda iv: (iv.lo, iv.lo_open))
        merged: list[Interval] = []
        for iv in items:
            if merged and _touches(merged[-1], iv):
                merged[-1] = _merge(merged[-1], iv)
            else:
                merged.append(iv)
        return IntervalUnion(tuple(merged))

    @staticmethod
    def empty() -> "IntervalUnion":
        return IntervalUnion(())

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def contains(self, x: Fraction) -> bool:
        # parts are few (tens); linear scan is exact and fast enough
        return any(p.contains(x) for p in self.parts)

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion.of(self.parts + other.parts)

    def intersect(self, window: Interval) -> "IntervalUnion":
        out = []
        for p in self.parts:
            got = p.intersection(window)
            if got is not None:
                out.append(got)
        return IntervalUnion(tuple(out))

    def complement_within(self, domain: Interval) -> "IntervalUnion":
        """Exact set difference domain \\ self (domain typically closed)."""
        remaining: list[Interval] = [domain]
        for p in self.parts:
            nxt: list[Interval] = []
            for r in remaining:
                nxt.extend(_subtract_one(r, p))
            remaining = nxt
        return IntervalUnion.of(remaining)

    def covers(self, other: "IntervalUnion") -> bool:
        """Exact: is every point of `other` contained in self?"""
        for q in other.parts:
            left = IntervalUnion.of([q])
            for p in self.parts:
                nxt: list[Interval] = []
                for r in left.parts:
                    nxt.extend(_subtract_one(r, p))
                left = IntervalUnion(tuple(nxt))
                if left.is_empty:
                    break
            if not left.is_empty:
                return False
        return True

    def total_length(self) -> Fraction:
        return sum((p.length() for p in self.parts), Fraction(0))

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        return " u ".join(str(p) for p in self.parts)


def _subtract_one(r: Interval, p: Interval) -> list[Interval]:
    """r \\ p as 0, 1 or 2 intervals."""
    cut = r.intersection(p)
    if cut is None:
        return [r]
    out = []
    left = _maybe(r.lo, cut.lo, r.lo_open, not cut.lo_open)
    if left is not None:
        out.append(left)
    right = _maybe(cut.hi, r.hi, not cut.hi_open, r.hi_open)
    if right is not None:
        out.append(right)
    return out
