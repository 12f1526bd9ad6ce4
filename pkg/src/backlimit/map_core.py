"""Continuous piecewise-linear self-maps of a compact interval.

A map is a finite breakpoint list over a closed domain; everything between
breakpoints is linear.  All arithmetic is exact rational: evaluation,
images, preimages, composition and fixed points are solved per monotone lap
with no rounding anywhere.  Validation enforces the class the rest of the
package relies on: strictly increasing breakpoints spanning the domain,
values inside the domain (self-map), no constant laps (preimages stay
finite point sets), and surjectivity onto the domain.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .errors import CapExceeded, DomainError, MapFileError, MapValidationError
from .intervals import Interval, IntervalUnion
from .rationals import format_rational, parse_rational


@dataclass(frozen=True)
class Lap:
    """One linear piece y = slope*x + intercept on a closed x-range."""

    index: int
    x_range: Interval
    slope: Fraction
    intercept: Fraction

    def value(self, x: Fraction) -> Fraction:
        return self.slope * x + self.intercept

    def solve(self, y: Fraction) -> Optional[Fraction]:
        """The x in this lap's range with value(x) = y, if any."""
        x = (y - self.intercept) / self.slope
        return x if self.x_range.contains(x) else None

    def y_range(self) -> Interval:
        a = self.value(self.x_range.lo)
        b = self.value(self.x_range.hi)
        return Interval(min(a, b), max(a, b))


@dataclass(frozen=True)
class PLMap:
    domain: Interval
    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_breakpoints(domain: Interval, pts) -> "PLMap":
        """Validate and build; raises MapValidationError listing violations."""
        pts = tuple((Fraction(x), Fraction(y)) for x, y in pts)
        violations = []
        if not domain.closed:
            violations.append("domain must be a closed interval")
        if len(pts) < 2:
            violations.append("need at least two breakpoints")
            raise MapValidationError(violations)
        xs = [x for x, _ in pts]
        ys = [y for _, y in pts]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            violations.append("breakpoint x values not strictly increasing")
        if xs[0] != domain.lo:
            violations.append(
                f"first breakpoint x {format_rational(xs[0])} != domain lo"
            )
        if xs[-1] != domain.hi:
            violations.append(
                f"last breakpoint x {format_rational(xs[-1])} != domain hi"
            )
        for x, y in pts:
            if not domain.contains(y):
                violations.append(
                    f"not a self-map: value {format_rational(y)} at "
                    f"x = {format_rational(x)} leaves the domain"
                )
        for i in range(len(pts) - 1):
            if ys[i] == ys[i + 1] and xs[i] != xs[i + 1]:
                violations.append(
                    f"constant lap [{format_rational(xs[i])},"
                    f"{format_rational(xs[i + 1])}]"
                )
        # continuity makes the image the hull of breakpoint values, so
        # surjectivity reduces to attaining both domain endpoints
        if not violations and (min(ys) != domain.lo or max(ys) != domain.hi):
            violations.append("not onto")
        if violations:
            raise MapValidationError(violations)
        return PLMap(domain, pts)

    @cached_property
    def laps(self) -> tuple[Lap, ...]:
        out = []
        for i in range(len(self.breakpoints) - 1):
            (x0, y0), (x1, y1) = self.breakpoints[i], self.breakpoints[i + 1]
            slope = (y1 - y0) / (x1 - x0)
            intercept = y0 - slope * x0
            out.append(Lap(i, Interval(x0, x1), slope, intercept))
        return tuple(out)

    @cached_property
    def _xs(self) -> list[Fraction]:
        return [x for x, _ in self.breakpoints]

    @cached_property
    def _inverse_tables(self):
        """Per-lap integer tables for the hot preimage cascade.

        Lap inverse is x = (a/b) * y + (c/d) on the closed range
        [ln/ld, hn/hd]; all denominators positive.
        """
        rows = []
        for lap in self.laps:
            inv = 1 / lap.slope
            off = -lap.intercept / lap.slope
            rows.append((
                inv.numerator, inv.denominator,
                off.numerator, off.denominator,
                lap.x_range.lo.numerator, lap.x_range.lo.denominator,
                lap.x_range.hi.numerator, lap.x_range.hi.denominator,
            ))
        return rows

    # -- evaluation --------------------------------------------------------

    def lap_at(self, x: Fraction) -> Lap:
        if not self.domain.contains(x):
            raise DomainError(f"{format_rational(x)} outside domain {self.domain}")
        i = bisect_right(self._xs, x) - 1
        i = min(max(i, 0), len(self.laps) - 1)
        return self.laps[i]

    def eval(self, x: Fraction) -> Fraction:
        return self.lap_at(x).value(x)

    def eval_iter(self, x: Fraction, n: int) -> Fraction:
        if n < 0:
            raise ValueError("iteration count must be >= 0")
        for _ in range(n):
            x = self.eval(x)
        return x

    def image_interval(self, j: Interval) -> Interval:
        """Exact image of a subinterval (openness of endpoints tracked)."""
        if j.lo < self.domain.lo or j.hi > self.domain.hi:
            raise DomainError(f"{j} not inside domain {self.domain}")
        cands = [
            (self.eval(j.lo), not j.lo_open),
            (self.eval(j.hi), not j.hi_open),
        ]
        for bx, by in self.breakpoints:
            if j.lo < bx < j.hi:
                cands.append((by, True))
        lo = min(v for v, _ in cands)
        hi = max(v for v, _ in cands)
        lo_att = any(att for v, att in cands if v == lo)
        hi_att = any(att for v, att in cands if v == hi)
        return Interval(lo, hi, not lo_att, not hi_att)

    # -- inverse problems ----------------------------------------------------

    def preimage_point(self, y: Fraction) -> tuple[Fraction, ...]:
        """All x with f(x) = y, ascending; shared-breakpoint hits deduped."""
        if not self.domain.contains(y):
            raise DomainError(f"{format_rational(y)} outside domain {self.domain}")
        found = set()
        for lap in self.laps:
            x = lap.solve(y)
            if x is not None:
                found.add(x)
        return tuple(sorted(found))

    def preimage_with_laps(self, y: Fraction) -> tuple[tuple[Fraction, int], ...]:
        """(x, lap index) pairs ascending; a shared breakpoint keeps the
        lower lap index."""
        if not self.domain.contains(y):
            raise DomainError(f"{format_rational(y)} outside domain {self.domain}")
        found: dict[Fraction, int] = {}
        for lap in self.laps:
            x = lap.solve(y)
            if x is not None and x not in found:
                found[x] = lap.index
        return tuple(sorted(found.items()))

    def preimage_ints(self, p: int, q: int) -> list[tuple[int, int]]:
        """Preimages of p/q as normalized (num, den) pairs, ascending.

        Integer-only inner loop; this is the hot path of level-set cascades
        where Fraction overhead dominates.  q must be positive and p/q in
        lowest terms.
        """
        out = []
        for an, ad, cn, cd, ln, ld, hn, hd in self._inverse_tables:
            # x = (an/ad)*y + (cn/cd) with y = p/q
            num = an * p * cd + cn * ad * q
            den = ad * q * cd
            # range check before normalization: den, ld, hd all positive
            if num * ld < ln * den or num * hd > hn * den:
                continue
            g = math.gcd(num, den)
            pair = (num // g, den // g)
            # laps are ordered in x, so results arrive ascending; a shared
            # breakpoint shows up twice in a row
            if not out or out[-1] != pair:
                out.append(pair)
        return out

    def fixed_points(self) -> "FixedPointSet":
        """Exact solutions of f(x) = x, as isolated points plus identity
        segments (laps with slope 1, intercept 0 are fixed pointwise)."""
        pts = set()
        segs = []
        for lap in self.laps:
            if lap.slope == 1:
                if lap.intercept == 0:
                    segs.append(lap.x_range)
                continue
            x = lap.intercept / (1 - lap.slope)
            if lap.x_range.contains(x):
                pts.add(x)
        merged = IntervalUnion.of(segs)
        isolated = tuple(
            sorted(x for x in pts if not merged.contains(x))
        )
        return FixedPointSet(isolated, merged.parts)

    # -- derived data ----------------------------------------------------

    def lap_image_union(self) -> IntervalUnion:
        """Union of per-lap value ranges (oracle route for surjectivity)."""
        return IntervalUnion.of(lap.y_range() for lap in self.laps)

    def iterate(self, p: int, lap_cap: int) -> "PLMap":
        return iterate_map(self, p, lap_cap)


@dataclass(frozen=True)
class FixedPointSet:
    points: tuple[Fraction, ...]
    intervals: tuple[Interval, ...]

    def contains(self, x: Fraction) -> bool:
        return x in self.points or any(iv.contains(x) for iv in self.intervals)

    @property
    def has_interval(self) -> bool:
        return bool(self.intervals)


def eval_map(f: PLMap, x: Fraction) -> Fraction:
    return f.eval(x)


def eval_iter(f: PLMap, x: Fraction, n: int) -> Fraction:
    return f.eval_iter(x, n)


def image_interval(f: PLMap, j: Interval) -> Interval:
    return f.image_interval(j)


def preimage_point(f: PLMap, y: Fraction) -> tuple[Fraction, ...]:
    return f.preimage_point(y)


def fixed_points(f: PLMap) -> FixedPointSet:
    return f.fixed_points()


def iterate_map(f: PLMap, p: int, lap_cap: int) -> PLMap:
    """Exact piecewise-linear representation of the p-th iterate.

    Breakpoints of f^(k+1) are those of f^k plus every preimage under f^k
    of an interior breakpoint of f.  Aborts with CapExceeded("lap", ...)
    once the refined lap count would pass lap_cap; `completed` reports the
    largest iterate that was fully built.
    """
    if p < 1:
        raise ValueError("iterate power must be >= 1")
    if len(f.laps) > lap_cap:
        raise CapExceeded("lap", lap_cap, completed=0)
    if p == 1:
        return f
    interior = [x for x, _ in f.breakpoints[1:-1]]
    g = f
    for k in range(2, p + 1):
        xs = {x for x, _ in g.breakpoints}
        for bx in interior:
            xs.update(g.preimage_point(bx))
        ordered = sorted(xs)
        if len(ordered) - 1 > lap_cap:
            raise CapExceeded("lap", lap_cap, completed=k - 1, partial=g)
        values = [f.eval(g.eval(x)) for x in ordered]
        pts = _drop_collinear(list(zip(ordered, values)))
        g = PLMap.from_breakpoints(f.domain, pts)
    return g


def _drop_collinear(pts):
    out = [pts[0]]
    for i in range(1, len(pts) - 1):
        (x0, y0), (x1, y1), (x2, y2) = out[-1], pts[i], pts[i + 1]
        if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
            continue
        out.append(pts[i])
    out.append(pts[-1])
    return out


# -- map file format ------------------------------------------------------


def parse_map(text: str) -> PLMap:
    """Parse the line-oriented map format.

    ::

        interval <lo> <hi>
        breakpoint <x> <y>     # repeated, x strictly increasing

    Literals are exact rationals (``p`` or ``p/q``); ``#`` starts a comment.
    """
    domain = None
    pts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword, args = fields[0], fields[1:]
        if keyword == "interval":
            if domain is not None:
                raise MapFileError(lineno, "duplicate interval line")
            if len(args) != 2:
                raise MapFileError(lineno, "interval needs exactly <lo> <hi>")
            try:
                lo, hi = parse_rational(args[0]), parse_rational(args[1])
            except ValueError as exc:
                raise MapFileError(lineno, str(exc)) from None
            if lo >= hi:
                raise MapFileError(lineno, "interval lo must be < hi")
            domain = Interval(lo, hi)
        elif keyword == "breakpoint":
            if len(args) != 2:
                raise MapFileError(lineno, "breakpoint needs exactly <x> <y>")
            try:
                pts.append((parse_rational(args[0]), parse_rational(args[1])))
            except ValueError as exc:
                raise MapFileError(lineno, str(exc)) from None
        else:
            raise MapFileError(lineno, f"unknown keyword {keyword!r}")
    if domain is None:
        raise MapFileError(0, "missing interval line")
    return PLMap.from_breakpoints(domain, pts)


def emit_map(f: PLMap) -> str:
    """Canonical text form; bit-exact round-trip with parse_map."""
    lines = [
        f"interval {format_rational(f.domain.lo)} {format_rational(f.domain.hi)}"
    ]
    for x, y in f.breakpoints:
        lines.append(f"breakpoint {format_rational(x)} {format_rational(y)}")
    return "\n".join(lines) + "\n"
