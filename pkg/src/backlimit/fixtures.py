"""Built-in example maps.

* ``tent`` — full tent map, the standard chaotic benchmark; every point has
  two preimages (one at the peak) and backward limit sets fill the interval.
* ``identity`` — degenerate control: every point fixed, backward orbits are
  constant.
* ``fig1`` — a three-lap map whose backward dynamics separate the limit-set
  hierarchy: the attracting-from-behind picture differs sharply from the
  nonwandering set, so it exercises every nontrivial code path (unique
  backward branch of points below 1/2, a two-branch expanding core on
  [1/2, 2/3], and backward limit sets strictly larger than the
  nonwandering set).
"""

from __future__ import annotations

from fractions import Fraction as F

from .errors import UnknownFixtureError
from .intervals import Interval
from .map_core import PLMap

_UNIT = Interval(F(0), F(1))

_SPECS: dict[str, tuple[tuple[F, F], ...]] = {
    "tent": ((F(0), F(0)), (F(1, 2), F(1)), (F(1), F(0))),
    "identity": ((F(0), F(0)), (F(1), F(1))),
    "fig1": ((F(0), F(0)), (F(1, 4), F(1)), (F(5, 8), F(1, 2)), (F(1), F(1))),
}


def list_fixtures() -> tuple[str, ...]:
    return tuple(sorted(_SPECS))


def get_fixture(name: str) -> PLMap:
    try:
        pts = _SPECS[name]
    except KeyError:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}; available: {', '.join(list_fixtures())}"
        ) from None
    return PLMap.from_breakpoints(_UNIT, pts)
