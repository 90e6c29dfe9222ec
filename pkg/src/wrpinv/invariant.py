"""The WRP invariant: an unordered pair of checkerboard cycle sums."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cycles import cycle_sum
from .diagram import Color, Diagram, DiagramError, build_diagram, is_alternating, validate_reduced
from .pdcode import PDCode
from .poly import Poly2, compare, parse_poly, render, swap_vars
from .tait import build_tait, consolidate, double

__all__ = [
    "WRPPair",
    "make_pair",
    "color_polynomial",
    "wrp_of_diagram",
    "wrp_of_pd",
    "mirror_wrp",
    "wrp_equal",
    "parse_wrp",
]


@dataclass(frozen=True)
class WRPPair:
    """Canonically ordered pair: ``first <= second`` under :func:`poly.compare`.

    ``alternating`` is metadata (False means the value was computed from a
    non-alternating diagram and is not known to be an invariant); it does not
    take part in equality.
    """

    first: Poly2
    second: Poly2
    alternating: bool = field(default=True, compare=False)

    def __post_init__(self):
        if compare(self.first, self.second) > 0:
            raise ValueError("WRPPair members out of canonical order; use make_pair()")

    def as_set(self) -> frozenset:
        return frozenset((self.first, self.second))

    def __iter__(self):
        yield self.first
        yield self.second

    def __str__(self):
        return "{" + render(self.first) + ", " + render(self.second) + "}"

    def to_json(self) -> dict:
        return {"first": self.first.to_json(), "second": self.second.to_json()}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def make_pair(a: Poly2, b: Poly2, *, alternating: bool = True) -> WRPPair:
    if compare(a, b) > 0:
        a, b = b, a
    return WRPPair(a, b, alternating)


def color_polynomial(d: Diagram, color: Color, budget: int | None = None) -> Poly2:
    return cycle_sum(double(consolidate(build_tait(d, color))), budget)


def wrp_of_diagram(d: Diagram, budget: int | None = None) -> WRPPair:
    """WRP of a reduced, non-split diagram.

    Non-alternating input is computed anyway and flagged on the result.
    """
    report = validate_reduced(d)
    if not report.ok:
        raise DiagramError("; ".join(report.errors()))
    black = color_polynomial(d, Color.BLACK, budget)
    white = color_polynomial(d, Color.WHITE, budget)
    return make_pair(black, white, alternating=is_alternating(d))


def wrp_of_pd(code: PDCode | str, budget: int | None = None) -> WRPPair:
    return wrp_of_diagram(build_diagram(code), budget)


def mirror_wrp(p: WRPPair) -> WRPPair:
    return make_pair(swap_vars(p.first), swap_vars(p.second), alternating=p.alternating)


def wrp_equal(a: WRPPair, b: WRPPair) -> bool:
    return a.as_set() == b.as_set()


def parse_wrp(text: str) -> WRPPair:
    """Inverse of ``str(WRPPair)``: ``"{p1, p2}"``."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"expected '{{p1, p2}}', got {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"expected exactly two polynomials in {text!r}")
    return make_pair(parse_poly(parts[0]), parse_poly(parts[1]))
