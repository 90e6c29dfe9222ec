"""Flype moves on reduced alternating diagrams.

Picture a crossing ``c`` sitting to the left of a tangle ``R``::

        f1 --NW  c  NE-- NW_R [  R  ] NE_R -- g1
        f2 --SW     SE-- SW_R [     ] SE_R -- g2

The flype turns ``R`` over about the horizontal axis and carries ``c`` to its
right-hand side.  Combinatorially, turning a crossing over reverses the cyclic
order of its ports and exchanges over and under; both ``R`` and ``c`` are
turned, and then the six arcs around them are reattached::

        f1 --[ R turned ]-- c -- g1
        f2 --[          ]--   -- g2

Sites are found by brute force: every crossing subset with exactly four arcs
leaving it is a candidate tangle.  Results are checked after the fact
(planarity, alternation, sign multiset) instead of being correct by
construction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .diagram import Diagram, DiagramError, is_alternating, validate_reduced

__all__ = [
    "FlypeError",
    "FlypeSpec",
    "find_flype_sites",
    "apply_flype",
    "reverse_site",
    "canonical_key",
    "isomorphic",
    "FlypeCheck",
    "check_flype_invariance",
]

MAX_SEARCH_CROSSINGS = 20

Port = tuple[int, int]


class FlypeError(ValueError):
    pass


@dataclass(frozen=True)
class FlypeSpec:
    """One flype: ``crossing_c`` moves across ``tangle``.

    ``boundary`` lists the tangle's four boundary ports counterclockwise,
    starting with the two attached to ``crossing_c`` (NW, SW, SE, NE in the
    module picture).
    """

    crossing_c: int
    tangle: frozenset[int]
    boundary: tuple[Port, Port, Port, Port]

    @property
    def degenerate(self) -> bool:
        """A one-crossing tangle: the flype only re-draws the same picture."""
        return len(self.tangle) == 1

    def __str__(self):
        return f"c={self.crossing_c} R={sorted(self.tangle)}"


def _arcs(d: Diagram) -> list[tuple[Port, Port]]:
    return [(a, b) for a, b in d.links.items() if a < b]


def _cut4_masks(d: Diagram) -> list[int]:
    n = d.n
    if n > MAX_SEARCH_CROSSINGS:
        raise FlypeError(f"exhaustive flype search is limited to {MAX_SEARCH_CROSSINGS} crossings")
    masks = np.arange(1, (1 << n) - 1, dtype=np.int64)
    cut = np.zeros_like(masks)
    for (i, _), (j, _) in _arcs(d):
        cut += ((masks >> i) ^ (masks >> j)) & 1
    return [int(m) for m in masks[cut == 4]]


def _connected(d: Diagram, members: set[int]) -> bool:
    if not members:
        return False
    start = next(iter(members))
    seen = {start}
    todo = [start]
    while todo:
        i = todo.pop()
        for p in range(4):
            j = d.links[(i, p)][0]
            if j in members and j not in seen:
                seen.add(j)
                todo.append(j)
    return seen == members


def _ccw_order(d: Diagram, ends: list[Port]) -> list[Port] | None:
    """Order the boundary ports of a tangle counterclockwise around it.

    Walking outward along the arc at port ``(i, p)``, the face on the left is
    the one at corner ``(i, p)`` and the face on the right is at corner
    ``(i, p - 1)``; the next boundary arc counterclockwise has as its right
    face this arc's left face.
    """
    right = {}
    for i, p in ends:
        f = d.face_at(i, (p - 1) % 4)
        if f in right:
            return None
        right[f] = (i, p)
    order = [ends[0]]
    while len(order) < 4:
        i, p = order[-1]
        nxt = right.get(d.face_at(i, p))
        if nxt is None or nxt in order:
            return None
        order.append(nxt)
    i, p = order[-1]
    if right.get(d.face_at(i, p)) != order[0]:
        return None
    return order


def _check_input(d: Diagram):
    report = validate_reduced(d)
    if not report.ok:
        raise FlypeError("flype search needs a reduced diagram: " + "; ".join(report.errors()))
    if not is_alternating(d):
        raise FlypeError("flype search needs an alternating diagram")


def find_flype_sites(d: Diagram) -> list[FlypeSpec]:
    """All flype sites of a reduced alternating diagram, by exhaustive search."""
    _check_input(d)
    sites = []
    everything = set(range(d.n))
    for mask in _cut4_masks(d):
        tangle = {i for i in range(d.n) if mask >> i & 1}
        rest = everything - tangle
        if not (_connected(d, tangle) and _connected(d, rest)):
            continue
        ends = [(i, p) for i in sorted(tangle) for p in range(4) if d.links[(i, p)][0] not in tangle]
        order = _ccw_order(d, ends)
        if order is None:
            continue
        for k in range(4):
            x, y = order[k], order[(k + 1) % 4]
            (c, qx), (cy, qy) = d.links[x], d.links[y]
            if c != cy:
                continue
            # c must meet the tangle with exactly these two arcs, on adjacent ports
            if sum(1 for e in ends if d.links[e][0] == c) != 2:
                continue
            if (qx - qy) % 4 != 1:
                continue
            outside = rest - {c}
            if not outside:
                continue
            far = [d.links[(c, (qx + 1) % 4)], d.links[(c, (qx + 2) % 4)],
                   d.links[order[(k + 2) % 4]], d.links[order[(k + 3) % 4]]]
            if any(j not in outside for j, _ in far):
                continue
            boundary = tuple(order[(k + m) % 4] for m in range(4))
            sites.append(FlypeSpec(c, frozenset(tangle), boundary))
    return sites


def apply_flype(d: Diagram, s: FlypeSpec) -> Diagram:
    """Perform the flype ``s`` on ``d``; crossing ids are preserved."""
    c = s.crossing_c
    nw_r, sw_r, se_r, ne_r = s.boundary
    links = d.links
    if c in s.tangle or links[nw_r][0] != c or links[sw_r][0] != c:
        raise FlypeError(f"invalid flype spec {s}: crossing {c} is not attached to the tangle")
    ne_c = links[nw_r]
    se_c = links[sw_r]
    if (ne_c[1] - se_c[1]) % 4 != 1:
        raise FlypeError(f"invalid flype spec {s}: attaching ports are not adjacent")
    nw_c = (c, (ne_c[1] + 1) % 4)
    sw_c = (c, (ne_c[1] + 2) % 4)
    f1, f2 = links[nw_c], links[sw_c]
    g1, g2 = links[ne_r], links[se_r]
    moved = set(s.tangle) | {c}
    if any(p[0] in moved for p in (f1, f2, g1, g2)):
        raise FlypeError(f"invalid flype spec {s}: the outside tangle is empty or touches c")

    new_links = dict(links)
    for a, b in ((f1, sw_r), (f2, nw_r), (se_r, sw_c), (ne_r, nw_c), (se_c, g1), (ne_c, g2)):
        new_links[a] = b
        new_links[b] = a

    # turn R and c over: port p of a turned crossing moves to slot -p
    def slot(port: Port) -> Port:
        i, p = port
        return (i, (-p) % 4) if i in moved else port

    renamed = {slot(a): slot(b) for a, b in new_links.items()}
    under = [1 - u if i in moved else u for i, u in enumerate(d.under)]
    heads = [list(h) for h in d.heads]
    for i in moved:
        heads[i] = [d.heads[i][(-k) % 4] for k in range(4)]
    # c's strands were rerouted; re-read their direction from the neighbours
    for k in range(4):
        j, q = renamed[(c, k)]
        if j != c:
            heads[c][k] = not heads[j][q]

    try:
        out = Diagram(renamed, under, heads, outer_color=d.outer_color)
    except DiagramError as exc:
        raise FlypeError(f"flype {s} produced an invalid diagram: {exc}") from exc
    if not out.is_connected or not validate_reduced(out).ok or not is_alternating(out):
        raise FlypeError(f"flype {s} produced a diagram that is not reduced alternating")
    if Counter(out.signs) != Counter(d.signs) or out.component_count() != d.component_count():
        raise FlypeError(f"flype {s} changed crossing signs or components")
    return out


def reverse_site(flyped: Diagram, s: FlypeSpec) -> FlypeSpec:
    """The site in ``flyped`` that moves ``s.crossing_c`` back across the tangle."""
    for site in find_flype_sites(flyped):
        if site.crossing_c == s.crossing_c and site.tangle == s.tangle:
            return site
    raise FlypeError(f"no return site for {s}")


def canonical_key(d: Diagram) -> tuple:
    """Invariant of the oriented diagram up to orientation-preserving homeomorphism
    of the sphere and renumbering of crossings."""
    best = None
    for i0 in range(d.n):
        for p0 in range(4):
            index = {i0: 0}
            offset = {i0: p0}
            queue = [i0]
            rows = []
            for i in queue:
                row = []
                for k in range(4):
                    p = (offset[i] + k) % 4
                    j, q = d.links[(i, p)]
                    if j not in index:
                        index[j] = len(index)
                        offset[j] = q
                        queue.append(j)
                    row.append((index[j], (q - offset[j]) % 4, d.is_over(i, p), d.heads[i][p]))
                rows.append(tuple(row))
            key = tuple(rows)
            if best is None or key < best:
                best = key
    return best


def isomorphic(a: Diagram, b: Diagram) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)


@dataclass
class FlypeCheck:
    """Outcome of flyping one diagram at every site."""

    sites: int = 0
    nondegenerate: int = 0
    new_diagrams: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"sites={self.sites} nondegenerate={self.nondegenerate} "
        if self.new_diagrams:
            text += f"new_diagrams={self.new_diagrams} "
        text += status
        return text + "".join(f"\n  {f}" for f in self.failures)


def check_flype_invariance(d: Diagram, *, shapes: bool = False, roundtrip: bool = False) -> FlypeCheck:
    """Flype ``d`` at every site and compare WRP before and after.

    With ``shapes``, ``new_diagrams`` counts results not isomorphic to ``d``;
    with ``roundtrip`` each flype is also undone and compared with ``d``.
    """
    from .invariant import wrp_equal, wrp_of_diagram

    before = wrp_of_diagram(d)
    key = canonical_key(d) if shapes else None
    report = FlypeCheck()
    for s in find_flype_sites(d):
        report.sites += 1
        report.nondegenerate += not s.degenerate
        try:
            out = apply_flype(d, s)
            after = wrp_of_diagram(out)
        except (FlypeError, DiagramError) as exc:
            report.failures.append(f"{s}: {exc}")
            continue
        if not wrp_equal(before, after):
            report.failures.append(f"{s}: WRP changed from {before} to {after}")
        if shapes and canonical_key(out) != key:
            report.new_diagrams += 1
        if roundtrip:
            try:
                back = apply_flype(out, reverse_site(out, s))
            except FlypeError as exc:
                report.failures.append(f"{s}: cannot undo: {exc}")
                continue
            if not isomorphic(back, d):
                report.failures.append(f"{s}: undoing the flype does not restore the diagram")
    return report
