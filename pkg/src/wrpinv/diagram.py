"""Combinatorial link diagrams built from PD codes.

Every crossing keeps a fixed frame of four ports ``0..3`` in counterclockwise
order.  ``under[i]`` says which opposite pair is the under-strand (0 for ports
0/2, 1 for ports 1/3) and ``heads[i][p]`` says whether the arc at port ``p``
enters the crossing.  Mirroring flips ``under`` and leaves the frame alone, so
face ids and shading survive a mirror unchanged.

A *corner* ``(i, k)`` is the angle between ports ``k`` and ``k+1`` of crossing
``i``.  Faces are equivalence classes of corners: walking along an arc from
port ``p`` of ``i`` to port ``q`` of ``j``, the corner ``(i, p)`` on the left
continues as corner ``(j, q-1)``.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum

from .pdcode import PDCode, make_pd

__all__ = [
    "Color",
    "DiagramError",
    "SplitDiagramError",
    "Face",
    "Diagram",
    "ValidationReport",
    "build_diagram",
    "faces",
    "checkerboard",
    "validate_reduced",
    "is_alternating",
    "mirror",
    "crossing_sign",
]


class Color(str, Enum):
    BLACK = "BLACK"
    WHITE = "WHITE"

    def other(self) -> Color:
        return Color.WHITE if self is Color.BLACK else Color.BLACK


class DiagramError(ValueError):
    """PD data that does not describe a planar link diagram."""


class SplitDiagramError(DiagramError):
    """The diagram's shadow is disconnected."""


def crossing_sign(under_in: int, over_in: int) -> int:
    """Sign of a crossing from the ports where under- and over-strand enter.

    The over-strand entering one step counterclockwise after the
    under-strand (``X(a,b,c,d)`` with the over-strand running ``b -> d``) is
    a positive crossing.  With this rule the PD code
    ``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`` is the trefoil whose two weighted
    checkerboard graphs carry only ``w``.
    """
    return 1 if (over_in - under_in) % 4 == 1 else -1


@dataclass(frozen=True)
class Face:
    id: int
    corners: tuple[tuple[int, int], ...]
    color: Color

    @property
    def crossings(self) -> set[int]:
        return {i for i, _ in self.corners}


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class Diagram:
    """Immutable planar diagram; see the module docstring for the frame."""

    def __init__(self, links, under, heads, *, outer_color: Color = Color.WHITE):
        self.n = len(under)
        self.links: dict[tuple[int, int], tuple[int, int]] = dict(links)
        self.under: tuple[int, ...] = tuple(under)
        self.heads: tuple[tuple[bool, ...], ...] = tuple(tuple(h) for h in heads)
        self.outer_color = Color(outer_color)
        self._check_ports()
        self.components = self._trace_components()
        self.signs: tuple[int, ...] = tuple(self._sign(i) for i in range(self.n))
        self._connected = self._shadow_connected()
        self._face_of: dict[tuple[int, int], int] = {}
        self.faces: tuple[Face, ...] = ()
        self._compute_faces()

    # -- construction helpers -------------------------------------------

    def _check_ports(self):
        for i in range(self.n):
            for p in range(4):
                q = self.links.get((i, p))
                if q is None or self.links.get(q) != (i, p):
                    raise DiagramError(f"port {(i, p)} is not linked symmetrically")
                if self.heads[i][p] == self.heads[q[0]][q[1]]:
                    raise DiagramError(f"arc {(i, p)}-{q} is not consistently oriented")
            for p in (0, 1):
                if self.heads[i][p] == self.heads[i][p + 2]:
                    raise DiagramError(f"strand through crossing {i} ports {p},{p + 2} is not oriented")

    def under_in(self, i: int) -> int:
        u = self.under[i]
        return u if self.heads[i][u] else u + 2

    def over_in(self, i: int) -> int:
        o = 1 - self.under[i]
        return o if self.heads[i][o] else o + 2

    def is_over(self, i: int, p: int) -> bool:
        return p % 2 != self.under[i]

    def _sign(self, i: int) -> int:
        return crossing_sign(self.under_in(i), self.over_in(i))

    def _trace_components(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        # each component as the cyclic list of its entry ports
        seen = set()
        comps = []
        for i in range(self.n):
            for p in range(4):
                if not self.heads[i][p] or (i, p) in seen:
                    continue
                seq = []
                cur = (i, p)
                while cur not in seen:
                    seen.add(cur)
                    seq.append(cur)
                    j, q = cur
                    cur = self.links[(j, (q + 2) % 4)]
                comps.append(tuple(seq))
        return tuple(comps)

    def _shadow_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        todo = [0]
        while todo:
            i = todo.pop()
            for p in range(4):
                j = self.links[(i, p)][0]
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return len(seen) == self.n

    def _compute_faces(self):
        corners = [(i, k) for i in range(self.n) for k in range(4)]
        uf = _UnionFind(corners)
        for (i, p), (j, q) in self.links.items():
            uf.union((i, p), (j, (q - 1) % 4))
        groups: dict = {}
        for c in corners:
            groups.setdefault(uf.find(c), []).append(c)
        ordered = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
        for fid, g in enumerate(ordered):
            for c in g:
                self._face_of[c] = fid
        if self._connected and len(ordered) != self.n + 2:
            raise DiagramError(
                f"rotation data is not planar: {len(ordered)} faces for {self.n} crossings "
                f"(a planar diagram has {self.n + 2})"
            )
        colors = self._two_color(len(ordered))
        self.faces = tuple(Face(fid, tuple(g), colors[fid]) for fid, g in enumerate(ordered))

    def _two_color(self, nfaces: int) -> list[Color]:
        # corner (i,k) and (i,k+1) lie on opposite sides of the arc at port k+1
        adj: dict[int, set[int]] = {f: set() for f in range(nfaces)}
        for i in range(self.n):
            for k in range(4):
                a, b = self._face_of[(i, k)], self._face_of[(i, (k + 1) % 4)]
                adj[a].add(b)
                adj[b].add(a)
        colors: list[Color | None] = [None] * nfaces
        for root in range(nfaces):
            if colors[root] is not None:
                continue
            colors[root] = self.outer_color
            todo = deque([root])
            while todo:
                f = todo.popleft()
                for g in adj[f]:
                    if colors[g] is None:
                        colors[g] = colors[f].other()
                        todo.append(g)
                    elif colors[g] is colors[f]:
                        raise AssertionError("face adjacency graph is not bipartite")
        return colors  # type: ignore[return-value]

    # -- queries ---------------------------------------------------------

    def face_at(self, i: int, k: int) -> int:
        return self._face_of[(i, k)]

    def color_at(self, i: int, k: int) -> Color:
        return self.faces[self._face_of[(i, k)]].color

    @property
    def is_connected(self) -> bool:
        return self._connected

    def component_count(self) -> int:
        return len(self.components)

    def writhe(self) -> int:
        return sum(self.signs)

    def labels(self) -> dict[tuple[int, int], int]:
        """Arc labels per port, numbered along components as in :meth:`to_pd`."""
        out = {}
        lab = 1
        for comp in self._canonical_components():
            for port in comp:
                out[port] = lab
                out[self.links[port]] = lab
                lab += 1
        return out

    def _canonical_components(self):
        # start each component at its smallest entry port; order by that port
        comps = []
        for comp in self.components:
            k = comp.index(min(comp))
            comps.append(comp[k:] + comp[:k])
        return sorted(comps, key=lambda c: c[0])

    def to_pd(self) -> PDCode:
        lab = self.labels()
        out = []
        for i in range(self.n):
            u = self.under_in(i)
            out.append(tuple(lab[(i, (u + k) % 4)] for k in range(4)))
        return make_pd(out)

    def with_outer_color(self, color: Color) -> Diagram:
        return Diagram(self.links, self.under, self.heads, outer_color=color)

    def reversed(self) -> Diagram:
        """Reverse the orientation of every component."""
        heads = [tuple(not h for h in hs) for hs in self.heads]
        return Diagram(self.links, self.under, heads, outer_color=self.outer_color)

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return (self.links, self.under, self.heads, self.outer_color) == (
            other.links, other.under, other.heads, other.outer_color)

    def __hash__(self):
        return hash((self.under, self.heads))

    def __repr__(self):
        return f"Diagram(n={self.n}, components={len(self.components)}, writhe={self.writhe()})"


def build_diagram(code: PDCode | str, *, outer_color: Color = Color.WHITE) -> Diagram:
    """Orient, sign and face-trace a PD code.

    Raises :class:`SplitDiagramError` for a disconnected shadow and
    :class:`DiagramError` for non-planar or inconsistently oriented data.
    """
    if isinstance(code, str):
        from .pdcode import parse_pd
        code = parse_pd(code)
    xs = code.crossings
    n = len(xs)
    ends: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(xs):
        for p, lab in enumerate(x):
            ends.setdefault(lab, []).append((i, p))
    links = {}
    for lab, (e1, e2) in ends.items():
        links[e1] = e2
        links[e2] = e1

    heads: list[list[bool | None]] = [[True, None, False, None] for _ in range(n)]
    pending = []
    for i, x in enumerate(xs):
        a, b, c, d = x
        if code.successor(a) != c:
            raise DiagramError(
                f"crossing {i} {x}: under-strand {a}->{c} runs against the component numbering")
        fwd = code.successor(b) == d
        back = code.successor(d) == b
        if fwd and not back:
            heads[i][1], heads[i][3] = True, False
        elif back and not fwd:
            heads[i][1], heads[i][3] = False, True
        elif fwd and back:
            pending.append(i)
        else:
            raise DiagramError(f"crossing {i} {x}: over-strand labels {b},{d} are not consecutive")

    # two-arc components: propagate from the other end of each arc
    while pending:
        progress = False
        for i in list(pending):
            for p, q in ((1, 3), (3, 1)):
                j, r = links[(i, p)]
                if heads[j][r] is not None:
                    heads[i][p] = not heads[j][r]
                    heads[i][q] = heads[j][r]
                    pending.remove(i)
                    progress = True
                    break
        if pending and not progress:
            i = pending.pop(0)
            heads[i][1], heads[i][3] = True, False

    diag = Diagram(links, [0] * n, heads, outer_color=outer_color)
    if not diag.is_connected:
        raise SplitDiagramError("split diagram: the shadow is disconnected")
    return diag


def faces(d: Diagram) -> list[Face]:
    return list(d.faces)


def checkerboard(d: Diagram, outer_color: Color | None = None) -> Diagram:
    """Return ``d`` shaded with the outer face (face 0) of ``outer_color``."""
    if outer_color is None or outer_color == d.outer_color:
        return d
    return d.with_outer_color(outer_color)


@dataclass
class ValidationReport:
    connected: bool
    nugatory: list[int] = field(default_factory=list)
    non_prime_warning: bool = False

    @property
    def ok(self) -> bool:
        return self.connected and not self.nugatory

    def errors(self) -> list[str]:
        out = []
        if not self.connected:
            out.append("split: the diagram's shadow is disconnected")
        for i in self.nugatory:
            out.append(f"nugatory crossing {i}: the same region meets two opposite corners")
        return out

    def warnings(self) -> list[str]:
        if self.non_prime_warning:
            return ["non-prime: a checkerboard graph has a cut vertex"]
        return []

    def to_json(self) -> str:
        return json.dumps({
            "status": "PASS" if self.ok else "FAIL",
            "connected": self.connected,
            "nugatory_crossings": self.nugatory,
            "errors": self.errors(),
            "warnings": self.warnings(),
        }, sort_keys=True)

    def __str__(self):
        lines = ["PASS" if self.ok else "FAIL"]
        lines += [f"  error: {e}" for e in self.errors()]
        lines += [f"  warning: {w}" for w in self.warnings()]
        return "\n".join(lines)


def _has_cut_vertex(vertices, edges) -> bool:
    vertices = list(vertices)
    if len(vertices) < 3:
        return False
    adj = {v: set() for v in vertices}
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    for cut in vertices:
        rest = [v for v in vertices if v != cut]
        seen = {rest[0]}
        todo = [rest[0]]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y != cut and y not in seen:
                    seen.add(y)
                    todo.append(y)
        if len(seen) != len(rest):
            return True
    return False


def validate_reduced(d: Diagram) -> ValidationReport:
    """Check non-splitness and absence of nugatory crossings.

    Also flags (as a warning only) a cut vertex in either checkerboard graph,
    which indicates a composite diagram.
    """
    report = ValidationReport(connected=d.is_connected)
    for i in range(d.n):
        if d.face_at(i, 0) == d.face_at(i, 2) or d.face_at(i, 1) == d.face_at(i, 3):
            report.nugatory.append(i)
    if report.ok:
        for color in Color:
            verts = [f.id for f in d.faces if f.color is color]
            edges = []
            for i in range(d.n):
                k = 0 if d.color_at(i, 0) is color else 1
                edges.append((d.face_at(i, k), d.face_at(i, k + 2)))
            if _has_cut_vertex(verts, edges):
                report.non_prime_warning = True
    return report


def is_alternating(d: Diagram) -> bool:
    for (i, p), (j, q) in d.links.items():
        if d.is_over(i, p) == d.is_over(j, q):
            return False
    return True


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing; faces and shading are kept."""
    return Diagram(d.links, [1 - u for u in d.under], d.heads, outer_color=d.outer_color)


def sign_counts(d: Diagram) -> Counter:
    return Counter(d.signs)
