"""Weighted checkerboard graphs and their consolidated / doubled forms.

Every edge remembers the crossing ids it came from, so a Tait edge, its
consolidated edge and both doubled arcs can be traced back to the diagram.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import Color, Diagram
from .poly import Monomial2, R, W

__all__ = [
    "TaitEdge",
    "TaitGraph",
    "ConsolidatedGraph",
    "DoubledDigraph",
    "build_tait",
    "consolidate",
    "double",
]


@dataclass(frozen=True)
class TaitEdge:
    u: int
    v: int
    weight: Monomial2
    crossing: int


@dataclass(frozen=True)
class TaitGraph:
    color: Color
    vertices: tuple[int, ...]
    edges: tuple[TaitEdge, ...]

    def to_json(self) -> str:
        return json.dumps({
            "color": self.color.value,
            "vertices": list(self.vertices),
            "edges": [[e.u, e.v, _weight_str(e.weight)] for e in self.edges],
        })


@dataclass(frozen=True)
class ConsolidatedGraph:
    """Simple graph; ``edges`` maps ``(u, v)`` with ``u < v`` to its weight."""

    vertices: tuple[int, ...]
    edges: dict[tuple[int, int], Monomial2]
    crossings: dict[tuple[int, int], tuple[int, ...]] | None = None

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge key {(u, v)} must be ordered")

    def to_json(self) -> str:
        return json.dumps({
            "vertices": list(self.vertices),
            "edges": [[u, v, _weight_str(m)] for (u, v), m in sorted(self.edges.items())],
        })


@dataclass(frozen=True)
class DoubledDigraph:
    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int, Monomial2], ...]

    def successors(self) -> dict[int, list[tuple[int, Monomial2]]]:
        out: dict[int, list[tuple[int, Monomial2]]] = {v: [] for v in self.vertices}
        for u, v, m in self.arcs:
            out[u].append((v, m))
        return out


def _weight_str(m: Monomial2) -> str:
    parts = []
    if m.deg_w:
        parts.append(f"w^{m.deg_w}")
    if m.deg_r:
        parts.append(f"r^{m.deg_r}")
    return " ".join(parts) or "1"


def build_tait(d: Diagram, color: Color) -> TaitGraph:
    """One vertex per face of ``color``, one edge per crossing."""
    color = Color(color)
    verts = tuple(f.id for f in d.faces if f.color is color)
    edges = []
    for i in range(d.n):
        k = 0 if d.color_at(i, 0) is color else 1
        if d.color_at(i, k + 2) is not color or d.color_at(i, k + 1) is color:
            raise AssertionError(f"crossing {i} does not meet two faces of each color")
        u, v = d.face_at(i, k), d.face_at(i, k + 2)
        edges.append(TaitEdge(min(u, v), max(u, v), W if d.signs[i] > 0 else R, i))
    return TaitGraph(color, verts, tuple(edges))


def consolidate(g: TaitGraph) -> ConsolidatedGraph:
    """Merge parallel edges, multiplying their weights."""
    weights: dict[tuple[int, int], Monomial2] = {}
    crossings: dict[tuple[int, int], tuple[int, ...]] = {}
    for e in g.edges:
        if e.u == e.v:
            raise ValueError(f"self-loop from crossing {e.crossing}: nugatory crossing")
        key = (e.u, e.v)
        weights[key] = weights[key] * e.weight if key in weights else e.weight
        crossings[key] = crossings.get(key, ()) + (e.crossing,)
    return ConsolidatedGraph(g.vertices, weights, crossings)


def double(g: ConsolidatedGraph) -> DoubledDigraph:
    """Replace each edge by two opposite arcs carrying the same weight."""
    arcs = []
    for (u, v), m in sorted(g.edges.items()):
        arcs.append((u, v, m))
        arcs.append((v, u, m))
    return DoubledDigraph(tuple(g.vertices), tuple(arcs))
