"""Simple directed cycles of doubled checkerboard graphs.

:func:`simple_directed_cycles` is Johnson's circuit-finding algorithm
(output-sensitive, ``O((V + E)(C + 1))``).  :func:`oracle_cycle_sum` recomputes
the same polynomial along an unrelated route, by brute-force search for
undirected cycles in the consolidated graph, and exists to cross-check it.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .poly import Monomial2, Poly2
from .tait import ConsolidatedGraph, DoubledDigraph

__all__ = [
    "DirectedCycle",
    "CycleBudgetExceeded",
    "DEFAULT_BUDGET",
    "simple_directed_cycles",
    "cycle_sum",
    "oracle_cycle_sum",
]

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "WRP_CYCLE_BUDGET"


class CycleBudgetExceeded(RuntimeError):
    pass


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class DirectedCycle:
    """A simple directed cycle, rotated to start at its smallest vertex."""

    vertices: tuple[int, ...]
    weight: Monomial2

    def __len__(self):
        return len(self.vertices)

    def reversed(self) -> DirectedCycle:
        v = self.vertices
        return DirectedCycle((v[0],) + tuple(reversed(v[1:])), self.weight)

    def __str__(self):
        path = " -> ".join(map(str, self.vertices + self.vertices[:1]))
        return f"{path}  {self.weight}"


def _strong_component_of(start, allowed, succ) -> set:
    """Vertices of the strongly connected component of ``start`` within ``allowed``."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    counter = 0
    result: set = set()
    # iterative Tarjan from `start`
    work = [(start, iter(succ.get(start, ())))]
    index[start] = low[start] = counter
    counter += 1
    stack.append(start)
    on_stack.add(start)
    while work:
        v, it = work[-1]
        advanced = False
        for w, _ in it:
            if w not in allowed:
                continue
            if w not in index:
                index[w] = low[w] = counter
                counter += 1
                stack.append(w)
                on_stack.add(w)
                work.append((w, iter(succ.get(w, ()))))
                advanced = True
                break
            if w in on_stack:
                low[v] = min(low[v], index[w])
        if advanced:
            continue
        work.pop()
        if work:
            parent = work[-1][0]
            low[parent] = min(low[parent], low[v])
        if low[v] == index[v]:
            comp = set()
            while True:
                x = stack.pop()
                on_stack.discard(x)
                comp.add(x)
                if x == v:
                    break
            if start in comp:
                result = comp
    return result


def simple_directed_cycles(g: DoubledDigraph, budget: int | None = None) -> Iterator[DirectedCycle]:
    """Yield every simple directed cycle of ``g`` exactly once.

    Cycles of length 2 (an arc and its twin) are included; a cycle and its
    reversal are distinct.  Raises :class:`CycleBudgetExceeded` once more
    than ``budget`` cycles have been produced.
    """
    if budget is None:
        budget = default_budget()
    succ: dict[int, list[tuple[int, Monomial2]]] = defaultdict(list)
    for u, v, m in g.arcs:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        succ[u].append((v, m))
    for u in succ:
        succ[u].sort(key=lambda t: t[0])

    emitted = 0
    order = sorted(g.vertices)
    for idx, s in enumerate(order):
        allowed = set(order[idx:])
        comp = _strong_component_of(s, allowed, succ)
        if len(comp) < 2:
            continue
        blocked = {s}
        block_map: dict[int, set[int]] = defaultdict(set)
        path = [s]
        weights = [Monomial2(0, 0)]
        nbr_iters = [iter(succ[s])]
        closed_here = [False]

        def unblock(v):
            todo = [v]
            while todo:
                x = todo.pop()
                if x in blocked:
                    blocked.discard(x)
                    todo.extend(block_map[x])
                    block_map[x].clear()

        while path:
            v = path[-1]
            advanced = False
            for w, m in nbr_iters[-1]:
                if w not in comp:
                    continue
                if w == s:
                    emitted += 1
                    if emitted > budget:
                        raise CycleBudgetExceeded(f"more than {budget} cycles")
                    yield DirectedCycle(tuple(path), weights[-1] * m)
                    closed_here[-1] = True
                elif w not in blocked:
                    path.append(w)
                    weights.append(weights[-1] * m)
                    nbr_iters.append(iter(succ[w]))
                    closed_here.append(False)
                    blocked.add(w)
                    advanced = True
                    break
            if advanced:
                continue
            # v exhausted
            found = closed_here.pop()
            nbr_iters.pop()
            weights.pop()
            path.pop()
            if found:
                unblock(v)
            else:
                for w, _ in succ[v]:
                    if w in comp:
                        block_map[w].add(v)
            if closed_here:
                closed_here[-1] = closed_here[-1] or found


def cycle_sum(g: DoubledDigraph, budget: int | None = None) -> Poly2:
    """Sum over all simple directed cycles of the product of arc weights."""
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for cyc in simple_directed_cycles(g, budget):
        counts[(cyc.weight.deg_w, cyc.weight.deg_r)] += 1
    return Poly2(counts)


ORACLE_MAX_VERTICES = 20


def undirected_cycles(g: ConsolidatedGraph) -> list[tuple[tuple[int, ...], Monomial2]]:
    """All simple cycles of length >= 3 of a simple graph, each listed once.

    Plain depth-first search: a cycle is recorded from its smallest vertex,
    and only in the direction where the second vertex is smaller than the
    last, which removes the mirror-image duplicate.
    """
    adj: dict[int, dict[int, Monomial2]] = defaultdict(dict)
    for (u, v), m in g.edges.items():
        adj[u][v] = m
        adj[v][u] = m
    found = []

    def dfs(start, path, weight, on_path):
        last = path[-1]
        for nxt, m in adj[last].items():
            if nxt == start and len(path) >= 3 and path[1] < path[-1]:
                found.append((tuple(path), weight * m))
            elif nxt > start and nxt not in on_path:
                on_path.add(nxt)
                path.append(nxt)
                dfs(start, path, weight * m, on_path)
                path.pop()
                on_path.discard(nxt)

    for s in sorted(g.vertices):
        dfs(s, [s], Monomial2(0, 0), {s})
    return found


def oracle_cycle_sum(g: ConsolidatedGraph) -> Poly2:
    """``sum_e weight(e)^2 + 2 * sum over undirected cycles of their weight``."""
    if len(g.vertices) > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle refuses graphs with more than {ORACLE_MAX_VERTICES} vertices")
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for m in g.edges.values():
        counts[(2 * m.deg_w, 2 * m.deg_r)] += 1
    for _, m in undirected_cycles(g):
        counts[(m.deg_w, m.deg_r)] += 2
    return Poly2(counts)
