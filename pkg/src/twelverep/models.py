"""Geometric models behind 12-representants.

Interval containment models describe bipartite graphs: ``x`` in X is adjacent
to ``y`` in Y exactly when the interval of ``x`` contains the interval of
``y``. Simple-triangle models describe intersection graphs of triangles with
an apex on an upper line and a base interval on a lower line.

Both kinds of model turn into words of length 2n by reading endpoints, and
both can be built from a pattern-free vertex ordering by topologically
sorting a digraph of endpoint constraints.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from numbers import Real
from typing import Callable, Hashable, Iterable, Mapping

from .graphs import Graph, Labeling, check_labeling, order_from_labeling
from .patterns import Bipartition, violates_x_first
from .words import Word


class ModelError(ValueError):
    pass


class OrderingError(ModelError):
    """Raised when an ordering cannot be realised by a model."""


def _check_vertices(keys: Iterable[int], what: str) -> int:
    keys = sorted(keys)
    if keys != list(range(len(keys))):
        raise ModelError(f"{what} must be keyed by vertices 0..n-1")
    return len(keys)


def _check_distinct(points: list[Real], what: str) -> None:
    if len(set(points)) != len(points):
        raise ModelError(f"{what} are not pairwise distinct")


@dataclass(frozen=True)
class IntervalModel:
    intervals: Mapping[int, tuple[Real, Real]]
    xs: frozenset[int]
    ys: frozenset[int]

    def __post_init__(self):
        n = _check_vertices(self.intervals, "intervals")
        for v, (left, right) in self.intervals.items():
            if not left < right:
                raise ModelError(f"interval of vertex {v} has left >= right")
        if self.xs & self.ys or (self.xs | self.ys) != frozenset(range(n)):
            raise ModelError("X and Y must partition the vertex set")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def contains(self, x: int, y: int) -> bool:
        lx, rx = self.intervals[x]
        ly, ry = self.intervals[y]
        return lx < ly and ry < rx

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, [
            (x, y) for x in sorted(self.xs) for y in sorted(self.ys) if self.contains(x, y)
        ])

    def check_distinct(self) -> None:
        _check_distinct([e for iv in self.intervals.values() for e in iv], "interval endpoints")


@dataclass(frozen=True)
class TriangleModel:
    apex: Mapping[int, Real]
    base: Mapping[int, tuple[Real, Real]]

    def __post_init__(self):
        n = _check_vertices(self.apex, "apexes")
        if _check_vertices(self.base, "bases") != n:
            raise ModelError("apex and base vertex sets differ")
        _check_distinct(list(self.apex.values()), "apexes")
        for v, (left, right) in self.base.items():
            if not left < right:
                raise ModelError(f"base of vertex {v} has left >= right")

    @property
    def n(self) -> int:
        return len(self.apex)

    def intersects(self, u: int, v: int) -> bool:
        if self.apex[u] > self.apex[v]:
            u, v = v, u
        # apex order fixed: the triangles miss each other only if u's base is wholly left of v's
        return not self.base[u][1] < self.base[v][0]

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, [
            (u, v) for u, v in combinations(range(self.n), 2) if self.intersects(u, v)
        ])

    def check_distinct(self) -> None:
        _check_distinct([e for iv in self.base.values() for e in iv], "base endpoints")


# -- validation ---------------------------------------------------------------

def validate_icb(g: Graph, m: IntervalModel) -> tuple[bool, tuple[int, int] | None]:
    """Check that ``m`` is an interval containment model of ``g``; witness is a vertex pair."""
    if g.n != m.n:
        raise ModelError("model and graph have different vertex counts")
    for u, v in combinations(range(g.n), 2):
        if (u in m.xs) == (v in m.xs):
            expected = False
        else:
            x, y = (u, v) if u in m.xs else (v, u)
            expected = m.contains(x, y)
        if g.has_edge(u, v) != expected:
            return False, (u, v)
    return True, None


def validate_triangle(g: Graph, m: TriangleModel) -> tuple[bool, tuple[int, int] | None]:
    if g.n != m.n:
        raise ModelError("model and graph have different vertex counts")
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v) != m.intersects(u, v):
            return False, (u, v)
    return True, None


# -- model to word --------------------------------------------------------------

def _rank_labels(keyed: Mapping[int, Real]) -> Labeling:
    labels = [0] * len(keyed)
    for i, v in enumerate(sorted(keyed, key=keyed.__getitem__), start=1):
        labels[v] = i
    return tuple(labels)


def icb_to_representant(m: IntervalModel) -> tuple[Labeling, Word]:
    """Label by left endpoints and return ``(labels, pi_y + pi_r + pi_x)``.

    ``pi_r`` reads labels by increasing right endpoint; ``pi_x`` and
    ``pi_y`` list the labels of X and of Y in increasing order.
    """
    m.check_distinct()
    labels = _rank_labels({v: iv[0] for v, iv in m.intervals.items()})
    by_right = sorted(m.intervals, key=lambda v: m.intervals[v][1])
    pi_r = [labels[v] for v in by_right]
    pi_x = sorted(labels[v] for v in m.xs)
    pi_y = sorted(labels[v] for v in m.ys)
    return labels, tuple(pi_y + pi_r + pi_x)


def triangle_to_representant(m: TriangleModel) -> tuple[Labeling, Word]:
    """Label by apex order; the word reads base endpoints from right to left.

    The word 12-represents the complement of the model's graph.
    """
    m.check_distinct()
    labels = _rank_labels(m.apex)
    ends = [(e, v) for v, iv in m.base.items() for e in iv]
    ends.sort(reverse=True)
    return labels, tuple(labels[v] for _, v in ends)


# -- ordering to model ------------------------------------------------------------

def topological_order(nodes: Iterable[Hashable], arcs: Iterable[tuple[Hashable, Hashable]],
                      key: Callable[[Hashable], object]) -> list | None:
    """Kahn's algorithm taking the smallest ``key`` among available nodes; ``None`` on a cycle."""
    nodes = list(nodes)
    succ: dict = {v: [] for v in nodes}
    indeg: dict = {v: 0 for v in nodes}
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    heap = [(key(v), v) for v in nodes if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, v = heapq.heappop(heap)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, (key(w), w))
    return out if len(out) == len(nodes) else None


def triangle_constraints(g: Graph, labels: Labeling) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Arcs between base endpoints ``(v, 0)`` (left) and ``(v, 1)`` (right).

    For ``u`` before ``v``: an edge of ``g`` forces u's base wholly left of
    v's (disjoint triangles in the complement); a non-edge forces overlap.
    """
    arcs = [((v, 0), (v, 1)) for v in range(g.n)]
    order = order_from_labeling(labels)
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if g.has_edge(u, v):
                arcs.append(((u, 1), (v, 0)))
            else:
                arcs.append(((v, 0), (u, 1)))
    return arcs


def triangle_constraints_acyclic(g: Graph, labels: Labeling) -> bool:
    nodes = [(v, s) for v in range(g.n) for s in (0, 1)]
    return topological_order(nodes, triangle_constraints(g, labels), key=lambda node: node) is not None


def ordering_to_triangle_model(g: Graph, labels: Labeling) -> TriangleModel:
    """Triangle model of the complement of ``g`` whose apex order is ``labels``."""
    labels = check_labeling(labels, g.n)
    nodes = [(v, s) for v in range(g.n) for s in (0, 1)]
    topo = topological_order(nodes, triangle_constraints(g, labels),
                             key=lambda node: (labels[node[0]], node[1]))
    if topo is None:
        raise OrderingError("ordering not pattern-free")
    pos = {node: i for i, node in enumerate(topo, start=1)}
    return TriangleModel(
        apex={v: labels[v] for v in range(g.n)},
        base={v: (pos[(v, 0)], pos[(v, 1)]) for v in range(g.n)},
    )


def ordering_to_icb_model(g: Graph, coloring: Bipartition, labels: Labeling) -> IntervalModel:
    """Interval containment model of ``g`` with left endpoints in the order ``labels``.

    Needs every edge's X endpoint to come first. Right endpoints follow all
    left endpoints, ordered by a topological sort of containment constraints.
    """
    labels = check_labeling(labels, g.n)
    xs, ys = coloring
    bad = violates_x_first(g, labels, coloring)
    if bad is not None:
        raise OrderingError(f"edge {bad} has its Y endpoint first")
    arcs = []
    for x in xs:
        for y in ys:
            if labels[x] < labels[y]:
                arcs.append((y, x) if g.has_edge(x, y) else (x, y))
    topo = topological_order(range(g.n), arcs, key=lambda v: labels[v])
    if topo is None:
        raise OrderingError("ordering not pattern-free")
    right = {v: g.n + i for i, v in enumerate(topo, start=1)}
    return IntervalModel({v: (labels[v], right[v]) for v in range(g.n)}, frozenset(xs), frozenset(ys))
