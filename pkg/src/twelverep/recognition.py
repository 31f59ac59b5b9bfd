"""Deciders for 12-representability with certificates and witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graphs import Graph, GridGraph, LabeledGraph, Labeling, bipartition, forbidden_grid_fixtures
from .models import (
    IntervalModel,
    TriangleModel,
    icb_to_representant,
    ordering_to_icb_model,
    ordering_to_triangle_model,
    triangle_to_representant,
    validate_icb,
)
from .patterns import ICB_FAMILY, TRIANGLE_FAMILY, find_pattern_free_ordering
from .words import Word, represents_witness


class CertificateError(RuntimeError):
    """A constructed certificate failed verification; always a bug, never an answer."""


@dataclass
class Decision:
    answer: bool
    labels: Labeling | None = None
    model: IntervalModel | TriangleModel | None = None
    word: Word | None = None
    witness: dict[str, Any] = field(default_factory=dict)
    # True when a negative answer rests on exhausting the ordering search
    exhausted: bool = False

    def __bool__(self) -> bool:
        return self.answer


def _certify(g: Graph, labels: Labeling, word: Word) -> None:
    bad = represents_witness(word, LabeledGraph(g, labels))
    if bad is not None:
        raise CertificateError(f"constructed word does not 12-represent the graph, pair {bad}")


def is_12_representable(g: Graph) -> Decision:
    labels = find_pattern_free_ordering(g, TRIANGLE_FAMILY)
    if labels is None:
        return Decision(False, exhausted=True)
    model = ordering_to_triangle_model(g, labels)
    model_labels, word = triangle_to_representant(model)
    if model_labels != labels:
        raise CertificateError("triangle model relabeled the graph")
    _certify(g, labels, word)
    return Decision(True, labels, model, word)


def is_12_representable_bipartite(g: Graph) -> Decision:
    coloring = bipartition(g)
    if coloring is None:
        raise ValueError("graph is not bipartite")
    labels = find_pattern_free_ordering(g, ICB_FAMILY, coloring, x_first=True)
    if labels is None:
        return Decision(False, exhausted=True)
    model = ordering_to_icb_model(g, coloring, labels)
    ok, bad = validate_icb(g, model)
    if not ok:
        raise CertificateError(f"interval model does not represent the graph, pair {bad}")
    model_labels, word = icb_to_representant(model)
    _certify(g, model_labels, word)
    return Decision(True, model_labels, model, word)


# -- induced structure ------------------------------------------------------------

def contains_induced(g: Graph, h: Graph) -> dict[int, int] | None:
    """An induced embedding of ``h`` into ``g`` as a map h-vertex -> g-vertex."""
    if h.n > g.n:
        return None
    if h.n == 0:
        return {}
    # visit h connectedly so most vertices get candidates from an image's neighbourhood
    order: list[int] = []
    seen = set()
    for root in sorted(range(h.n), key=lambda v: -h.degree(v)):
        if root in seen:
            continue
        seen.add(root)
        order.append(root)
        i = len(order) - 1
        while i < len(order):
            for w in sorted(h.adj[order[i]], key=lambda v: -h.degree(v)):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
            i += 1
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        hv = order[i]
        anchors = [image[w] for w in h.adj[hv] if w in image]
        pool = g.adj[anchors[0]] if anchors else range(g.n)
        for gv in pool:
            if gv in used or g.degree(gv) < h.degree(hv):
                continue
            if all(g.has_edge(gv, image[w]) == h.has_edge(hv, w) for w in image):
                image[hv] = gv
                used.add(gv)
                if extend(i + 1):
                    return True
                del image[hv]
                used.discard(gv)
        return False

    return dict(image) if extend(0) else None


def find_long_induced_cycle(g: Graph, minlen: int) -> list[int] | None:
    """First chordless cycle with at least ``minlen`` vertices, smallest vertex first."""
    adj = g.adj
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def grow() -> list[int] | None:
            last = path[-1]
            for w in sorted(adj[last]):
                if w <= s or w in on_path:
                    continue
                if any(w in adj[p] for p in path[1:-1]):
                    continue
                if len(path) > 1 and s in adj[w]:
                    if len(path) >= 2 and len(path) + 1 >= minlen:
                        return path + [w]
                    continue
                path.append(w)
                on_path.add(w)
                found = grow()
                path.pop()
                on_path.discard(w)
                if found:
                    return found
            return None

        found = grow()
        if found:
            return found
    return None


# -- special classes -----------------------------------------------------------------

def grid_12_representable(gg: GridGraph) -> Decision:
    g = gg.graph
    cyc = find_long_induced_cycle(g, 8)
    if cyc is not None:
        return Decision(False, witness={"kind": "cycle", "vertices": cyc,
                                        "cells": [gg.cells[v] for v in cyc]})
    for name, fixture in forbidden_grid_fixtures().items():
        emb = contains_induced(g, fixture.graph)
        if emb is not None:
            verts = [emb[i] for i in range(fixture.graph.n)]
            return Decision(False, witness={"kind": "subgraph", "name": name, "vertices": verts,
                                            "cells": [gg.cells[v] for v in verts]})
    decision = is_12_representable_bipartite(g)
    if not decision.answer:
        raise CertificateError("grid graph has no forbidden subgraph but no interval model was found")
    return decision


def _branch_depths(g: Graph, centre: int) -> dict[int, int]:
    """For each neighbour of ``centre``: the largest distance from centre reached through it."""
    depths = {}
    for first in g.adj[centre]:
        best, frontier, prev, d = 1, [first], {first: centre}, 1
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.adj[v]:
                    if w != prev[v]:
                        prev[w] = v
                        nxt.append(w)
            if nxt:
                d += 1
                best = d
            frontier = nxt
        depths[first] = best
    return depths


def tree_12_representable(g: Graph) -> Decision:
    """A tree is 12-representable iff no vertex has three branches of depth >= 3."""
    if not g.is_tree():
        raise ValueError("graph is not a tree")
    for c in range(g.n):
        deep = sorted(v for v, d in _branch_depths(g, c).items() if d >= 3)
        if len(deep) >= 3:
            return Decision(False, witness={"kind": "T3", "centre": c, "branches": deep[:3]})
    decision = is_12_representable_bipartite(g)
    if not decision.answer:
        raise CertificateError("tree has no T3 but no interval model was found")
    return decision
