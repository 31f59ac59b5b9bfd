"""Forbidden ordered patterns and the search for pattern-free vertex orderings.

An ordered pattern on positions ``1..k`` lists the position pairs that must be
edges; every other pair must be a non-edge. A coloured pattern additionally
fixes the bipartition class of each position, up to swapping the classes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graphs import (
    Graph,
    LabeledGraph,
    Labeling,
    check_labeling,
    induced_subgraph,
    labeling_from_order,
    order_from_labeling,
)

Bipartition = tuple[frozenset[int], frozenset[int]]


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class OrderedPattern:
    name: str
    k: int
    edges: frozenset[tuple[int, int]]
    # class of each position, 0 for A and 1 for B; None if uncoloured
    colors: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.k < 2:
            raise PatternError("patterns need at least two positions")
        for i, j in self.edges:
            if not 1 <= i < j <= self.k:
                raise PatternError(f"bad pattern edge {(i, j)}")
        if self.colors is not None and len(self.colors) != self.k:
            raise PatternError("one colour per position required")

    def is_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges


def _pattern(name, k, edges, colors=None):
    return OrderedPattern(name, k, frozenset(edges), colors)


I3 = _pattern("I3", 3, [(1, 2), (2, 3)])
J4 = _pattern("J4", 4, [(1, 3), (2, 4)])
Q4 = _pattern("Q4", 4, [(1, 4), (2, 3)])

# forbidden in orderings of complements of simple-triangle graphs
TRIANGLE_FAMILY: tuple[OrderedPattern, ...] = (I3, J4, Q4)
J4Q4_FAMILY: tuple[OrderedPattern, ...] = (J4, Q4)
# forbidden in orderings of interval containment bigraphs (A = X, B = Y, or swapped)
ICB_FAMILY: tuple[OrderedPattern, ...] = (
    _pattern("ICB-a", 4, [(1, 3), (2, 4)], (0, 0, 1, 1)),
    _pattern("ICB-b", 4, [(1, 4), (2, 3)], (0, 1, 0, 1)),
    _pattern("ICB-c", 4, [(1, 4), (2, 3)], (0, 0, 1, 1)),
)

FAMILIES = {"i3j4q4": TRIANGLE_FAMILY, "j4q4": J4Q4_FAMILY, "icb": ICB_FAMILY}


def _sides(coloring: Bipartition | None, n: int, family: Sequence[OrderedPattern]) -> list[int] | None:
    if coloring is None:
        if any(p.colors is not None for p in family):
            raise PatternError("coloured pattern requires a bipartition")
        return None
    xs, ys = coloring
    if xs & ys or (xs | ys) != frozenset(range(n)):
        raise PatternError("coloring is not a partition of the vertex set")
    return [0 if v in xs else 1 for v in range(n)]


def _matches(g: Graph, combo: Sequence[int], p: OrderedPattern, side: list[int] | None) -> bool:
    for (i, a), (j, b) in combinations(enumerate(combo, start=1), 2):
        if g.has_edge(a, b) != ((i, j) in p.edges):
            return False
    if p.colors is not None:
        flip = side[combo[0]] ^ p.colors[0]
        return all(side[c] ^ flip == col for c, col in zip(combo, p.colors))
    return True


def find_occurrence(g: Graph, labels: Labeling, family: Sequence[OrderedPattern],
                    coloring: Bipartition | None = None) -> tuple[OrderedPattern, tuple[int, ...]] | None:
    """First occurrence of a pattern of ``family`` in the ordering given by ``labels``.

    Returns the pattern and the occurrence as an increasing tuple of labels.
    """
    side = _sides(coloring, g.n, family)
    order = order_from_labeling(labels)
    for p in family:
        for combo in combinations(order, p.k):
            if _matches(g, combo, p, side):
                return p, tuple(labels[v] for v in combo)
    return None


def contains_pattern(g: Graph, labels: Labeling, p: OrderedPattern,
                     coloring: Bipartition | None = None) -> tuple[int, ...] | None:
    hit = find_occurrence(g, labels, (p,), coloring)
    return None if hit is None else hit[1]


# -- labeled-graph view ---------------------------------------------------------

def forbidden_labeled_subgraph(h: LabeledGraph, family: Sequence[OrderedPattern]) -> tuple[str, tuple[int, ...]] | None:
    """Search induced subgraphs whose reduced form is a member of ``family``.

    Works on the induced subgraph and its rank relabeling directly, not on
    the ordered scan, so the two views can be checked against each other.
    """
    if any(p.colors is not None for p in family):
        raise PatternError("labeled-graph view only covers uncoloured patterns")
    targets = {}
    for p in family:
        targets.setdefault(p.k, []).append(p)
    g = h.graph
    for k in sorted(targets):
        for subset in combinations(range(g.n), k):
            rank = {x: i for i, x in enumerate(sorted(h.labels[v] for v in subset), start=1)}
            red_edges = frozenset(
                tuple(sorted((rank[h.labels[a]], rank[h.labels[b]])))
                for a, b in combinations(subset, 2) if g.has_edge(a, b)
            )
            for p in targets[k]:
                if red_edges == p.edges:
                    return p.name, tuple(sorted(h.labels[v] for v in subset))
    return None


def labeling_is_free(h: LabeledGraph, family: Sequence[OrderedPattern] = TRIANGLE_FAMILY) -> tuple[bool, tuple[int, ...] | None]:
    hit = find_occurrence(h.graph, check_labeling(h.labels, h.graph.n), family)
    return (True, None) if hit is None else (False, hit[1])


# -- search -----------------------------------------------------------------

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_sum(p: OrderedPattern) -> bool:
    """True if the positions split into a prefix and suffix with no edge across."""
    return any(all(not (i <= t < j) for i, j in p.edges) for t in range(1, p.k))


class _Search:
    """Depth-first search over prefixes with forward checking on bitmasks.

    After each placement every unplaced vertex ``w`` is tested for pattern
    occurrences ending in ``(newest, w)``. Occurrences ending in ``w`` can
    only grow with the prefix, so a blocked ``w`` prunes the branch, and
    since every occurrence is caught this way no other check is needed.
    """

    def __init__(self, g: Graph, family, side, x_first):
        self.g = g
        self.family = tuple(family)
        self.x_first = x_first
        n = g.n
        full = (1 << n) - 1
        self.adj = [sum(1 << u for u in g.adj[v]) for v in range(n)]
        self.nonadj = [full & ~self.adj[v] & ~(1 << v) for v in range(n)]
        self.side = side
        if side is not None:
            ymask = sum(1 << v for v in range(n) if side[v])
            self.side_mask = (full & ~ymask, ymask)
        self.prefix: list[int] = []
        self.placed = 0
        self.before = [0] * n
        self.candidates = sorted(range(n), key=lambda v: (g.degree(v), v))

    def _rel(self, x: int, edge: bool) -> int:
        return self.adj[x] if edge else self.nonadj[x]

    def _completes(self, w: int) -> bool:
        v = self.prefix[-1]
        earlier = self.before[v]
        vw_edge = bool(self.adj[v] >> w & 1)
        for p in self.family:
            k = p.k
            if vw_edge != p.is_edge(k - 1, k):
                continue
            if p.colors is not None:
                flip = self.side[w] ^ p.colors[k - 1]
                if self.side[v] ^ flip != p.colors[k - 2]:
                    continue
            conds = []
            for i in range(1, k - 1):
                m = earlier & self._rel(v, p.is_edge(i, k - 1)) & self._rel(w, p.is_edge(i, k))
                if p.colors is not None:
                    m &= self.side_mask[p.colors[i - 1] ^ flip]
                if not m:
                    break
                conds.append(m)
            else:
                if self._fill(p, conds, k - 2, earlier, []):
                    return True
        return False

    def _fill(self, p, conds, i, allowed, chosen) -> bool:
        # positions are filled from k-2 down to 1, each strictly before the previous pick
        if i == 0:
            return True
        m = conds[i - 1] & allowed
        for pos, c in chosen:
            m &= self._rel(c, p.is_edge(i, pos))
        if i == 1:
            return m != 0
        for c in _bits(m):
            chosen.append((i, c))
            if self._fill(p, conds, i - 1, self.before[c], chosen):
                chosen.pop()
                return True
            chosen.pop()
        return False

    def _allowed(self, v: int) -> bool:
        if self.x_first and self.side[v] == 1:
            return self.adj[v] & ~self.placed == 0
        return True

    def run(self) -> list[int] | None:
        n = self.g.n
        if len(self.prefix) == n:
            return list(self.prefix)
        for v in self.candidates:
            if self.placed >> v & 1 or not self._allowed(v):
                continue
            self.before[v] = self.placed
            self.prefix.append(v)
            self.placed |= 1 << v
            if not any(not self.placed >> w & 1 and self._completes(w) for w in range(n)):
                found = self.run()
                if found is not None:
                    return found
            self.prefix.pop()
            self.placed &= ~(1 << v)
        return None


def find_pattern_free_ordering(g: Graph, family: Sequence[OrderedPattern],
                               coloring: Bipartition | None = None,
                               x_first: bool = False) -> Labeling | None:
    """Exact search for a labeling whose ordering avoids every pattern in ``family``.

    With ``x_first`` every edge must have its X endpoint (``coloring[0]``)
    first. Returns ``None`` only after exhausting the search space.

    When no pattern splits into an edge-free prefix and suffix, placing
    connected components one after another cannot create an occurrence, so
    components are searched separately (smallest vertex first) and joined.
    """
    if x_first and coloring is None:
        raise PatternError("x_first requires a bipartition")
    side = _sides(coloring, g.n, family)
    if g.n == 0:
        return ()
    comps = g.components()
    if len(comps) == 1 or any(_is_sum(p) for p in family):
        comps = [list(range(g.n))]
    order: list[int] = []
    for comp in comps:
        sub, back = induced_subgraph(g, comp)
        sub_side = None if side is None else [side[v] for v in back]
        found = _Search(sub, family, sub_side, x_first).run()
        if found is None:
            return None
        order.extend(back[v] for v in found)
    labels = labeling_from_order(order)
    if find_occurrence(g, labels, family, coloring) is not None:
        raise AssertionError("search returned an ordering containing a forbidden pattern")
    if x_first and violates_x_first(g, labels, coloring) is not None:
        raise AssertionError("search returned an ordering with a Y endpoint first")
    return labels


def violates_x_first(g: Graph, labels: Labeling, coloring: Bipartition) -> tuple[int, int] | None:
    """An edge (as a label pair) whose Y endpoint precedes its X endpoint."""
    xs, _ = coloring
    for a, b in g.edges():
        x, y = (a, b) if a in xs else (b, a)
        if x not in xs or y in xs:
            raise PatternError("coloring is not a bipartition of the graph")
        if labels[y] < labels[x]:
            return labels[x], labels[y]
    return None
