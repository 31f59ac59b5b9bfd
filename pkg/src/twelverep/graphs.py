"""Simple undirected graphs, labelings and the fixture graphs used throughout.

Vertices are ``0..n-1``. Labels are ``1..n`` and a labeling is stored as a
tuple ``labels`` with ``labels[v]`` the label of vertex ``v``; reading the
vertices by increasing label gives the corresponding vertex ordering.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Point = tuple[int, int]
Labeling = tuple[int, ...]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency size does not match n")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges_1based(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls.from_edges(n, ((u - 1, v - 1) for u, v in edges))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_set_1based(self) -> frozenset[tuple[int, int]]:
        return frozenset((u + 1, v + 1) for u, v in self.edges())

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in sorted(self.adj[v]):
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and len(self.components()) == 1


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - g.adj[v] - {v} for v in range(g.n)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices`` plus the map new index -> old vertex."""
    keep = tuple(sorted(set(vertices)))
    if any(not 0 <= v < g.n for v in keep):
        raise GraphError("vertex set is not a subset of V(G)")
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(frozenset(index[w] for w in g.adj[v] if w in index) for v in keep)
    return Graph(len(keep), adj), keep


def check_labeling(labels: Sequence[int], n: int) -> Labeling:
    labels = tuple(int(x) for x in labels)
    if len(labels) != n or sorted(labels) != list(range(1, n + 1)):
        raise GraphError(f"labeling must be a bijection onto 1..{n}")
    return labels


def identity_labeling(n: int) -> Labeling:
    return tuple(range(1, n + 1))


def labeling_from_order(order: Sequence[int]) -> Labeling:
    """Labeling giving label i+1 to ``order[i]``."""
    labels = [0] * len(order)
    for i, v in enumerate(order):
        labels[v] = i + 1
    return check_labeling(labels, len(order))


def order_from_labeling(labels: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(range(len(labels)), key=lambda v: labels[v]))


@dataclass(frozen=True)
class LabeledGraph:
    """A graph with distinct positive labels; ``standard`` when they are exactly 1..n."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise GraphError("one label per vertex required")
        if len(set(self.labels)) != len(self.labels) or any(x < 1 for x in self.labels):
            raise GraphError("labels must be distinct positive integers")

    @property
    def standard(self) -> bool:
        return sorted(self.labels) == list(range(1, self.graph.n + 1))

    def vertex_of_label(self) -> dict[int, int]:
        return {x: v for v, x in enumerate(self.labels)}

    def labeled_edges(self) -> frozenset[tuple[int, int]]:
        """Edges as label pairs ``(a, b)`` with a < b."""
        return frozenset(
            tuple(sorted((self.labels[u], self.labels[v]))) for u, v in self.graph.edges()
        )


def reduced_labeled(h: LabeledGraph) -> LabeledGraph:
    rank = {x: i for i, x in enumerate(sorted(h.labels), start=1)}
    return LabeledGraph(h.graph, tuple(rank[x] for x in h.labels))


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-colour each component, its lowest vertex going to X; ``None`` if not bipartite."""
    side = [-1] * g.n
    for comp in g.components():
        root = comp[0]
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    xs = frozenset(v for v in range(g.n) if side[v] == 0)
    return xs, frozenset(range(g.n)) - xs


# -- grid graphs -------------------------------------------------------------

@dataclass(frozen=True)
class GridGraph:
    cells: tuple[Point, ...]
    graph: Graph


def grid_from_points(points: Iterable[Point]) -> GridGraph:
    cells = tuple((int(x), int(y)) for x, y in points)
    if len(set(cells)) != len(cells):
        raise GraphError("duplicate grid points")
    index = {p: i for i, p in enumerate(cells)}
    edges = []
    for i, (x, y) in enumerate(cells):
        for q in ((x + 1, y), (x, y + 1)):
            if q in index:
                edges.append((i, index[q]))
    return GridGraph(cells, Graph.from_edges(len(cells), edges))


def rectangle(a: int, b: int) -> list[Point]:
    return [(x, y) for y in range(a) for x in range(b)]


# -- small families ----------------------------------------------------------

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [])


def star(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def spider(legs: Sequence[int]) -> Graph:
    """Centre 0 with pendant paths of the given lengths."""
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph.from_edges(nxt, edges)


def t3() -> Graph:
    return spider((3, 3, 3))


# Grid embeddings of the forbidden induced subgraphs for 12-representable grid graphs.
FORBIDDEN_GRID_POINTS: dict[str, tuple[Point, ...]] = {
    # centre with three legs of length 3
    "T3": ((0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (2, 0), (3, 0), (-1, 0), (-2, 0), (-3, 0)),
    # 3x3 block whose middle column is shifted up by one and extended by two
    "column_fork": ((-1, 0), (-1, 1), (-1, 2), (0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 1), (1, 2)),
    # two 5-paths joined by rungs at their last three vertices
    "ladder_tails": ((0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (3, 2), (2, 2), (1, 2), (1, 3), (1, 4)),
    # one 4-cycle at a centre with legs of length 2, 3, 3
    "square_spider": ((0, 0), (0, -1), (0, -2), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (0, 3), (1, 1)),
    # path of 7 with a pendant 2-path above the middle and a 3-path of rungs below
    "crossbar": ((0, 2), (0, 1), (-3, 0), (-2, 0), (-1, 0), (0, 0), (1, 0), (2, 0), (3, 0),
                 (-1, -1), (0, -1), (1, -1)),
    # 3x3 block minus a corner (the graph G1) plus a pendant at the far corner
    "X": ((1, 1), (1, 0), (1, -1), (0, -1), (0, 0), (0, 1), (-1, 1), (-1, 0), (2, 1)),
}


def forbidden_grid_fixtures() -> dict[str, GridGraph]:
    return {name: grid_from_points(pts) for name, pts in FORBIDDEN_GRID_POINTS.items()}


# G1: bipartite graph with X = {1, 2, 4, 6} and Y = {3, 5, 7, 8}.
G1_EDGES = ((1, 3), (1, 5), (1, 7), (1, 8), (2, 3), (2, 5), (4, 5), (4, 8), (6, 7), (6, 8))
# G1 drawn on the grid, indexed by label: 1 at the centre of a 3x3 block missing one corner.
G1_POINTS = ((0, 0), (-1, 1), (-1, 0), (1, 1), (0, 1), (1, -1), (0, -1), (1, 0))
# G2: six-vertex graph whose complement is 12-representable with the identity labeling.
G2_EDGES = ((1, 2), (2, 3), (2, 5), (3, 5), (3, 6), (4, 5), (4, 6))


def g1() -> LabeledGraph:
    return LabeledGraph(Graph.from_edges_1based(8, G1_EDGES), identity_labeling(8))


def g2() -> LabeledGraph:
    return LabeledGraph(Graph.from_edges_1based(6, G2_EDGES), identity_labeling(6))


def co_g2() -> LabeledGraph:
    return LabeledGraph(complement(g2().graph), identity_labeling(6))
