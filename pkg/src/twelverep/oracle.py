"""Brute-force deciders and exhaustive corpora for cross-validation.

Nothing here calls the search in :mod:`twelverep.patterns` or the word checks
in :mod:`twelverep.words`; orderings are enumerated with ``itertools`` and
words are tested with a direct two-letter scan.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Sequence

import networkx as nx

from .graphs import (
    Graph,
    LabeledGraph,
    Labeling,
    bipartition,
    grid_from_points,
    labeling_from_order,
    rectangle,
)
from .models import triangle_constraints_acyclic
from .patterns import (
    ICB_FAMILY,
    TRIANGLE_FAMILY,
    Bipartition,
    OrderedPattern,
    find_occurrence,
    find_pattern_free_ordering,
    forbidden_labeled_subgraph,
    violates_x_first,
)
from .recognition import (
    grid_12_representable,
    is_12_representable,
    is_12_representable_bipartite,
    tree_12_representable,
)
from .words import u_represents

MAX_ORDERING_N = 8
MAX_WORD_N = 5


class OracleRefusal(ValueError):
    pass


def brute_force_ordering(g: Graph, family: Sequence[OrderedPattern],
                         coloring: Bipartition | None = None, x_first: bool = False) -> Labeling | None:
    """First pattern-free ordering among all n! vertex orders, in lexicographic order."""
    if g.n > MAX_ORDERING_N:
        raise OracleRefusal(f"refusing n={g.n} > {MAX_ORDERING_N}")
    for order in permutations(range(g.n)):
        labels = labeling_from_order(order)
        if x_first and violates_x_first(g, labels, coloring) is not None:
            continue
        if find_occurrence(g, labels, family, coloring) is None:
            return labels
    return None


def _has_12_match(w: Sequence[int], x: int, y: int) -> bool:
    prev = None
    for a in w:
        if a == x or a == y:
            if prev is not None and prev < a:
                return True
            prev = a
    return False


def _distinct_arrangements(multiset: list[int]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for a in multiset:
        counts[a] = counts.get(a, 0) + 1
    out: list[int] = []
    letters = sorted(counts)

    def rec():
        if len(out) == len(multiset):
            yield tuple(out)
            return
        for a in letters:
            if counts[a]:
                counts[a] -= 1
                out.append(a)
                yield from rec()
                out.pop()
                counts[a] += 1

    yield from rec()


@lru_cache(maxsize=None)
def _word_table(n: int) -> dict[frozenset, tuple[int, ...]]:
    """Map each 12-representable labeled edge set on [n] to its first representant.

    Words use every letter once or twice and are visited by increasing length.
    """
    table: dict[frozenset, tuple[int, ...]] = {}
    letters = list(range(1, n + 1))
    for k in range(n + 1):
        for doubled in combinations(letters, k):
            for w in _distinct_arrangements(sorted(letters + list(doubled))):
                edges = frozenset(
                    (x, y) for x, y in combinations(letters, 2) if not _has_12_match(w, x, y)
                )
                table.setdefault(edges, w)
    return table


def brute_force_word(lg: LabeledGraph) -> tuple[int, ...] | None:
    """A 12-representant of this labeled graph with each letter at most twice, if any."""
    n = lg.graph.n
    if n > MAX_WORD_N:
        raise OracleRefusal(f"refusing n={n} > {MAX_WORD_N}")
    if n == 0:
        return ()
    return _word_table(n).get(lg.labeled_edges())


# -- corpora ---------------------------------------------------------------------------

def all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def atlas_graphs(max_n: int = 7) -> Iterator[Graph]:
    """One graph per isomorphism class on at most ``max_n`` (<= 7) vertices."""
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_n:
            yield Graph.from_edges(h.number_of_nodes(), h.edges())


def bipartite_graphs(n: int) -> Iterator[Graph]:
    """Every labeled bipartite graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))

    def rec(i: int, side: list[int], chosen: list[tuple[int, int]]):
        # vertices are 2-coloured as their first edge arrives; parity conflicts are skipped
        if i == len(pairs):
            yield Graph.from_edges(n, chosen)
            return
        yield from rec(i + 1, side, chosen)
        u, v = pairs[i]
        if _union(side, u, v):
            chosen.append((u, v))
            yield from rec(i + 1, side, chosen)
            chosen.pop()
        _undo(side)

    yield from rec(0, _UnionFind(n), [])


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.parity = [0] * n
        self.log: list[tuple] = []

    def find(self, v: int) -> tuple[int, int]:
        p = 0
        while self.parent[v] != v:
            p ^= self.parity[v]
            v = self.parent[v]
        return v, p


def _union(uf: _UnionFind, u: int, v: int) -> bool:
    ru, pu = uf.find(u)
    rv, pv = uf.find(v)
    if ru == rv:
        uf.log.append(None)
        return pu != pv
    uf.parent[rv] = ru
    uf.parity[rv] = pu ^ pv ^ 1
    uf.log.append(rv)
    return True


def _undo(uf: _UnionFind) -> None:
    rv = uf.log.pop()
    if rv is not None:
        uf.parent[rv] = rv
        uf.parity[rv] = 0


def trees(max_n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on 1..max_n vertices."""
    yield Graph(1, (frozenset(),))
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            yield Graph.from_edges(n, t.edges())


def grid_subsets(a: int, b: int) -> Iterator[tuple[list, Graph]]:
    cells = rectangle(a, b)
    for mask in range(1 << len(cells)):
        pts = [cells[i] for i in range(len(cells)) if mask >> i & 1]
        yield pts, grid_from_points(pts)


# -- cross validation ----------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: object = None

    def record(self, ok: bool, case: object) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = case


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)

    def table(self) -> str:
        width = max([len(c.name) for c in self.checks] + [5])
        lines = [f"suite: {self.suite}", f"{'check':<{width}}  {'pass':>7}  {'fail':>5}"]
        for c in self.checks:
            lines.append(f"{c.name:<{width}}  {c.passed:>7}  {c.failed:>5}")
            if c.first_failure is not None:
                lines.append(f"  first counterexample: {c.first_failure!r}")
        return "\n".join(lines)


def _edges(g: Graph) -> list:
    return sorted(g.edge_set_1based())


def check_search_vs_brute(graphs: Iterable[Graph]) -> Check:
    check = Check("search == brute-force ordering (+ word, same labeling)")
    for g in graphs:
        dec = is_12_representable(g)
        brute = brute_force_ordering(g, TRIANGLE_FAMILY)
        ok = dec.answer == (brute is not None)
        if dec.answer:
            ok = ok and u_represents(dec.word, LabeledGraph(g, dec.labels))
        check.record(ok, _edges(g))
    return check


def check_bipartite_pipeline(graphs: Iterable[Graph]) -> Check:
    from .models import validate_icb

    check = Check("bipartite pipeline == general pipeline")
    for g in graphs:
        if bipartition(g) is None:
            continue
        bip = is_12_representable_bipartite(g)
        gen = is_12_representable(g)
        ok = bip.answer == gen.answer
        if bip.answer:
            ok = ok and validate_icb(g, bip.model)[0]
        check.record(ok, _edges(g))
    return check


def check_words_vs_labelings(max_n: int = 4) -> Check:
    check = Check(f"word exists == {{I3,J4,Q4}}-free labeling (n<={max_n})")
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            for order in permutations(range(n)):
                lg = LabeledGraph(g, labeling_from_order(order))
                has_word = brute_force_word(lg) is not None
                free = forbidden_labeled_subgraph(lg, TRIANGLE_FAMILY) is None
                check.record(has_word == free, (_edges(g), lg.labels))
    return check


def check_acyclicity(max_n: int = 5) -> Check:
    check = Check(f"constraint digraph acyclic == pattern-free (n<={max_n})")
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            for order in permutations(range(n)):
                labels = labeling_from_order(order)
                free = find_occurrence(g, labels, TRIANGLE_FAMILY) is None
                check.record(free == triangle_constraints_acyclic(g, labels), (_edges(g), labels))
    return check


def check_trees(max_n: int = 9) -> Check:
    check = Check(f"tree checker == pipeline (n<={max_n})")
    for t in trees(max_n):
        check.record(tree_12_representable(t).answer == is_12_representable(t).answer, _edges(t))
    return check


def check_grid(a: int = 3, b: int = 4) -> Check:
    check = Check(f"grid checker == pipeline ({a}x{b} subsets)")
    for pts, gg in grid_subsets(a, b):
        check.record(grid_12_representable(gg).answer == is_12_representable(gg.graph).answer, pts)
    return check


def check_search_existence(graphs: Iterable[Graph], family=TRIANGLE_FAMILY) -> Check:
    check = Check("search existence == brute-force existence")
    for g in graphs:
        fast = find_pattern_free_ordering(g, family)
        check.record((fast is None) == (brute_force_ordering(g, family) is None), _edges(g))
    return check


SUITES: dict[str, Callable[[], list[Check]]] = {
    "small": lambda: [
        check_search_vs_brute(g for n in range(1, 6) for g in all_graphs(n)),
        check_words_vs_labelings(4),
        check_acyclicity(5),
    ],
    "bipartite": lambda: [
        check_bipartite_pipeline(g for n in range(1, 7) for g in bipartite_graphs(n)),
    ],
    "trees": lambda: [check_trees(9)],
    "grid": lambda: [check_grid(3, 4)],
}


def cross_validate(suite: str) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return Report(suite, SUITES[suite]())


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
