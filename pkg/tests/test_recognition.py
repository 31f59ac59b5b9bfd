import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twelverep.graphs import (
    FORBIDDEN_GRID_POINTS,
    Graph,
    LabeledGraph,
    complete,
    cycle,
    forbidden_grid_fixtures,
    g1,
    grid_from_points,
    induced_subgraph,
    path,
    rectangle,
    spider,
    star,
    t3,
)
from twelverep.models import validate_icb
from twelverep.recognition import (
    contains_induced,
    find_long_induced_cycle,
    grid_12_representable,
    is_12_representable,
    is_12_representable_bipartite,
    tree_12_representable,
)
from twelverep.words import u_represents


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def assert_certified(g, dec):
    assert dec.answer and dec.labels is not None
    assert u_represents(dec.word, LabeledGraph(g, dec.labels))


def test_small_cycles():
    assert_certified(cycle(4), is_12_representable(cycle(4)))
    for n in range(5, 9):
        dec = is_12_representable(cycle(n))
        assert not dec and dec.exhausted


def test_complete_graph():
    dec = is_12_representable(complete(4))
    assert_certified(complete(4), dec)
    assert len(dec.word) == 8


def test_bipartite_examples():
    g = g1().graph
    dec = is_12_representable_bipartite(g)
    assert_certified(g, dec)
    assert validate_icb(g, dec.model) == (True, None)
    assert not is_12_representable_bipartite(forbidden_grid_fixtures()["ladder_tails"].graph)
    for k in range(1, 6):
        assert_certified(star(k), is_12_representable_bipartite(star(k)))
    with pytest.raises(ValueError):
        is_12_representable_bipartite(cycle(5))


def test_grid_examples():
    full = grid_from_points(rectangle(3, 3))
    dec = grid_12_representable(full)
    # the outer ring of the 3x3 block is an induced 8-cycle: the centre is off the cycle
    assert not dec and dec.witness["kind"] == "cycle"
    assert not is_12_representable(full.graph)
    ring = grid_from_points([p for p in rectangle(3, 3) if p != (1, 1)])
    dec = grid_12_representable(ring)
    assert not dec and dec.witness["kind"] == "cycle" and len(dec.witness["vertices"]) == 8
    dec = grid_12_representable(grid_from_points(FORBIDDEN_GRID_POINTS["X"]))
    assert not dec and (dec.witness["kind"], dec.witness["name"]) == ("subgraph", "X")
    two_by_four = grid_from_points(rectangle(2, 4))
    assert_certified(two_by_four.graph, grid_12_representable(two_by_four))


@pytest.mark.parametrize("name", sorted(FORBIDDEN_GRID_POINTS))
def test_each_fixture_is_caught_by_name(name):
    gg = forbidden_grid_fixtures()[name]
    dec = grid_12_representable(gg)
    assert not dec
    assert find_long_induced_cycle(gg.graph, 8) is None
    assert dec.witness["name"] == name


def test_tree_examples():
    dec = tree_12_representable(t3())
    assert not dec and dec.witness["centre"] == 0 and len(dec.witness["branches"]) == 3
    caterpillar = Graph.from_edges(9, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (1, 6), (2, 7), (3, 8)])
    assert_certified(caterpillar, tree_12_representable(caterpillar))
    assert_certified(spider((2, 2, 2)), tree_12_representable(spider((2, 2, 2))))
    assert_certified(spider((3, 3, 2, 2)), tree_12_representable(spider((3, 3, 2, 2))))
    assert not tree_12_representable(spider((3, 3, 3, 1)))
    with pytest.raises(ValueError):
        tree_12_representable(cycle(4))


def test_contains_induced_examples():
    grid = grid_from_points(rectangle(3, 3)).graph
    emb = contains_induced(grid, cycle(4))
    assert emb is not None
    x = grid_from_points(FORBIDDEN_GRID_POINTS["X"]).graph
    assert contains_induced(x, g1().graph) is not None
    assert contains_induced(cycle(6), path(5)) is not None
    assert contains_induced(cycle(6), path(6)) is None
    assert contains_induced(cycle(5), cycle(4)) is None
    assert contains_induced(path(3), complete(3)) is None


@st.composite
def pair_of_graphs(draw):
    def graph(n):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return Graph.from_edges(n, [p for p in pairs if draw(st.booleans())])
    big = graph(draw(st.integers(1, 8)))
    return big, graph(draw(st.integers(1, 5)))


@settings(max_examples=150, deadline=None)
@given(pair_of_graphs())
def test_contains_induced_matches_networkx(case):
    g, h = case
    emb = contains_induced(g, h)
    expected = nx.algorithms.isomorphism.GraphMatcher(_nx(g), _nx(h)).subgraph_is_isomorphic()
    assert (emb is not None) == expected
    if emb is not None:
        assert len(set(emb.values())) == h.n
        for a in range(h.n):
            for b in range(a + 1, h.n):
                assert g.has_edge(emb[a], emb[b]) == h.has_edge(a, b)


def test_long_cycle_in_4x4_grid():
    g = grid_from_points(rectangle(4, 4)).graph
    cyc = find_long_induced_cycle(g, 8)
    assert cyc is not None and len(cyc) >= 8
    sub, _ = induced_subgraph(g, cyc)
    assert all(sub.degree(v) == 2 for v in range(sub.n)) and sub.m == len(cyc)
    lengths = {len(c) for c in nx.chordless_cycles(_nx(g))}
    assert 8 in lengths


@settings(max_examples=100, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1))
def test_long_cycle_matches_networkx(points):
    g = grid_from_points(sorted(points)).graph
    cyc = find_long_induced_cycle(g, 8)
    longest = max((len(c) for c in nx.chordless_cycles(_nx(g))), default=0)
    assert (cyc is not None) == (longest >= 8)


def test_representability_is_hereditary():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(3, 7)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        if not is_12_representable(g):
            continue
        keep = sorted(rng.sample(range(n), rng.randint(1, n)))
        assert is_12_representable(induced_subgraph(g, keep)[0])
