import pytest
from hypothesis import given, settings

from kecore.errors import InvalidMatchingError
from kecore.graph import Graph, induced_delete
from kecore.matching import (
    Matching,
    greedy_mate,
    has_perfect_matching,
    maximum_matching,
    mu_after_delete,
)
from kecore.oracle import brute_mu

from conftest import corpus, fx, graphs, ids


def assert_valid(g, m):
    for u, w in enumerate(m.mate):
        if w != -1:
            assert m.mate[w] == u
            assert g.has_edge(u, w)
    assert 2 * m.size == sum(1 for w in m.mate if w != -1)


@pytest.mark.parametrize(
    "name, size",
    [("FIG4-G1", 3), ("FIG4-G2", 3), ("FIG5-G1", 3)],
)
def test_fixture_matching_sizes(name, size):
    g = fx(name)
    m = maximum_matching(g)
    assert_valid(g, m)
    assert m.size == size


def test_edgeless():
    assert maximum_matching(Graph(5)).size == 0


def test_fig5_g1_is_perfect():
    g = fx("FIG5-G1")
    m = maximum_matching(g)
    assert all(w != -1 for w in m.mate)
    assert has_perfect_matching(g, m)


def test_has_perfect_matching_fixtures():
    assert not has_perfect_matching(fx("FIG4-G1"), maximum_matching(fx("FIG4-G1")))
    assert has_perfect_matching(fx("FIG3-G2"), maximum_matching(fx("FIG3-G2")))


def test_odd_cycle_needs_blossom():
    # C5 plus a pendant on vertex 0: greedy leaves 4 and 5 free and the
    # only augmenting path runs through the contracted 5-cycle
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
    assert greedy_mate(g).count(-1) == 2
    assert maximum_matching(g).size == 3


def test_greedy_is_lowest_id_first():
    g = Graph(4, [(0, 2), (0, 1), (1, 3), (2, 3)])
    assert greedy_mate(g) == [1, 0, 3, 2]


@given(graphs(max_n=12))
@settings(max_examples=300)
def test_maximum_matching_matches_oracle(g):
    m = maximum_matching(g)
    assert_valid(g, m)
    assert m.size == brute_mu(g)


def test_corpus_matching_sizes():
    for spec, g in corpus()[:300]:
        assert maximum_matching(g).size == brute_mu(g) == spec.mu


@pytest.mark.parametrize(
    "name, label, expected",
    [("FIG4-G1", "v6", 3), ("FIG4-G1", "v1", 2), ("FIG4-G2", "x7", 3)],
)
def test_mu_after_delete_fixtures(name, label, expected):
    g = fx(name)
    (v,) = ids(name, label)
    assert mu_after_delete(g, maximum_matching(g), v) == expected


@given(graphs(max_n=10))
@settings(max_examples=200)
def test_mu_after_delete_matches_from_scratch(g):
    m = maximum_matching(g)
    for v in range(g.n):
        got = mu_after_delete(g, m, v)
        assert got == maximum_matching(induced_delete(g, v)).size
        assert m.size - 1 <= got <= m.size


def test_mu_after_delete_range_check():
    g = fx("FIG4-G1")
    with pytest.raises(IndexError):
        mu_after_delete(g, maximum_matching(g), 7)


def test_matching_validation():
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InvalidMatchingError, match="not an edge"):
        Matching.from_mate(g, [2, -1, 0])
    with pytest.raises(InvalidMatchingError, match="matched to"):
        Matching.from_mate(g, [1, 2, 1])
    with pytest.raises(InvalidMatchingError, match="two matched edges"):
        Matching.from_edges(g, [(0, 1), (1, 2)])
    assert Matching.from_edges(g, [(1, 2)]).edges == [(1, 2)]


@pytest.mark.parametrize("seed", range(40))
def test_medium_graphs_against_networkx(seed):
    nx = pytest.importorskip("networkx")
    import random

    rng = random.Random(seed)
    n = rng.randint(20, 60)
    p = rng.choice([0.03, 0.06, 0.1, 0.2])
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    g = Graph(n, edges)
    ref = nx.Graph()
    ref.add_nodes_from(range(n))
    ref.add_edges_from(edges)
    expected = len(nx.max_weight_matching(ref, maxcardinality=True))
    m = maximum_matching(g)
    assert_valid(g, m)
    assert m.size == expected
    for v in range(0, n, 5):
        assert mu_after_delete(g, m, v) == len(
            nx.max_weight_matching(ref.subgraph(set(range(n)) - {v}), maxcardinality=True)
        )
