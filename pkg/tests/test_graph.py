import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superdom.generators import complete, cycle, path
from superdom.graph import (
    Graph,
    VertexSet,
    classify_cycle,
    connected_components,
    disjoint_union,
    is_dominating,
    is_super_dominating,
    neighborhood,
)

from oracles import naive_is_super_dominating, neighbour_sets


@st.composite
def graph_and_subset(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [e for e in pairs if draw(st.booleans())]
    s = draw(st.sets(st.integers(0, n - 1)))
    return Graph.from_edges(n, edges), s


def test_neighborhood():
    assert neighborhood(path(3), 1).to_list() == [0, 2]
    assert neighborhood(complete(4), 0, closed=True).to_list() == [0, 1, 2, 3]
    assert neighborhood(cycle(5), 0).to_list() == [1, 4]
    with pytest.raises(IndexError):
        neighborhood(path(3), 3)


def test_is_dominating():
    assert is_dominating(cycle(4), [0, 2])
    assert not is_dominating(path(4), [0])
    assert is_dominating(cycle(7), range(7))


def test_is_super_dominating_examples():
    ok, witness = is_super_dominating(cycle(4), [0, 1])
    assert ok
    assert witness.entries == ((0, 3), (1, 2))
    assert is_super_dominating(complete(3), [0]) == (False, None)
    ok, witness = is_super_dominating(cycle(5), range(5))
    assert ok and len(witness) == 0


@pytest.mark.parametrize("bad", [[], [(0, 0)], [(0, 3)]])
def test_construction_errors(bad):
    with pytest.raises(ValueError):
        Graph.from_edges(3 if bad else 0, bad)


def test_asymmetric_rows_rejected():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])


def test_edge_count_and_edges():
    g = cycle(4)
    assert g.m == 4
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert Graph.from_edges(1, []).m == 0


def test_vertex_set_bounds():
    with pytest.raises(ValueError):
        VertexSet.from_iterable(3, [3])
    s = VertexSet.from_iterable(5, [4, 1])
    assert s.to_list() == [1, 4]
    assert s.complement().to_list() == [0, 2, 3]
    assert 4 in s and 2 not in s


def test_connected_components():
    g = disjoint_union(path(2), path(3))
    assert [c.to_list() for c in connected_components(g)] == [[0, 1], [2, 3, 4]]
    assert [c.to_list() for c in connected_components(cycle(5))] == [[0, 1, 2, 3, 4]]
    assert [c.to_list() for c in connected_components(Graph.from_edges(3, []))] == [[0], [1], [2]]


def test_classify_cycle():
    assert classify_cycle(cycle(8)) == 8
    assert classify_cycle(path(4)) is None
    assert classify_cycle(complete(4)) is None
    assert classify_cycle(disjoint_union(cycle(3), cycle(3))) is None


@settings(max_examples=300, deadline=None)
@given(graph_and_subset())
def test_super_dominating_implies_dominating(data):
    g, s = data
    ok, witness = is_super_dominating(g, s)
    assert ok == naive_is_super_dominating(neighbour_sets(g), s)
    if ok:
        assert is_dominating(g, s)
        outside = set(range(g.n)) - s
        us = [u for _, u in witness]
        vs = [v for v, _ in witness]
        assert sorted(us) == sorted(outside)
        assert len(set(vs)) == len(vs)
        assert set(vs) <= s
        for v, u in witness:
            assert neighbour_sets(g)[v] & outside == {u}


@settings(max_examples=100, deadline=None)
@given(graph_and_subset(), st.randoms(use_true_random=False))
def test_relabel_invariance(data, rnd):
    g, s = data
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert is_super_dominating(g, s)[0] == is_super_dominating(h, {perm[v] for v in s})[0]


def test_full_set_always_super_dominating():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 12)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        assert is_super_dominating(g, range(n))[0]
