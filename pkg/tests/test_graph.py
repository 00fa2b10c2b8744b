import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings

from bridgelab.graph import (
    Graph,
    GraphError,
    bridges,
    components,
    complete_graph,
    cross_count,
    cross_pairs,
    decode_graph6,
    encode_graph6,
    frag,
    kappa,
    num_bridges,
    path_graph,
    profile,
    read_graph6_stream,
    skeleton,
    write_graph6_stream,
)

from conftest import graphs, sparse_graphs


def naive_bridges(g):
    """Delete each edge and recount components."""
    k = kappa(g)
    return {e for e in g.edges() if kappa(g.remove_edge(*e)) > k}


def all_graphs_on(n):
    m = n * (n - 1) // 2
    for mask in range(1 << m):
        yield Graph.from_mask(n, mask)


TRIANGLE_PENDANT = Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])


def test_components_examples():
    assert components(path_graph(3)) == [frozenset({1, 2, 3})]
    assert kappa(Graph(3)) == 3
    g = Graph(4, [(1, 2)])
    assert set(components(g)) == {frozenset({1, 2}), frozenset({3}), frozenset({4})}
    assert kappa(g) == 3


def test_bridges_examples():
    assert bridges(complete_graph(3)) == set()
    assert bridges(path_graph(3)) == {(1, 2), (2, 3)}
    assert bridges(TRIANGLE_PENDANT) == {(3, 4)}


def test_skeleton_examples():
    s = skeleton(TRIANGLE_PENDANT)
    assert s == Graph(4, [(1, 2), (2, 3), (1, 3)])
    assert kappa(s) == 2 == kappa(TRIANGLE_PENDANT) + num_bridges(TRIANGLE_PENDANT)
    assert skeleton(path_graph(6)) == Graph(6)
    assert skeleton(complete_graph(5)) == complete_graph(5)


def test_frag_examples():
    assert frag(complete_graph(4)) == 0
    assert frag(Graph(6, [(1, 2), (2, 3), (4, 5)])) == 3
    assert frag(Graph(4, [(1, 2), (3, 4)])) == 2


def test_cross_examples():
    assert cross_count(Graph(4, [(1, 2)])) == 5
    assert cross_pairs(path_graph(4)) == set()
    assert cross_count(Graph(4)) == 6


@pytest.mark.parametrize("n", range(1, 7))
def test_bridges_match_naive_exhaustive(n):
    for g in all_graphs_on(n):
        assert bridges(g) == naive_bridges(g)


@settings(max_examples=300)
@given(sparse_graphs(max_n=14))
def test_bridges_match_naive_random(g):
    assert bridges(g) == naive_bridges(g)


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_components_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges())
    assert set(components(g)) == {frozenset(c) for c in nx.connected_components(h)}
    assert bridges(g) == {tuple(sorted(e)) for e in nx.bridges(h)}


@settings(max_examples=300)
@given(sparse_graphs(max_n=12))
def test_structural_lemmas(g):
    n, k, e0 = g.n, kappa(g), num_bridges(g)
    assert kappa(skeleton(g)) == k + e0
    assert e0 <= n - k
    if k >= 2:
        j = k - 1
        assert cross_count(g) >= j * (n - j) + j * (j - 1) // 2
    assert 2 * cross_count(g) >= n * frag(g)
    sizes = [len(c) for c in components(g)]
    assert cross_count(g) == math.comb(n, 2) - sum(math.comb(s, 2) for s in sizes)


@settings(max_examples=200)
@given(sparse_graphs(min_n=2, max_n=10))
def test_adding_cross_pair_makes_a_bridge(g):
    for u, v in sorted(cross_pairs(g))[:5]:
        h = g.add_edge(u, v)
        assert kappa(h) == kappa(g) - 1
        assert (u, v) in bridges(h)
        assert skeleton(h) == skeleton(g)


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_profile_agrees_with_public_functions(g):
    sizes, e0, e = profile(g.n, g.rows)
    assert sorted((len(c) for c in components(g)), reverse=True) == list(sizes)
    assert e0 == num_bridges(g)
    assert e == g.num_edges()


# graph6 -------------------------------------------------------------------


@settings(max_examples=300)
@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u - 1, v - 1) for u, v in g.edges())
    expected = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert encode_graph6(g) == expected
    assert decode_graph6(expected) == g


def test_graph6_known_strings():
    assert encode_graph6(Graph(1)) == "@"
    assert encode_graph6(Graph(2, [(1, 2)])) == "A_"
    assert encode_graph6(path_graph(5)) == "DhC"  # networkx agrees
    assert decode_graph6(">>graph6<<DhC") == path_graph(5)


def test_graph6_large_n_form():
    g = Graph(64, [(1, 64), (10, 20)])
    text = encode_graph6(g)
    assert text.startswith("~")
    assert decode_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "D", "DhCC", "D\x7f\x7f", "A`"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphError):
        decode_graph6(bad)


def test_graph6_stream_round_trip(tmp_path):
    gs = [Graph.from_mask(4, m) for m in range(0, 64, 7)]
    path = tmp_path / "g.g6"
    with open(path, "w") as fh:
        assert write_graph6_stream(gs, fh) == len(gs)
    with open(path) as fh:
        assert list(read_graph6_stream(fh)) == gs


@settings(max_examples=100)
@given(graphs(max_n=10))
def test_json_round_trip(g):
    assert Graph.from_json(g.to_json()) == g


def test_construction_errors():
    with pytest.raises(GraphError):
        Graph(0)
    with pytest.raises(GraphError):
        Graph(65)
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 4)])
    with pytest.raises(GraphError):
        Graph.from_json({"n": 3})


def test_mask_round_trip_and_pair_order():
    # graph6 pair order: (1,2), (1,3), (2,3), (1,4), ...
    order = [Graph.from_mask(4, 1 << k).edges()[0] for k in range(6)]
    assert order == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    for mask in range(64):
        assert Graph.from_mask(4, mask).mask == mask


def test_equality_and_hash():
    a = Graph(3, [(1, 2)])
    b = Graph(3, [(2, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(4, [(1, 2)])
    assert len({a, b}) == 1


def test_all_pairs_enumeration_is_complete():
    seen = {g.mask for g in all_graphs_on(4)}
    assert seen == set(range(64))
    assert len(list(itertools.islice(all_graphs_on(5), 2000))) == 1024
