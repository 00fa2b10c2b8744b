import random
import sys
import textwrap
from collections import Counter

import networkx as nx
import pytest

from bridgelab.classes import (
    ALL_GRAPHS,
    BLOCK_CLIQUE,
    BUILTIN,
    FORESTS,
    PLANAR_SMALL,
    PSEUDOFORESTS,
    census,
    census_by_enumeration,
    check_bridge_addable,
    check_bridge_alterable,
    enumerate_graphs,
    external_class,
    get_class,
    iter_rows,
    labelled_tree_count,
    require_hypothesis,
    user_class,
)
from bridgelab.errors import CapExceeded, HypothesisError
from bridgelab.forests import forests_on
from bridgelab.graph import Graph, components, kappa, profile


def all_graphs_on(n):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_mask(n, mask)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges())
    return h


def brute_forest(g):
    return g.num_edges() == g.n - kappa(g)


def brute_pseudoforest(g):
    h = to_nx(g)
    return all(h.subgraph(c).number_of_edges() <= len(c) for c in nx.connected_components(h))


def brute_block_clique(g):
    h = to_nx(g)
    for block in nx.biconnected_components(h):
        k = len(block)
        if h.subgraph(block).number_of_edges() != k * (k - 1) // 2:
            return False
    return True


def brute_planar(g):
    return nx.check_planarity(to_nx(g))[0]


# counts -------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 6))
def test_all_graphs_count(n):
    assert len(list(enumerate_graphs(ALL_GRAPHS, n))) == 2 ** (n * (n - 1) // 2)


def test_spec_enumeration_examples():
    assert len(list(enumerate_graphs(ALL_GRAPHS, 3))) == 8
    fs = list(enumerate_graphs(FORESTS, 4))
    assert len(fs) == 38
    assert sum(kappa(g) == 1 for g in fs) == 16


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("cls,oracle", [
    (FORESTS, brute_forest),
    (PSEUDOFORESTS, brute_pseudoforest),
    (BLOCK_CLIQUE, brute_block_clique),
    (PLANAR_SMALL, brute_planar),
])
def test_membership_matches_brute_force(cls, oracle, n):
    if n == 6 and cls is PLANAR_SMALL:
        pytest.skip("covered by the sampled test below")
    expected = {g for g in all_graphs_on(n) if oracle(g)}
    assert set(enumerate_graphs(cls, n)) == expected


@pytest.mark.parametrize("n", [6, 7, 8])
def test_planarity_matches_networkx_on_samples(n):
    rng = random.Random(n)
    m = n * (n - 1) // 2
    for _ in range(400):
        # bias toward the interesting edge range around 3n - 6
        k = rng.randint(max(0, 3 * n - 9), min(m, 3 * n - 3))
        edges = rng.sample([(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)], k)
        g = Graph(n, edges)
        assert PLANAR_SMALL.contains_rows(n, g.rows) == brute_planar(g), g


def test_kuratowski_graphs_are_rejected():
    k5 = Graph(5, [(i, j) for i in range(1, 6) for j in range(i + 1, 6)])
    k33 = Graph(6, [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)])
    # a subdivided K3,3 on 7 vertices
    sub = Graph(7, [(1, 4), (1, 5), (1, 7), (7, 6), (2, 4), (2, 5), (2, 6),
                    (3, 4), (3, 5), (3, 6)])
    for g in (k5, k33, sub):
        assert not PLANAR_SMALL.contains_rows(g.n, g.rows)
    assert PLANAR_SMALL.contains_rows(5, k5.remove_edge(1, 2).rows)


def test_forest_counts_against_independent_generator():
    # the Pruefer-based generator in forests.py never touches the edge-mask enumerator
    frozen = [1, 2, 7, 38, 291, 2932, 36961]
    for n, expected in enumerate(frozen, start=1):
        assert sum(census(FORESTS, n).values()) == expected
    assert sum(1 for _ in forests_on(7)) == 36961


@pytest.mark.parametrize("n", range(1, 8))
def test_forest_fast_census_matches_enumeration(n):
    assert census(FORESTS, n) == census_by_enumeration(FORESTS, n)


@pytest.mark.parametrize("n", range(1, 9))
def test_tree_counts(n):
    assert labelled_tree_count(n) == (n ** (n - 2) if n > 1 else 1)
    # rooted trees number n^(n-1); every tree has n rootings
    trees = sum(c for prof, c in census(FORESTS, n).items() if len(prof[0]) == 1)
    assert trees * n == n ** (n - 1)


def test_frozen_class_counts():
    assert [sum(census(PSEUDOFORESTS, n).values()) for n in range(1, 7)] == \
        [1, 2, 8, 57, 608, 8524]
    assert [sum(census(BLOCK_CLIQUE, n).values()) for n in range(1, 7)] == \
        [1, 2, 8, 55, 562, 7739]
    assert [sum(census(PLANAR_SMALL, n).values()) for n in range(1, 6)] == \
        [1, 2, 8, 64, 1023]


def test_census_profiles_agree_with_members():
    for cls in (PSEUDOFORESTS, BLOCK_CLIQUE):
        c = Counter(profile(5, r) for r in iter_rows(cls, 5))
        assert c == census(cls, 5)


def test_enumeration_order_is_increasing_and_repeatable():
    for cls in BUILTIN.values():
        masks = [g.mask for g in enumerate_graphs(cls, 5)]
        assert masks == sorted(masks)
        assert masks == [g.mask for g in enumerate_graphs(cls, 5)]


def test_caps():
    with pytest.raises(CapExceeded):
        census(ALL_GRAPHS, ALL_GRAPHS.enum_cap + 1)
    with pytest.raises(CapExceeded):
        list(iter_rows(PLANAR_SMALL, 9))


def test_get_class():
    assert get_class("forests") is FORESTS
    with pytest.raises(KeyError):
        get_class("trees")


# closure checks -----------------------------------------------------------


def test_closure_examples():
    assert check_bridge_addable(FORESTS, 6).holds
    assert check_bridge_alterable(FORESTS, 6).holds
    assert check_bridge_addable(ALL_GRAPHS, 5).holds
    assert check_bridge_alterable(BLOCK_CLIQUE, 5).holds


def test_small_edge_class_fails_with_witness():
    cls = user_class("at_most_two_edges", lambda g: g.num_edges() <= 2)
    res = check_bridge_addable(cls, 4)
    assert not res.holds
    g, (u, v) = res.counterexample
    assert g.num_edges() == 2 and kappa(g) == 2
    assert not any(u in c and v in c for c in components(g))


def test_pseudoforests_are_not_bridge_addable_from_six_vertices():
    for n in range(1, 6):
        assert check_bridge_addable(PSEUDOFORESTS, n).holds
    res = check_bridge_addable(PSEUDOFORESTS, 6)
    assert not res.holds
    g, (u, v) = res.counterexample
    assert not PSEUDOFORESTS.contains_rows(6, g.add_edge(u, v).rows)


@pytest.mark.parametrize("cls", [ALL_GRAPHS, FORESTS, BLOCK_CLIQUE, PLANAR_SMALL])
def test_builtins_are_bridge_alterable_to_six(cls):
    for n in range(1, 7):
        assert check_bridge_addable(cls, n).holds
        assert check_bridge_alterable(cls, n).holds


def test_require_hypothesis_modes():
    assert require_hypothesis(FORESTS, 5) == "checked"
    assert require_hypothesis(FORESTS, 9) == "declared"
    with pytest.raises(HypothesisError):
        require_hypothesis(PSEUDOFORESTS, 6)
    assert require_hypothesis(PSEUDOFORESTS, 6, strict=False).startswith("violated")
    # past the check cap, pseudoforests have no declaration to fall back on
    with pytest.raises(HypothesisError):
        require_hypothesis(PSEUDOFORESTS, 8)
    odd = user_class("even_edges", lambda g: g.num_edges() % 2 == 0)
    with pytest.raises(HypothesisError):
        require_hypothesis(odd, 3)


# external predicates ------------------------------------------------------


CHILD = textwrap.dedent("""
    import sys
    from bridgelab.graph import decode_graph6, kappa
    for line in sys.stdin:
        g = decode_graph6(line.strip())
        sys.stdout.write("Y\\n" if g.num_edges() == g.n - kappa(g) else "N\\n")
        sys.stdout.flush()
""")


def test_external_predicate_protocol(tmp_path):
    script = tmp_path / "acyclic.py"
    script.write_text(CHILD)
    cls = external_class("ext_forests", [sys.executable, str(script)])
    try:
        for n in range(1, 5):
            assert census(cls, n) == census(FORESTS, n)
        assert check_bridge_addable(cls, 4).holds
    finally:
        cls.membership.close()


def test_external_predicate_bad_answer(tmp_path):
    script = tmp_path / "bad.py"
    script.write_text("import sys\nfor line in sys.stdin:\n    print('maybe', flush=True)\n")
    cls = external_class("bad", [sys.executable, str(script)])
    try:
        with pytest.raises(RuntimeError):
            census(cls, 2)
    finally:
        cls.membership.close()
