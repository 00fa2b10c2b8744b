import itertools
import math
import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bridgelab._fiber_kernel import _bridge_count
from bridgelab.classes import FORESTS, enumerate_graphs
from bridgelab.errors import CapExceeded, DomainError
from bridgelab.forests import (
    bridge_free_base,
    contract,
    cross_w,
    edge_cut_profile,
    fiber_mass_identity_check,
    forest_kappa_masses,
    forest_mass,
    forests_on,
    graphs_over_base,
    has_balanced_union,
    moon_brute_force,
    moon_tree_total,
    trees_on,
    verify_fn2_identity,
    verify_smalln25,
    wfrag,
)
from bridgelab.graph import Graph, bridges, components, kappa, path_graph, skeleton

from conftest import graphs

weights = st.lists(st.integers(1, 4), min_size=1, max_size=6)


def mask_trees(n):
    """Trees from the edge-mask enumerator, independent of the Pruefer generator."""
    return [g for g in enumerate_graphs(FORESTS, n) if kappa(g) == 1]


@settings(max_examples=60, deadline=None)
@given(weights)
def test_moon_formula_against_mask_trees(w):
    n = len(w)
    brute = sum(math.prod(wi ** t.degree(i + 1) for i, wi in enumerate(w)) for t in mask_trees(n))
    assert moon_tree_total(w) == brute == moon_brute_force(w)


def test_moon_examples():
    assert moon_tree_total([1, 1, 1]) == 3
    assert moon_tree_total([2, 3]) == 6
    assert moon_tree_total([5]) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_generators_agree_with_mask_enumerator(n):
    assert set(forests_on(n)) == set(enumerate_graphs(FORESTS, n))
    assert set(trees_on(n)) == set(mask_trees(n))


def test_forest_mass():
    f = Graph(3, [(1, 2)])
    assert forest_mass(f, [2, 3, 1], F(1, 2), 3) == 6 * F(1, 2) * 9
    with pytest.raises(DomainError):
        forest_mass(Graph(3, [(1, 2), (2, 3), (1, 3)]), [1, 1, 1], 1, 1)
    with pytest.raises(ValueError):
        forest_mass(f, [1, 1], 1, 1)
    with pytest.raises(ValueError):
        forest_mass(f, [1, 0, 1], 1, 1)


@pytest.mark.parametrize("w", [(1, 1, 1, 1), (3, 1, 4), (2, 2, 1, 5, 1)])
def test_forest_kappa_masses_by_direct_sum(w):
    lam, nu = F(2, 3), F(5, 2)
    direct = {}
    for f in forests_on(len(w)):
        direct[kappa(f)] = direct.get(kappa(f), 0) + forest_mass(f, w, lam, nu)
    assert forest_kappa_masses(w, lam, nu) == dict(sorted(direct.items()))


# weighted statistics ------------------------------------------------------


def brute_cross_w(h, w):
    comp = {v: i for i, c in enumerate(components(h)) for v in c}
    return sum(w[u - 1] * w[v - 1] for u, v in itertools.combinations(range(1, h.n + 1), 2)
               if comp[u] != comp[v])


@settings(max_examples=150)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_cross_w_and_wfrag(h, rnd):
    w = [rnd.randint(1, 5) for _ in range(h.n)]
    assert cross_w(h, w) == brute_cross_w(h, w)
    comp_w = sorted(sum(w[v - 1] for v in c) for c in components(h))
    assert wfrag(h, w) == sum(comp_w[:-1])
    if all(x == 1 for x in w):
        assert wfrag(h, w) == h.n - max(len(c) for c in components(h))


def subtree_cut_profile(t, w):
    """Root at 1 and read each edge's side weights off subtree sums."""
    W = sum(w)
    parent = {1: None}
    order = [1]
    for v in order:
        for u in range(1, t.n + 1):
            if t.has_edge(u, v) and u not in parent:
                parent[u] = v
                order.append(u)
    sub = {v: w[v - 1] for v in order}
    for v in reversed(order[1:]):
        sub[parent[v]] += sub[v]
    out = {k: 0 for k in range(1, W // 2 + 1)}
    for v in order[1:]:
        out[min(sub[v], W - sub[v])] += 1
    return out


@settings(max_examples=150)
@given(st.integers(1, 7), st.randoms(use_true_random=False))
def test_edge_cut_profile_against_subtree_sums(n, rnd):
    t = rnd.choice(list(trees_on(n)))
    w = [rnd.randint(1, 4) for _ in range(n)]
    prof = edge_cut_profile(t, w)
    assert prof == subtree_cut_profile(t, w)
    # every edge has exactly one lighter side
    assert sum(prof.values()) == n - 1


def test_edge_cut_profile_needs_a_tree():
    with pytest.raises(DomainError):
        edge_cut_profile(Graph(3, [(1, 2)]), [1, 1, 1])


@pytest.mark.parametrize("n", range(2, 7))
def test_every_disconnected_forest_has_balanced_union(n):
    rng = random.Random(n)
    for f in forests_on(n):
        if kappa(f) > 1:
            w = [rng.randint(1, 4) for _ in range(n)]
            assert has_balanced_union(f, w)


# contraction and fibers ---------------------------------------------------


def test_bridge_free_base():
    g0, blocks = bridge_free_base([3, 1, 4])
    assert g0.n == 8 and not bridges(g0)
    assert sorted(len(b) for b in blocks) == [1, 3, 4]
    with pytest.raises(DomainError):
        bridge_free_base([2, 1])


def test_graphs_over_base_stay_in_the_class():
    g0, blocks = bridge_free_base([3, 1, 1])
    hs = list(graphs_over_base(g0))
    assert len(hs) == len(set(hs))
    for h in hs:
        assert skeleton(h) == g0
        f = contract(h, blocks)
        assert kappa(f) == kappa(h)


def test_graphs_over_edgeless_base_are_the_forests():
    g0 = Graph(5)
    assert set(graphs_over_base(g0)) == set(forests_on(5))


def test_contract_rejects_foreign_graphs():
    g0, blocks = bridge_free_base([3, 1])
    with pytest.raises(DomainError):
        contract(path_graph(4), blocks)
    with pytest.raises(DomainError):
        contract(g0, [frozenset({1, 2}), frozenset({3})])


@pytest.mark.parametrize("sizes,shape", [
    ([1, 1, 1, 1], "cycle"),
    ([3, 1, 1], "cycle"),
    ([3, 3], "cycle"),
    ([4, 1, 1], "clique"),
    ([1, 1, 1, 1, 1, 1], "cycle"),
])
@pytest.mark.parametrize("lam,nu", [(1, 1), (F(1, 2), 3)])
def test_fiber_identity_compiled_matches_python(sizes, shape, lam, nu):
    g0, _ = bridge_free_base(sizes, shape)
    py = fiber_mass_identity_check(g0, lam, nu, engine="python")
    nb = fiber_mass_identity_check(g0, lam, nu, engine="compiled")
    assert py.holds and nb.holds
    assert (py.graphs_seen, py.fibers, py.weights) == (nb.graphs_seen, nb.fibers, nb.weights)


def test_fiber_counts_for_edgeless_bases():
    # over an edgeless base every graph is a forest and every fiber is a singleton
    for n, count in [(3, 7), (4, 38), (5, 291)]:
        r = fiber_mass_identity_check(Graph(n), engine="python")
        assert r.graphs_seen == r.fibers == count


def test_fiber_contract_errors():
    with pytest.raises(DomainError):
        fiber_mass_identity_check(path_graph(3))
    with pytest.raises(CapExceeded):
        fiber_mass_identity_check(Graph(10))
    with pytest.raises(ValueError):
        fiber_mass_identity_check(Graph(3), engine="gpu")


@settings(max_examples=200)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_kernel_bridge_count_matches_graph_module(g, rnd):
    n = g.n
    label = [rnd.randrange(3) for _ in range(n)]
    cross_mask = np.array([sum(1 << j for j in range(n) if label[j] != label[i])
                           for i in range(n)], np.int64)
    nb, bad = _bridge_count(n, np.array(g.rows, np.int64), cross_mask)
    br = bridges(g)
    assert nb == len(br)
    assert bad == sum(1 for u, v in br if label[u - 1] == label[v - 1])


# exact identities ---------------------------------------------------------


@pytest.mark.parametrize("w", [(1, 1), (1, 1, 1), (2, 1, 3), (1, 1, 1, 1, 1), (4, 1, 2, 1)])
@pytest.mark.parametrize("lam,nu", [(1, 1), (2, 1), (F(1, 3), F(5, 2))])
def test_fn2_identity(w, lam, nu):
    r = verify_fn2_identity(len(w), w, lam, nu)
    assert r.lhs == r.rhs
    assert r.sumflow_lhs == r.sumflow_rhs
    assert r.holds


def test_fn2_on_two_vertices_by_hand():
    # forests on [2]: the edge (mass w1 w2 lam nu) and the empty graph (mass nu^2)
    w, lam, nu = (2, 3), F(1, 2), 3
    r = verify_fn2_identity(2, w, lam, nu)
    tree, empty = 6 * lam * nu, F(nu) ** 2
    assert r.lhs == empty / (tree + empty)


@pytest.mark.parametrize("w", [(1, 1, 1), (3, 1, 1, 2), (1, 1, 1, 1, 1, 1), (5, 1, 1, 1, 1)])
@pytest.mark.parametrize("lam,nu", [(1, 1), (1, 4), (3, 1)])
def test_small_n_bound(w, lam, nu):
    r = verify_smalln25(len(w), w, lam, nu)
    assert r.holds
    assert [row[0] for row in r.rows] == list(range(1, len(w)))


def test_identities_respect_caps_and_lengths():
    with pytest.raises(ValueError):
        verify_fn2_identity(3, [1, 1], 1, 1)
    with pytest.raises(CapExceeded):
        verify_smalln25(10, [1] * 10, 1, 1)
