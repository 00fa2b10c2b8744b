import itertools
import math
from collections import Counter
from fractions import Fraction as F

import pytest

from bridgelab.classes import ALL_GRAPHS, BLOCK_CLIQUE, FORESTS, PSEUDOFORESTS, enumerate_graphs
from bridgelab.dominance import Distribution
from bridgelab.engine import statistic_distribution
from bridgelab.errors import HypothesisError
from bridgelab.graph import components, frag, kappa
from bridgelab.rooted import (
    rooted_forest_connectivity,
    rooted_forest_recurrence_pmf,
    rooted_frag_trend,
    rooted_kappa_distribution,
    unrooted_aside_check,
    verify_rooted_ratio,
    verify_theorem7,
)
from bridgelab.weighting import UNIFORM, Weighting, tau


def explicit_rooted_law(cls, n, w, stat=kappa):
    """Materialize every (graph, root choice) pair and sum tau over them."""
    masses = Counter()
    for g in enumerate_graphs(cls, n):
        for _roots in itertools.product(*components(g)):
            masses[stat(g)] += tau(g, w)
    return Distribution.from_masses(masses)


@pytest.mark.parametrize("cls", [ALL_GRAPHS, FORESTS, BLOCK_CLIQUE, PSEUDOFORESTS])
@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("w", [UNIFORM, Weighting(F(1, 2), 3)])
def test_rooted_law_matches_explicit_roots(cls, n, w):
    assert rooted_kappa_distribution(cls, n, w).pmf_kappa == explicit_rooted_law(cls, n, w)
    assert statistic_distribution(cls, n, w, "frag", rooted=True) == \
        explicit_rooted_law(cls, n, w, frag)


@pytest.mark.parametrize("n", range(1, 7))
def test_rooted_forest_counts(n):
    # rooted forests on [n] with k trees number C(n-1, k-1) n^(n-k)
    counts = Counter()
    for g in enumerate_graphs(FORESTS, n):
        counts[kappa(g)] += math.prod(len(c) for c in components(g))
    for k in range(1, n + 1):
        assert counts[k] == math.comb(n - 1, k - 1) * n ** (n - k)
    assert sum(counts.values()) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_rooted_forest_connectivity_formula(n):
    law = rooted_kappa_distribution(FORESTS, n)
    assert law.p_connected == rooted_forest_connectivity(n) == F(n, n + 1) ** (n - 1)


def test_rooted_examples():
    assert rooted_kappa_distribution(FORESTS, 2).p_connected == F(2, 3)
    assert rooted_kappa_distribution(ALL_GRAPHS, 2).p_connected == F(2, 3)
    assert rooted_kappa_distribution(FORESTS, 6).p_connected == F(6, 7) ** 5


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("w", [UNIFORM, Weighting(2, 1), Weighting(F(1, 2), 3)])
def test_recurrence_reproduces_rooted_forest_law(n, w):
    assert rooted_forest_recurrence_pmf(n, w) == rooted_kappa_distribution(FORESTS, n, w).pmf_kappa


@pytest.mark.parametrize("n", range(2, 8))
def test_forests_meet_rooted_ratio_with_equality(n):
    r = verify_rooted_ratio(FORESTS, n, Weighting(3, 2))
    assert r.equality_required and r.holds
    assert all(row.equal for row in r.rows)


def test_rooted_ratio_all_graphs_four():
    r = verify_rooted_ratio(ALL_GRAPHS, 4)
    assert r.holds and not r.equality_required
    assert [row.equal for row in r.rows] == [False, False, True]


@pytest.mark.parametrize("cls,top", [(ALL_GRAPHS, 5), (BLOCK_CLIQUE, 5)])
def test_rooted_ratio_for_addable_classes(cls, top):
    for n in range(1, top + 1):
        for w in (UNIFORM, Weighting(1, 3), Weighting(4, 1)):
            assert verify_rooted_ratio(cls, n, w).holds


@pytest.mark.parametrize("cls,n", [(ALL_GRAPHS, 5), (FORESTS, 7), (BLOCK_CLIQUE, 5)])
def test_rooted_bounds(cls, n):
    r = verify_theorem7(cls, n, Weighting(1, 2))
    assert r.rooted and r.holds


def test_rooted_refuses_non_addable_class():
    with pytest.raises(HypothesisError):
        verify_rooted_ratio(PSEUDOFORESTS, 6)
    r = verify_rooted_ratio(PSEUDOFORESTS, 6, strict=False)
    assert r.hypothesis.startswith("violated")


def test_rooted_frag_trend_values():
    rows = rooted_frag_trend(range(2, 7))
    assert [r.n for r in rows] == [2, 3, 4, 5, 6]
    # n=2: rooted forests are the edge (2 rootings) and the empty graph (frag 1)
    assert rows[0].e_frag == F(1, 3)
    assert rows[1].e_frag == F(1, 2)
    assert all(a.e_frag < b.e_frag for a, b in zip(rows, rows[1:]))
    for r in rows:
        assert r.ratio == pytest.approx(float(r.e_frag) / math.sqrt(r.n))


def test_aside_all_graphs_four():
    r = unrooted_aside_check(ALL_GRAPHS, 4)
    assert r.total == 64 and r.connected == 38
    assert r.holds and r.series_holds and r.exp_holds
    assert r.series_bound <= r.exp_bound


@pytest.mark.parametrize("cls,n", [(FORESTS, 6), (BLOCK_CLIQUE, 5), (ALL_GRAPHS, 5)])
@pytest.mark.parametrize("w", [UNIFORM, Weighting(1, 3)])
def test_aside_links(cls, n, w):
    r = unrooted_aside_check(cls, n, w)
    assert r.holds
    assert r.rows[0].unrooted == r.connected
