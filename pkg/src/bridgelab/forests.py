"""Degree-weighted forests on [n]: contraction of bridge-free bases, Moon's count,
weighted cross/fragment statistics and the exact identities between them.

Forests here are generated by components (smallest vertex, its block, a
Pruefer-decoded tree on the block), deliberately independent of the
edge-mask enumerator in ``classes``.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .errors import CapExceeded, DomainError
from .graph import (
    Graph,
    bridge_pairs,
    component_masks,
    components,
    kappa,
    num_bridges,
    skeleton,
)

FOREST_CAP = 9
FIBER_CAP = 9


def weight_vector(ws: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in ws)
    if not w or any(x < 1 for x in w):
        raise ValueError("weights must be positive integers")
    return w


# --------------------------------------------------------------------------
# generation


def _prufer_trees(verts: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Every labelled tree on ``verts`` exactly once, as an edge list."""
    m = len(verts)
    if m == 1:
        yield []
        return
    if m == 2:
        yield [(verts[0], verts[1])]
        return
    for seq in product(range(m), repeat=m - 2):
        degree = [1] * m
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = degree.index(1)
            edges.append((verts[leaf], verts[x]))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = (i for i in range(m) if degree[i] == 1)
        edges.append((verts[u], verts[v]))
        yield edges


def trees_on(n: int) -> Iterator[Graph]:
    for edges in _prufer_trees(list(range(1, n + 1))):
        yield Graph(n, edges)


def _forests_on(verts: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not verts:
        yield []
        return
    first, rest = verts[0], verts[1:]
    for size in range(len(rest) + 1):
        for mates in combinations(rest, size):
            block = (first,) + mates
            remaining = tuple(v for v in rest if v not in mates)
            for tree in _prufer_trees(block):
                for others in _forests_on(remaining):
                    yield tree + others


def forests_on(n: int) -> Iterator[Graph]:
    """All labelled forests on [n], generated component by component."""
    if n > FOREST_CAP:
        raise CapExceeded(f"forest generation is capped at n={FOREST_CAP}")
    for edges in _forests_on(tuple(range(1, n + 1))):
        yield Graph(n, edges)


@lru_cache(maxsize=None)
def forest_shapes(n: int) -> tuple:
    """(degree sequence, component count) -> number of forests on [n]."""
    shapes = Counter()
    for f in forests_on(n):
        shapes[(tuple(f.degree(v) for v in range(1, n + 1)), kappa(f))] += 1
    return tuple(sorted(shapes.items()))


@lru_cache(maxsize=None)
def tree_degree_sequences(n: int) -> tuple:
    shapes = Counter()
    for edges in _prufer_trees(list(range(1, n + 1))):
        deg = [0] * n
        for u, v in edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        shapes[tuple(deg)] += 1
    return tuple(sorted(shapes.items()))


# --------------------------------------------------------------------------
# masses and statistics


def _is_forest(g: Graph) -> bool:
    return g.num_edges() == g.n - kappa(g)


def forest_mass(f: Graph, w: Sequence[int], lam, nu) -> Fraction:
    """prod w_i^deg(i) * lambda^edges * nu^components."""
    w = weight_vector(w)
    if len(w) != f.n:
        raise ValueError(f"weight vector has {len(w)} entries for a graph on {f.n} vertices")
    if not _is_forest(f):
        raise DomainError("forest_mass needs an acyclic graph")
    lam, nu = Fraction(lam), Fraction(nu)
    prod = math.prod(wi ** f.degree(i + 1) for i, wi in enumerate(w))
    return prod * lam ** f.num_edges() * nu ** kappa(f)


def _shape_mass(deg, k, w, lam, nu) -> Fraction:
    n = len(w)
    return math.prod(wi ** d for wi, d in zip(w, deg)) * lam ** (n - k) * nu ** k


def moon_tree_total(w: Sequence[int]) -> int:
    """Sum over labelled trees T on [n] of prod w_i^deg_T(i), i.e. prod(w) W^(n-2)."""
    w = weight_vector(w)
    if len(w) == 1:
        return 1
    return math.prod(w) * sum(w) ** (len(w) - 2)


def moon_brute_force(w: Sequence[int]) -> int:
    w = weight_vector(w)
    return sum(count * math.prod(wi ** d for wi, d in zip(w, deg))
               for deg, count in tree_degree_sequences(len(w)))


def cross_w(h: Graph, w: Sequence[int]) -> int:
    """Sum of w_u w_v over vertex pairs in different components."""
    w = weight_vector(w)
    if len(w) != h.n:
        raise ValueError("weight vector length must equal n")
    comp_w = [sum(w[v - 1] for v in c) for c in components(h)]
    total = sum(comp_w)
    return (total * total - sum(c * c for c in comp_w)) // 2


def wfrag(h: Graph, w: Sequence[int]) -> int:
    """Total weight minus the heaviest component weight."""
    w = weight_vector(w)
    if len(w) != h.n:
        raise ValueError("weight vector length must equal n")
    comp_w = [sum(w[v - 1] for v in c) for c in components(h)]
    return sum(comp_w) - max(comp_w)


def edge_cut_profile(t: Graph, w: Sequence[int]) -> dict[int, int]:
    """c(T, k) for 1 <= k <= floor(W/2): edges whose removal leaves a side of weight k."""
    w = weight_vector(w)
    if len(w) != t.n:
        raise ValueError("weight vector length must equal n")
    if t.num_edges() != t.n - 1 or kappa(t) != 1:
        raise DomainError("edge_cut_profile needs a tree")
    W = sum(w)
    out = {k: 0 for k in range(1, W // 2 + 1)}
    for u, v in t.edges():
        side = components(t.remove_edge(u, v))
        weights = {sum(w[x - 1] for x in c) for c in side}
        # each edge is counted once: only the lighter side can be <= W/2
        for k in weights:
            if 1 <= k <= W // 2:
                out[k] += 1
    return out


def _cut_sum(t: Graph, w) -> Fraction:
    """sum_k c(T,k) / (k (W-k))."""
    W = sum(w)
    return sum((Fraction(c, k * (W - k)) for k, c in edge_cut_profile(t, w).items() if c),
               Fraction(0))


# --------------------------------------------------------------------------
# contraction


def contract(h: Graph, base_components: Sequence) -> Graph:
    """Collapse each base component to one vertex; the result is a forest on [k].

    ``h`` must satisfy skeleton(h) having exactly the given components, which
    is the case for every graph in the class [G0] of a bridge-free G0.
    """
    blocks = [frozenset(b) for b in base_components]
    seen = set()
    for b in blocks:
        if not b or seen & b:
            raise DomainError("base components must be disjoint and nonempty")
        seen |= b
    if seen != set(range(1, h.n + 1)):
        raise DomainError("base components must cover the vertex set of h")
    skel_comps = set(components(skeleton(h)))
    if skel_comps != set(blocks):
        raise DomainError("skeleton of h does not have the base components")
    where = {}
    for idx, b in enumerate(blocks):
        for v in b:
            where[v] = idx + 1
    edges = []
    for u, v in h.edges():
        a, b = where[u], where[v]
        if a != b:
            edges.append((min(a, b), max(a, b)))
    if len(set(edges)) != len(edges):
        raise DomainError("two bridges join the same pair of base components")
    f = Graph(len(blocks), edges)
    if not _is_forest(f) or kappa(f) != kappa(h):
        raise DomainError("contraction is not a forest with the same component count")
    return f


def bridge_free_base(sizes: Sequence[int], shape: str = "cycle") -> tuple[Graph, list]:
    """A bridge-free graph with the given component sizes (none may be 2)."""
    edges = []
    blocks = []
    start = 1
    for s in sizes:
        if s == 2:
            raise DomainError("no bridge-free connected graph has exactly 2 vertices")
        vs = list(range(start, start + s))
        blocks.append(frozenset(vs))
        if s >= 3:
            if shape == "clique":
                edges += [(a, b) for a, b in combinations(vs, 2)]
            else:
                edges += [(vs[i], vs[(i + 1) % s]) for i in range(s)]
        start += s
    return Graph(start - 1, edges), blocks


def graphs_over_base(g0: Graph) -> Iterator[Graph]:
    """Every H with skeleton(H) = g0, found by adding bridges between g0's components.

    Cross pairs are added in DFS order; adding one inside a current component
    would close a cycle through a bridge, and every superset would too.
    """
    n = g0.n
    comps = component_masks(n, g0.rows)
    label = [0] * n
    for idx, c in enumerate(comps):
        for v in range(n):
            if c >> v & 1:
                label[v] = idx
    cross = [(i, j) for i in range(n) for j in range(i + 1, n) if label[i] != label[j]]
    rows = list(g0.rows)
    k = len(comps)

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(pos, parent):
        if pos == len(cross):
            yield Graph.from_rows(n, rows)
            return
        yield from rec(pos + 1, parent)
        i, j = cross[pos]
        a, b = find(parent, label[i]), find(parent, label[j])
        if a != b:
            p2 = list(parent)
            p2[a] = b
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            yield from rec(pos + 1, p2)
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)

    yield from rec(0, list(range(k)))


@dataclass
class FiberReport:
    base: str
    weights: tuple
    graphs_seen: int
    fibers: int
    count_identity_holds: bool
    mass_identity_holds: bool
    kappa_law_equal: bool
    mismatches: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.count_identity_holds and self.mass_identity_holds and self.kappa_law_equal


def fiber_mass_identity_check(g0: Graph, lam=1, nu=1, n_cap: int = FIBER_CAP,
                              engine: str = "auto") -> FiberReport:
    """Group every H over the bridge-free base g0 by its contraction F and compare
    the tau-mass of each fiber with mass(F); also compare the two kappa laws.

    engine="python" builds each H as a Graph and contracts it; "compiled" runs
    the same enumeration in a numba kernel (needed for the 10^7 graphs over the
    edgeless base on 9 vertices). "auto" picks compiled when numba imports.
    """
    if g0.n > n_cap:
        raise CapExceeded(f"fiber check needs W <= {n_cap}, got {g0.n}")
    if num_bridges(g0):
        raise DomainError("base graph must be bridge-free")
    if engine == "auto":
        try:
            from . import _fiber_kernel  # noqa: F401
            engine = "compiled"
        except ImportError:
            engine = "python"
    lam, nu = Fraction(lam), Fraction(nu)
    if engine == "compiled":
        return _fiber_check_compiled(g0, lam, nu)
    if engine != "python":
        raise ValueError(f"unknown engine {engine!r}")
    blocks = components(g0)
    w = tuple(len(b) for b in blocks)
    fiber_count = Counter()
    fiber_tau = defaultdict(Fraction)
    tau_kappa = defaultdict(Fraction)
    seen = 0
    for h in graphs_over_base(g0):
        e0 = num_bridges(h)
        if skeleton(h) != g0:
            raise AssertionError(f"generated {h!r} outside [G0]")
        f = contract(h, blocks)
        k = kappa(h)
        t = lam ** e0 * nu ** k
        fiber_count[f] += 1
        fiber_tau[f] += t
        tau_kappa[k] += t
        seen += 1
    n = len(w)
    mismatches = []
    count_ok = mass_ok = True
    mass_kappa = defaultdict(Fraction)
    all_forests = set(forests_on(n))
    for f in all_forests:
        m = forest_mass(f, w, lam, nu)
        mass_kappa[kappa(f)] += m
        expected = math.prod(w[i] ** f.degree(i + 1) for i in range(n))
        if fiber_count.get(f, 0) != expected:
            count_ok = False
            mismatches.append((f.edges(), fiber_count.get(f, 0), expected))
        if fiber_tau.get(f, Fraction(0)) != m:
            mass_ok = False
    if set(fiber_count) - all_forests:
        count_ok = False
    return FiberReport(g0.to_graph6(), w, seen, len(fiber_count), count_ok, mass_ok,
                       _same_law(tau_kappa, mass_kappa), mismatches)


def _same_law(a: dict, b: dict) -> bool:
    ta, tb = sum(a.values()), sum(b.values())
    return {k: v / ta for k, v in a.items() if v} == {k: v / tb for k, v in b.items() if v}


def _fiber_check_compiled(g0: Graph, lam: Fraction, nu: Fraction) -> FiberReport:
    import numpy as np

    from ._fiber_kernel import fiber_tally
    from .classes import FORESTS, census

    n = g0.n
    comps = component_masks(n, g0.rows)
    k = len(comps)
    label = np.zeros(n, np.int64)
    for idx, c in enumerate(comps):
        for v in range(n):
            if c >> v & 1:
                label[v] = idx
    w = tuple(c.bit_count() for c in comps)
    cross = [(i, j) for i in range(n) for j in range(i + 1, n) if label[i] != label[j]]
    cross_mask = np.array([sum(1 << j for j in range(n) if label[j] != label[i])
                           for i in range(n)], np.int64)
    seen, nkeys, inconsistent, nonforest, mismatches, wsum, ek = fiber_tally(
        n, np.array(g0.rows, np.int64), label, k,
        np.array([c[0] for c in cross], np.int64), np.array([c[1] for c in cross], np.int64),
        cross_mask, np.array(w, np.int64))
    # the keys hit every forest on [k] exactly when there are as many of them as forests
    n_forests = sum(census(FORESTS, k).values())
    onto = nkeys == n_forests and nonforest == 0
    tau_kappa = defaultdict(Fraction)
    for e0 in range(n + 1):
        for kap in range(n + 1):
            if ek[e0, kap]:
                tau_kappa[kap] += int(ek[e0, kap]) * lam ** e0 * nu ** kap
    # with the count identity in hand, fiber tau = count * lam^e nu^kappa = mass(F)
    mass_kappa = {kap: int(wsum[kap]) * lam ** (k - kap) * nu ** kap
                  for kap in range(1, k + 1) if wsum[kap]}
    count_ok = onto and mismatches == 0
    return FiberReport(g0.to_graph6(), w, int(seen), int(nkeys), count_ok,
                       count_ok and inconsistent == 0, _same_law(tau_kappa, mass_kappa),
                       [] if count_ok else [("compiled", int(mismatches), int(nonforest))])


# --------------------------------------------------------------------------
# forest laws and the two exact identities


def forest_kappa_masses(w: Sequence[int], lam, nu) -> dict[int, Fraction]:
    """Total mass of forests on [n] with i components, for each i."""
    w = weight_vector(w)
    lam, nu = Fraction(lam), Fraction(nu)
    out = defaultdict(Fraction)
    for (deg, k), count in forest_shapes(len(w)):
        out[k] += count * _shape_mass(deg, k, w, lam, nu)
    return dict(sorted(out.items()))


@dataclass
class Fn2Report:
    n: int
    weights: tuple
    lhs: Fraction  # Pr(R^F has 2 components)
    rhs: Fraction
    cut_sum: Fraction  # sum_k E[c(R^T,k)] / (k (W-k)), tabulated only
    sumflow_lhs: Fraction
    sumflow_rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and self.sumflow_lhs == self.sumflow_rhs


def verify_fn2_identity(n: int, w: Sequence[int], lam, nu) -> Fn2Report:
    """Two-component probability equals Pr(tree) * (nu/lambda) * E[cut sum over R^T]."""
    w = weight_vector(w)
    if len(w) != n:
        raise ValueError("weight vector length must equal n")
    if n > FOREST_CAP:
        raise CapExceeded(f"forest enumeration is capped at n={FOREST_CAP}")
    lam, nu = Fraction(lam), Fraction(nu)
    forests = list(forests_on(n))
    masses = {f: forest_mass(f, w, lam, nu) for f in forests}
    K = sum(masses.values())
    by_k = defaultdict(list)
    for f in forests:
        by_k[kappa(f)].append(f)
    p1 = sum(masses[f] for f in by_k[1]) / K
    p2 = sum((masses[f] for f in by_k[2]), Fraction(0)) / K
    tree_total = sum(masses[t] for t in by_k[1])
    expected_cut = sum((masses[t] / tree_total * _cut_sum(t, w) for t in by_k[1]), Fraction(0))
    rhs = p1 * (nu / lam) * expected_cut

    # flow from each 1-component forest F' into each 2-component F = F' - uv
    flow = Fraction(0)
    for t in by_k[1]:
        for u, v in t.edges():
            f = t.remove_edge(u, v)
            flow += (nu / lam) * masses[t] / cross_w(f, w)
    two_mass = sum((masses[f] for f in by_k[2]), Fraction(0))
    return Fn2Report(n, w, p2, rhs, expected_cut, flow, two_mass)


@dataclass
class SmallnReport:
    n: int
    weights: tuple
    rows: list  # (i, Pr(i+1), bound, holds)

    @property
    def holds(self) -> bool:
        return all(r[3] for r in self.rows)


def verify_smalln25(n: int, w: Sequence[int], lam, nu) -> SmallnReport:
    """Pr(i+1 components) <= Pr(i components)/i * (n/W) * (nu/lambda), for each i."""
    w = weight_vector(w)
    if len(w) != n:
        raise ValueError("weight vector length must equal n")
    if n > FOREST_CAP:
        raise CapExceeded(f"forest enumeration is capped at n={FOREST_CAP}")
    lam, nu = Fraction(lam), Fraction(nu)
    masses = forest_kappa_masses(w, lam, nu)
    K = sum(masses.values())
    W = sum(w)
    rows = []
    for i in range(1, n):
        lhs = masses.get(i + 1, Fraction(0)) / K
        bound = masses.get(i, Fraction(0)) / K / i * Fraction(n, W) * (nu / lam)
        rows.append((i, lhs, bound, lhs <= bound))
    return SmallnReport(n, w, rows)


def has_balanced_union(f: Graph, w: Sequence[int]) -> bool:
    """Some union of components has weight in [wfrag/2, W/2] (disconnected f)."""
    comp_w = [sum(w[v - 1] for v in c) for c in components(f)]
    W = sum(comp_w)
    z = W - max(comp_w)
    for r in range(1, len(comp_w)):
        for sub in combinations(comp_w, r):
            s = sum(sub)
            if 2 * s >= z and 2 * s <= W:
                return True
    return False
