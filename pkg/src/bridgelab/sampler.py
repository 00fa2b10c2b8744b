"""Metropolis chain on a graph class, targeting Pr(G) proportional to tau(G).

Proposals toggle a uniformly random vertex pair, so the proposal is symmetric
and the acceptance ratio is the plain mass ratio. Only the changes in bridges,
components and edges are computed per step.
"""

from __future__ import annotations

import logging
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .classes import GraphClass, require_hypothesis
from .engine import statistic_distribution
from .errors import CapExceeded, HypothesisError
from .graph import Graph, bridge_pairs, component_masks
from .weighting import F_CLUSTER, F_TABLE, Weighting

log = logging.getLogger(__name__)

CHI2_ALPHA = 0.001


@dataclass
class ChainConfig:
    cls: GraphClass
    n: int
    weighting: Weighting
    steps: int
    burn_in: int = 0
    thinning: int = 1
    seed: int = 0
    initial: Optional[Graph] = None  # None means the empty graph
    allow_unchecked: bool = False    # run even if deletion closure is unknown

    def __post_init__(self):
        if self.steps <= 0 or self.thinning <= 0 or self.burn_in < 0:
            raise ValueError("steps and thinning must be positive, burn_in nonnegative")
        if self.steps < self.burn_in:
            raise ValueError("steps must be at least burn_in")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.n < 1:
            raise ValueError("n must be positive")

    def describe(self) -> dict:
        return {
            "class": self.cls.name, "n": self.n, "weighting": self.weighting.describe(),
            "steps": self.steps, "burn_in": self.burn_in, "thinning": self.thinning,
            "seed": self.seed,
            "initial": None if self.initial is None else self.initial.to_graph6(),
        }


@dataclass
class SampleSummary:
    config: dict
    samples: int
    acceptance_rate: float
    kappa: dict = field(default_factory=dict)    # value -> Fraction
    frag: dict = field(default_factory=dict)
    bridges: dict = field(default_factory=dict)

    def p_connected(self) -> Fraction:
        return self.kappa.get(1, Fraction(0))


class ChainState:
    """Rows plus the bridge set, component masks and edge count of the current graph."""

    __slots__ = ("n", "rows", "bridges", "comps", "edges")

    def __init__(self, n: int, rows):
        self.n = n
        self.rows = list(rows)
        self.comps = component_masks(n, self.rows)
        self.bridges = set(bridge_pairs(n, self.rows))
        self.edges = sum(r.bit_count() for r in self.rows) // 2

    @property
    def kappa(self) -> int:
        return len(self.comps)

    @property
    def e0(self) -> int:
        return len(self.bridges)

    def comp_of(self, v: int) -> int:
        for c in self.comps:
            if c >> v & 1:
                return c
        raise AssertionError("vertex outside every component")

    def graph(self) -> Graph:
        return Graph.from_rows(self.n, self.rows)


def toggle(state: ChainState, i: int, j: int):
    """Toggle pair (i, j) (0-based). Returns the new rows, bridge set, components
    and the changes (d_e0, d_kappa, d_edges), touching only the affected component."""
    n = state.n
    rows = list(state.rows)
    cu = state.comp_of(i)
    bridges = set(state.bridges)
    comps = list(state.comps)
    pair = (i, j) if i < j else (j, i)
    if rows[i] >> j & 1:
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
        d_edges = -1
        if pair in state.bridges:
            bridges.discard(pair)
            comps.remove(cu)
            comps += component_masks_within(n, rows, cu)
        else:
            # a cycle edge: bridges can appear only inside this component
            bridges = {b for b in bridges if not cu >> b[0] & 1}
            bridges.update(bridge_pairs(n, rows, within=cu))
    else:
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        d_edges = 1
        if cu >> j & 1:
            # closes a cycle: bridges can disappear only inside this component
            bridges = {b for b in bridges if not cu >> b[0] & 1}
            bridges.update(bridge_pairs(n, rows, within=cu))
        else:
            cv = state.comp_of(j)
            comps.remove(cu)
            comps.remove(cv)
            comps.append(cu | cv)
            bridges.add(pair)
    return rows, bridges, comps, (len(bridges) - state.e0, len(comps) - state.kappa, d_edges)


def component_masks_within(n: int, rows, within: int) -> list[int]:
    out = []
    todo = within
    while todo:
        low = todo & -todo
        comp = frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = rows[b.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        todo &= ~comp
    return out


def mass_ratio(w: Weighting, delta) -> Fraction:
    """tau(G')/tau(G) from the local changes alone."""
    d_e0, d_k, d_e = delta
    r = w.lam ** d_e0 * w.nu ** d_k
    if w.f == F_CLUSTER:
        r *= w.lam ** (d_e - d_e0)
    return r


def _check_runnable(cfg: ChainConfig) -> Graph:
    if cfg.weighting.f == F_TABLE:
        raise ValueError("table weightings are not supported by the sampler")
    if not cfg.cls.deletion_closed:
        msg = f"{cfg.cls.name} is not known to be closed under edge deletion"
        if not cfg.allow_unchecked:
            raise HypothesisError(msg + "; the chain may not be irreducible")
        log.warning("%s; running anyway", msg)
    g = cfg.initial if cfg.initial is not None else Graph(cfg.n)
    if g.n != cfg.n or not cfg.cls.contains_rows(cfg.n, g.rows):
        raise ValueError("initial graph is not in the class")
    return g


def run_chain(cfg: ChainConfig, stream=None) -> SampleSummary:
    """Run the chain; record kappa, frag and bridges every `thinning` steps after burn-in.

    ``stream`` may be a text file receiving each recorded graph as a graph6 line.
    """
    g = _check_runnable(cfg)
    n, w, cls = cfg.n, cfg.weighting, cfg.cls
    rng = random.Random(cfg.seed)
    state = ChainState(n, g.rows)
    pair_list = [(i, j) for j in range(n) for i in range(j)]
    ratio_cache: dict = {}
    kap, frg, brd = Counter(), Counter(), Counter()
    accepted = 0
    recorded = 0
    for step in range(1, cfg.steps + 1):
        if pair_list:
            i, j = pair_list[rng.randrange(len(pair_list))]
            u = rng.random()
            rows, bridges, comps, delta = toggle(state, i, j)
            if cls.contains_rows(n, rows):
                r = ratio_cache.get(delta)
                if r is None:
                    r = ratio_cache[delta] = float(mass_ratio(w, delta))
                if u < r:
                    state.rows, state.bridges, state.comps = rows, bridges, comps
                    state.edges += delta[2]
                    accepted += 1
        if step > cfg.burn_in and (step - cfg.burn_in) % cfg.thinning == 0:
            kap[state.kappa] += 1
            frg[n - max(c.bit_count() for c in state.comps)] += 1
            brd[state.e0] += 1
            recorded += 1
            if stream is not None:
                stream.write(state.graph().to_graph6() + "\n")
    if recorded == 0:
        raise ValueError("no samples recorded; increase steps or lower burn_in")

    def norm(c):
        return {k: Fraction(v, recorded) for k, v in sorted(c.items())}

    return SampleSummary(cfg.describe(), recorded, accepted / cfg.steps,
                         norm(kap), norm(frg), norm(brd))


# --------------------------------------------------------------------------
# validation against the exact law


def transition_probability(cls: GraphClass, w: Weighting, g: Graph, h: Graph) -> Fraction:
    """Exact one-step probability P(g -> h) for g != h differing in one pair."""
    from .weighting import tau

    diff = g.mask ^ h.mask
    if g.n != h.n or diff.bit_count() != 1:
        raise ValueError("g and h must differ in exactly one vertex pair")
    if not cls.contains_rows(h.n, h.rows):
        return Fraction(0)
    return Fraction(1, math.comb(g.n, 2)) * min(Fraction(1), tau(h, w) / tau(g, w))


@dataclass
class ChiSquareReport:
    statistic: float
    dof: int
    p_value: float
    samples: int
    bins: list  # (kappa values merged, observed, expected)
    alpha: float = CHI2_ALPHA

    @property
    def passed(self) -> bool:
        return self.p_value >= self.alpha


def chi_square_validation(cls: GraphClass, n: int, w: Weighting, cfg: ChainConfig,
                          target: Optional[Weighting] = None) -> ChiSquareReport:
    """Chi-square of the chain's kappa counts against the exact kappa pmf.

    ``target`` overrides the weighting of the exact law (used by negative
    controls, where the chain runs with a different weighting).
    """
    from scipy.stats import chi2

    if n > cls.enum_cap:
        raise CapExceeded(f"exact law for {cls.name} needs n <= {cls.enum_cap}")
    require_hypothesis(cls, n)
    exact = statistic_distribution(cls, n, target or w, "kappa")
    summary = run_chain(cfg)
    m = summary.samples
    observed = {k: v * m for k, v in summary.kappa.items()}
    # merge bins from the top down until every expected count is at least 5
    bins = []
    cur_keys, cur_obs, cur_exp = [], 0.0, 0.0
    for k in sorted(set(exact.pmf) | set(observed), reverse=True):
        cur_keys.append(k)
        cur_obs += float(observed.get(k, 0))
        cur_exp += float(exact.prob(k)) * m
        if cur_exp >= 5:
            bins.append((cur_keys, cur_obs, cur_exp))
            cur_keys, cur_obs, cur_exp = [], 0.0, 0.0
    if cur_keys:
        if bins:
            keys, o, e = bins.pop()
            bins.append((keys + cur_keys, o + cur_obs, e + cur_exp))
        else:
            bins.append((cur_keys, cur_obs, cur_exp))
    stat = 0.0
    for _, o, e in bins:
        if e > 0:
            stat += (o - e) ** 2 / e
        elif o > 0:
            stat = math.inf
    dof = max(len(bins) - 1, 1)
    p = float(chi2.sf(stat, dof)) if math.isfinite(stat) else 0.0
    return ChiSquareReport(stat, dof, p, m, bins)
