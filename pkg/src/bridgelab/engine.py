"""Exact laws of kappa, frag and e0 under tau, and the finite-n verifiers."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .classes import FORESTS, GraphClass, census, iter_rows, require_hypothesis
from .dominance import (
    POISSON_TOL,
    Distribution,
    DominanceReport,
    poisson_tail_fn,
    ratio_condition_check,
    stochastic_leq,
    stochastic_leq_exact,
)
from .errors import DegenerateDistribution, HypothesisError
from .graph import Graph, profile
from .weighting import F_TABLE, Weighting, tau

STATS = ("kappa", "frag", "bridges")


def stat_value(prof, stat: str, n: int) -> int:
    sizes, e0, _ = prof
    if stat == "kappa":
        return len(sizes)
    if stat == "frag":
        return n - sizes[0]
    if stat == "bridges":
        return e0
    raise ValueError(f"unknown statistic {stat!r}; expected one of {STATS}")


def rooting_count(prof) -> int:
    """Number of ways to pick one root per component."""
    return math.prod(prof[0])


@lru_cache(maxsize=512)
def _profile_masses(cls: GraphClass, n: int, w: Weighting, rooted: bool) -> tuple:
    masses = defaultdict(Fraction)
    if w.f == F_TABLE:
        for rows in iter_rows(cls, n):
            masses[profile(n, rows)] += tau(Graph.from_rows(n, rows), w)
    else:
        for prof, count in census(cls, n).items():
            masses[prof] += w.profile_mass(prof) * count
    if rooted:
        for prof in masses:
            masses[prof] *= rooting_count(prof)
    total = sum(masses.values(), Fraction(0))
    if total == 0:
        raise DegenerateDistribution(f"{cls.name}_{n} has zero total mass under {w.describe()}")
    return tuple(masses.items()), total


def profile_masses(cls: GraphClass, n: int, w: Weighting, rooted: bool = False):
    """Unnormalized mass per census profile, and the total."""
    if w.f == F_TABLE:
        # table weightings hash without their table, so they bypass the cache
        return _profile_masses.__wrapped__(cls, n, w, rooted)
    return _profile_masses(cls, n, w, rooted)


def statistic_distribution(cls: GraphClass, n: int, w: Weighting, stat: str,
                           rooted: bool = False) -> Distribution:
    items, total = profile_masses(cls, n, w, rooted)
    pmf = defaultdict(Fraction)
    for prof, mass in items:
        pmf[stat_value(prof, stat, n)] += mass
    return Distribution({k: v / total for k, v in pmf.items()})


def kappa_class_masses(cls: GraphClass, n: int, w: Weighting, rooted: bool = False) -> dict:
    """tau(A_n^k) (or its rooted version) for each component count k."""
    items, _ = profile_masses(cls, n, w, rooted)
    out = defaultdict(Fraction)
    for prof, mass in items:
        out[len(prof[0])] += mass
    return dict(sorted(out.items()))


# --------------------------------------------------------------------------
# verifiers


@dataclass
class Theorem1Report:
    cls: str
    n: int
    weighting: dict
    hypothesis: str
    rooted: bool
    alpha: Fraction
    ratio_holds: bool
    ratio_violations: list
    dominance: DominanceReport
    po1_conclusion_holds: bool
    p_connected: Fraction
    conn_bound: float
    conn_holds: bool
    e_kappa: Fraction
    e_kappa_bound: Fraction
    e_kappa_holds: bool

    @property
    def holds(self) -> bool:
        return (self.ratio_holds and self.dominance.holds and self.conn_holds
                and self.e_kappa_holds and self.po1_conclusion_holds)


def verify_theorem1(cls: GraphClass, n: int, w: Weighting, rooted: bool = False,
                    tol: float = POISSON_TOL, strict: bool = True) -> Theorem1Report:
    """kappa - 1 is dominated by Po(nu/lambda); connectivity and mean bounds follow."""
    hyp = require_hypothesis(cls, n, strict=strict)
    law = statistic_distribution(cls, n, w, "kappa", rooted)
    alpha = w.ratio
    violations = []
    for k in range(1, n):
        # Pr(k+1) <= nu/(lambda k) Pr(k), cross-multiplied
        if law.prob(k + 1) * w.lam * k > w.nu * law.prob(k):
            violations.append(k)
    x = law.shift(-1)
    dom = stochastic_leq(x, poisson_tail_fn(alpha), tol)
    po1 = ratio_condition_check(x, alpha, max(n - 1, 1), tol)
    p_conn = law.prob(1)
    bound = math.exp(-float(alpha))
    e_kappa = law.mean()
    return Theorem1Report(
        cls=cls.name, n=n, weighting=w.describe(), hypothesis=hyp, rooted=rooted, alpha=alpha,
        ratio_holds=not violations, ratio_violations=violations, dominance=dom,
        po1_conclusion_holds=bool(po1.conclusion_holds) if po1.holds else not violations,
        p_connected=p_conn, conn_bound=bound, conn_holds=float(p_conn) >= bound - tol,
        e_kappa=e_kappa, e_kappa_bound=1 + alpha, e_kappa_holds=e_kappa <= 1 + alpha,
    )


@dataclass
class Theorem2Report:
    cls: str
    n: int
    weighting: dict
    hypothesis: str
    e_frag: Fraction
    bound: Fraction
    e_bridges: Fraction
    lemma_bound: Fraction  # (2/n)(nu/lambda) E[e0], the intermediate bound

    @property
    def holds(self) -> bool:
        return self.e_frag < self.bound and self.e_frag <= self.lemma_bound


def verify_theorem2(cls: GraphClass, n: int, w: Weighting,
                    strict: bool = True) -> Theorem2Report:
    """E[frag] < 2 nu / lambda, exactly."""
    hyp = require_hypothesis(cls, n, strict=strict)
    e_frag = statistic_distribution(cls, n, w, "frag").mean()
    e_bridges = statistic_distribution(cls, n, w, "bridges").mean()
    return Theorem2Report(cls.name, n, w.describe(), hyp, e_frag, 2 * w.ratio, e_bridges,
                          Fraction(2, n) * w.ratio * e_bridges)


@dataclass
class TrendRow:
    n: int
    p_connected: Fraction
    e_kappa: Fraction
    e_frag: Fraction
    hypothesis: str


@dataclass
class TrendTable:
    cls: str
    weighting: dict
    rows: list
    ref_conn: float
    ref_kappa: float
    ref_frag: float

    CSV_HEADER = "n,p_connected,e_kappa,e_frag,ref_conn,ref_kappa,ref_frag"

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        for r in self.rows:
            lines.append(",".join([
                str(r.n), _q(r.p_connected), _q(r.e_kappa), _q(r.e_frag),
                repr(self.ref_conn), repr(self.ref_kappa), repr(self.ref_frag),
            ]))
        return "\n".join(lines) + "\n"


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def trend_report(cls: GraphClass, w: Weighting, n_range) -> TrendTable:
    """Exact per-n connectivity, E[kappa], E[frag] beside the limiting constants."""
    half = float(w.ratio) / 2
    rows = []
    for n in n_range:
        hyp = require_hypothesis(cls, n, alterable=True)
        kap = statistic_distribution(cls, n, w, "kappa")
        rows.append(TrendRow(n, kap.prob(1), kap.mean(),
                             statistic_distribution(cls, n, w, "frag").mean(), hyp))
    return TrendTable(cls.name, w.describe(), rows, math.exp(-half), 1 + half, float(w.ratio))


@dataclass
class ConjectureRow:
    n: int
    hypothesis_addable: str
    hypothesis_alterable: Optional[str]
    kappa_vs_half_poisson: DominanceReport
    e_frag: Fraction
    e_frag_bound: Fraction
    frag_bound_holds: bool
    kappa_vs_forests: DominanceReport
    e_frag_forests: Fraction
    frag_vs_forests_holds: bool


@dataclass
class ConjectureReport:
    cls: str
    weighting: dict
    rows: list = field(default_factory=list)
    note: str = ("finite-n evidence only: 'asymptotically' statements have no finite-n "
                 "content, so only per-n margins are reported")


def conjecture_explorer(cls: GraphClass, w: Weighting, n_range,
                        strict: bool = True) -> ConjectureReport:
    """Per-n checks of the open conjectures against exact laws (evidence, not proof)."""
    report = ConjectureReport(cls.name, w.describe())
    half = w.ratio / 2
    for n in n_range:
        hyp = require_hypothesis(cls, n, strict=strict)
        try:
            alt = require_hypothesis(cls, n, alterable=True)
        except HypothesisError:
            alt = None
        kap = statistic_distribution(cls, n, w, "kappa")
        e_frag = statistic_distribution(cls, n, w, "frag").mean()
        kap_f = statistic_distribution(FORESTS, n, w, "kappa")
        e_frag_f = statistic_distribution(FORESTS, n, w, "frag").mean()
        report.rows.append(ConjectureRow(
            n=n, hypothesis_addable=hyp, hypothesis_alterable=alt,
            kappa_vs_half_poisson=stochastic_leq(kap.shift(-1), poisson_tail_fn(half)),
            e_frag=e_frag, e_frag_bound=w.ratio, frag_bound_holds=e_frag <= w.ratio,
            kappa_vs_forests=stochastic_leq_exact(kap, kap_f),
            e_frag_forests=e_frag_f, frag_vs_forests_holds=e_frag <= e_frag_f,
        ))
    return report
