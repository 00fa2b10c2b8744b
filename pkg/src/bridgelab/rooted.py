"""Rooted graphs: each graph counts once per choice of one root per component.

Roots are never materialized. tau ignores roots, so the rooted mass of G is
tau(G) times the product of its component sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .classes import FORESTS, GraphClass, require_hypothesis
from .dominance import POISSON_TOL, Distribution
from .engine import Theorem1Report, kappa_class_masses, statistic_distribution, verify_theorem1
from .weighting import UNIFORM, Weighting


@dataclass
class RootedLaw:
    cls: str
    n: int
    weighting: dict
    pmf_kappa: Distribution

    @property
    def p_connected(self) -> Fraction:
        return self.pmf_kappa.prob(1)


def rooted_kappa_distribution(cls: GraphClass, n: int, w: Weighting = UNIFORM) -> RootedLaw:
    return RootedLaw(cls.name, n, w.describe(),
                     statistic_distribution(cls, n, w, "kappa", rooted=True))


def rooted_forest_connectivity(n: int) -> Fraction:
    """(n/(n+1))^(n-1), the uniform rooted-forest connection probability."""
    return Fraction(n, n + 1) ** (n - 1)


@dataclass
class RootedRatioRow:
    k: int
    lhs: Fraction  # tau of rooted graphs with k+1 components
    rhs: Fraction  # ((n-k)/n) (nu/(lambda k)) tau of rooted graphs with k components
    holds: bool
    equal: bool


@dataclass
class RootedRatioReport:
    cls: str
    n: int
    weighting: dict
    hypothesis: str
    rows: list = field(default_factory=list)
    equality_required: bool = False

    @property
    def holds(self) -> bool:
        ok = all(r.holds for r in self.rows)
        if self.equality_required:
            ok = ok and all(r.equal for r in self.rows)
        return ok


def verify_rooted_ratio(cls: GraphClass, n: int, w: Weighting = UNIFORM,
                        strict: bool = True) -> RootedRatioReport:
    """Per-k check of the rooted ratio bound; forests must meet it with equality."""
    hyp = require_hypothesis(cls, n, strict=strict)
    masses = kappa_class_masses(cls, n, w, rooted=True)
    rep = RootedRatioReport(cls.name, n, w.describe(), hyp, equality_required=cls.name == FORESTS.name)
    for k in range(1, n):
        lhs = masses.get(k + 1, Fraction(0))
        rhs = Fraction(n - k, n) * w.nu / (w.lam * k) * masses.get(k, Fraction(0))
        rep.rows.append(RootedRatioRow(k, lhs, rhs, lhs <= rhs, lhs == rhs))
    return rep


def rooted_forest_recurrence_pmf(n: int, w: Weighting = UNIFORM) -> Distribution:
    """kappa law of rooted forests built from the equality case of the ratio bound alone."""
    masses = {1: Fraction(1)}
    for k in range(1, n):
        masses[k + 1] = Fraction(n - k, n) * w.nu / (w.lam * k) * masses[k]
    return Distribution.from_masses(masses)


def verify_theorem7(cls: GraphClass, n: int, w: Weighting = UNIFORM,
                    tol: float = POISSON_TOL, strict: bool = True) -> Theorem1Report:
    """Dominance, connectivity and mean bounds for the rooted law."""
    return verify_theorem1(cls, n, w, rooted=True, tol=tol, strict=strict)


@dataclass
class RootedFragRow:
    n: int
    e_frag: Fraction
    sqrt_n: float
    ratio: float  # e_frag / sqrt(n), informational


def rooted_frag_trend(n_range, w: Weighting = UNIFORM) -> list[RootedFragRow]:
    """Exact E[frag] under the rooted forest law per n, beside sqrt(n)."""
    rows = []
    for n in n_range:
        e = statistic_distribution(FORESTS, n, w, "frag", rooted=True).mean()
        s = math.sqrt(n)
        rows.append(RootedFragRow(n, e, s, float(e) / s))
    return rows


@dataclass
class AsideRow:
    k: int
    unrooted: Fraction        # tau(A^{k+1})
    rooted: Fraction          # tau(A^{k+1,o})
    link_a: bool              # (n-k) tau(A^{k+1}) <= tau(A^{k+1,o})
    series_term: Fraction     # alpha^k / k! tau(C_n)
    link_c: bool              # tau(A^{k+1}) <= series_term


@dataclass
class AsideReport:
    cls: str
    n: int
    weighting: dict
    hypothesis: str
    rows: list
    total: Fraction           # tau(A_n)
    connected: Fraction       # tau(C_n)
    series_bound: Fraction    # sum_{k < n} alpha^k/k! tau(C_n), exact
    exp_bound: float          # e^alpha tau(C_n)

    @property
    def series_holds(self) -> bool:
        return self.total <= self.series_bound

    @property
    def exp_holds(self) -> bool:
        return float(self.total) <= self.exp_bound * (1 + 1e-12)

    @property
    def holds(self) -> bool:
        return (all(r.link_a and r.link_c for r in self.rows)
                and self.series_holds and self.exp_holds)


def unrooted_aside_check(cls: GraphClass, n: int, w: Weighting = UNIFORM,
                         strict: bool = True) -> AsideReport:
    """Each link of the rooted route to tau(A_n) <= e^{nu/lambda} tau(C_n)."""
    hyp = require_hypothesis(cls, n, strict=strict)
    plain = kappa_class_masses(cls, n, w)
    rooted = kappa_class_masses(cls, n, w, rooted=True)
    conn = plain.get(1, Fraction(0))
    alpha = w.ratio
    rows = []
    series = Fraction(0)
    for k in range(n):
        term = alpha ** k / math.factorial(k) * conn
        series += term
        u = plain.get(k + 1, Fraction(0))
        r = rooted.get(k + 1, Fraction(0))
        rows.append(AsideRow(k, u, r, (n - k) * u <= r, term, u <= term))
    total = sum(plain.values(), Fraction(0))
    return AsideReport(cls.name, n, w.describe(), hyp, rows, total, conn, series,
                       math.exp(float(alpha)) * float(conn))
