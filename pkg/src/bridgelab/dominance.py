"""Exact integer-valued laws, Poisson tails and stochastic-order checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

Real = Union[float, Fraction]

POISSON_TOL = 1e-9
NEAR_BOUNDARY = 1e-6


@dataclass(frozen=True)
class Distribution:
    """Normalized exact pmf on integers."""

    pmf: Mapping[int, Fraction]

    def __post_init__(self):
        clean = {int(k): Fraction(v) for k, v in self.pmf.items() if v != 0}
        if any(v < 0 for v in clean.values()):
            raise ValueError("negative probability mass")
        if sum(clean.values()) != 1:
            raise ValueError(f"masses sum to {sum(clean.values())}, not 1")
        object.__setattr__(self, "pmf", dict(sorted(clean.items())))

    @classmethod
    def from_masses(cls, masses: Mapping[int, Fraction]) -> "Distribution":
        total = sum(masses.values(), Fraction(0))
        if total == 0:
            raise ValueError("zero total mass")
        return cls({k: Fraction(v) / total for k, v in masses.items()})

    @property
    def support(self) -> tuple[int, int]:
        keys = list(self.pmf)
        return keys[0], keys[-1]

    def prob(self, k: int) -> Fraction:
        return self.pmf.get(k, Fraction(0))

    def tail(self, t: int) -> Fraction:
        """Pr(X >= t)."""
        return sum((v for k, v in self.pmf.items() if k >= t), Fraction(0))

    def cdf(self, t: int) -> Fraction:
        return sum((v for k, v in self.pmf.items() if k <= t), Fraction(0))

    def mean(self) -> Fraction:
        return sum((k * v for k, v in self.pmf.items()), Fraction(0))

    def shift(self, by: int) -> "Distribution":
        return Distribution({k + by: v for k, v in self.pmf.items()})


def poisson_pmf(alpha: float, k: int) -> float:
    if k < 0:
        return 0.0
    if alpha == 0:
        return 1.0 if k == 0 else 0.0
    return math.exp(-alpha + k * math.log(alpha) - math.lgamma(k + 1))


def poisson_tail(alpha: Real, t: int) -> float:
    """Pr(Po(alpha) >= t), summing the tail series from t upward."""
    alpha = float(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if t <= 0:
        return 1.0
    term = poisson_pmf(alpha, t)
    terms = [term]
    k = t
    while True:
        term *= alpha / (k + 1)
        k += 1
        terms.append(term)
        if k > alpha and term < 1e-18 * terms[0]:
            break
        if term == 0.0:
            break
    return min(1.0, math.fsum(terms))


def poisson_tail_fn(alpha: Real) -> Callable[[int], float]:
    return lambda t: poisson_tail(alpha, t)


@dataclass
class DominanceReport:
    verdict: str
    mode: str
    thresholds: list = field(default_factory=list)  # (t, lhs_tail, rhs_tail, margin)
    witness: Optional[int] = None
    near_boundary: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "witness": self.witness,
            "near_boundary": self.near_boundary,
            "thresholds": [
                {"t": t, "lhs_tail": lhs, "rhs_tail": rhs, "margin": m}
                for t, lhs, rhs, m in self.thresholds
            ],
        }


def stochastic_leq(x: Distribution, y_tail: Callable[[int], float],
                   tol: float = POISSON_TOL) -> DominanceReport:
    """Check Pr(X >= t) <= y_tail(t) + tol for t across the support of X."""
    rows = []
    witness = None
    near = []
    for t in range(0, x.support[1] + 1):
        lhs = x.tail(t)
        rhs = float(y_tail(t))
        margin = rhs - float(lhs)
        rows.append((t, lhs, rhs, margin))
        if margin < -tol and witness is None:
            witness = t
        if abs(margin) < NEAR_BOUNDARY:
            near.append(t)
    return DominanceReport("fails" if witness is not None else "holds", "exact_vs_poisson",
                           rows, witness, near)


def stochastic_leq_exact(x: Distribution, y: Distribution) -> DominanceReport:
    """X <=_s Y with rational tails and zero tolerance."""
    rows = []
    witness = None
    top = max(x.support[1], y.support[1])
    for t in range(min(0, x.support[0], y.support[0]), top + 1):
        lhs, rhs = x.tail(t), y.tail(t)
        rows.append((t, lhs, rhs, rhs - lhs))
        if lhs > rhs and witness is None:
            witness = t
    report = DominanceReport("fails" if witness is not None else "holds", "exact_vs_exact",
                             rows, witness)
    if report.holds and x.mean() > y.mean():
        raise AssertionError("dominance holds but E X > E Y; tail computation is broken")
    return report


@dataclass
class RatioCheck:
    holds: bool
    first_violation: Optional[int]
    conclusion_holds: Optional[bool] = None  # truncated tail bound, checked when holds
    conclusion_margins: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


def ratio_condition_check(x: Distribution, alpha: Real, k0: int,
                          tol: float = POISSON_TOL) -> RatioCheck:
    """Pr(X=k+1) <= alpha/(k+1) Pr(X=k) for k < k0, compared exactly.

    When the ratio condition holds, the truncated tail bound
    Pr(k0 >= X >= k) <= Pr(Po(alpha) >= k) is checked for k = 0..k0.
    """
    a = Fraction(alpha)
    for k in range(k0):
        if (k + 1) * x.prob(k + 1) > a * x.prob(k):
            return RatioCheck(False, k)
    margins = []
    ok = True
    for k in range(k0 + 1):
        lhs = sum((x.prob(j) for j in range(k, k0 + 1)), Fraction(0))
        margin = poisson_tail(alpha, k) - float(lhs)
        margins.append((k, margin))
        if margin < -tol:
            ok = False
    return RatioCheck(True, None, ok, margins)
