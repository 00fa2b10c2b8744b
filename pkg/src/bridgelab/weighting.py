"""Weightings (lambda, nu, f) and the graph weight tau."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

from .classes import GraphClass, census, iter_rows
from .errors import DegenerateDistribution
from .graph import Graph, encode_graph6, kappa, num_bridges, skeleton

Rational = Union[int, str, Fraction]

F_ONE = "one"
F_CLUSTER = "cluster"
F_TABLE = "table"


def as_fraction(x: Rational) -> Fraction:
    if isinstance(x, float):
        raise TypeError("weights must be exact rationals, not floats")
    return Fraction(x)


@dataclass(frozen=True)
class Weighting:
    lam: Fraction
    nu: Fraction
    f: str = F_ONE
    table: Optional[Mapping[str, Fraction]] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "lam", as_fraction(self.lam))
        object.__setattr__(self, "nu", as_fraction(self.nu))
        if self.lam <= 0 or self.nu <= 0:
            raise ValueError("lambda and nu must be positive")
        if self.f not in (F_ONE, F_CLUSTER, F_TABLE):
            raise ValueError(f"unknown bridge-free factor {self.f!r}")
        if self.f == F_TABLE:
            if self.table is None:
                raise ValueError("f=table needs a table")
            tab = {k: as_fraction(v) for k, v in self.table.items()}
            if any(v < 0 for v in tab.values()):
                raise ValueError("f table values must be nonnegative")
            object.__setattr__(self, "table", tab)

    @property
    def ratio(self) -> Fraction:
        """nu / lambda, the Poisson parameter in the non-asymptotic bounds."""
        return self.nu / self.lam

    def swapped(self) -> "Weighting":
        return Weighting(self.nu, self.lam, self.f, self.table)

    def f_value(self, bridge_free: Graph) -> Fraction:
        if self.f == F_ONE:
            return Fraction(1)
        if self.f == F_CLUSTER:
            return self.lam ** bridge_free.num_edges()
        key = encode_graph6(bridge_free)
        try:
            return self.table[key]
        except KeyError:
            raise KeyError(f"f table has no entry for bridge-free graph {key}") from None

    def profile_mass(self, prof) -> Fraction:
        """tau of any graph with census profile (sizes, bridges, edges)."""
        if self.f == F_TABLE:
            raise ValueError("table weightings depend on the skeleton, not just the profile")
        sizes, e0, e = prof
        mass = self.lam ** e0 * self.nu ** len(sizes)
        if self.f == F_CLUSTER:
            mass *= self.lam ** (e - e0)
        return mass

    def describe(self) -> dict:
        return {"lambda": _fmt(self.lam), "nu": _fmt(self.nu), "f": self.f}

    @classmethod
    def from_table_file(cls, lam, nu, path) -> "Weighting":
        with open(path) as fh:
            raw = json.load(fh)
        return cls(lam, nu, F_TABLE, {k: Fraction(v) for k, v in raw.items()})


UNIFORM = Weighting(1, 1)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def tau(g: Graph, w: Weighting) -> Fraction:
    """f(skeleton) * lambda^bridges * nu^components."""
    return w.f_value(skeleton(g)) * w.lam ** num_bridges(g) * w.nu ** kappa(g)


def tau_class(cls: GraphClass, n: int, w: Weighting) -> Fraction:
    if w.f == F_TABLE:
        total = sum((tau(Graph.from_rows(n, r), w) for r in iter_rows(cls, n)), Fraction(0))
    else:
        total = sum((w.profile_mass(p) * c for p, c in census(cls, n).items()), Fraction(0))
    if total == 0:
        raise DegenerateDistribution(f"tau({cls.name}_{n}) is zero")
    return total


def random_cluster_weighting(p: Rational, nu: Rational) -> Weighting:
    """Edge probability p and cluster weight nu, as lambda = p/(1-p) with f = lambda^e."""
    p = as_fraction(p)
    if not 0 < p < 1:
        raise ValueError("p must lie strictly between 0 and 1")
    return Weighting(p / (1 - p), nu, F_CLUSTER)
