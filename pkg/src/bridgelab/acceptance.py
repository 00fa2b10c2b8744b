"""The release acceptance criteria, shared by the test suite and `bridgelab verify-all`.

Each criterion returns a Criterion with a pass flag and a short detail line.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .classes import ALL_GRAPHS, BLOCK_CLIQUE, FORESTS, PLANAR_SMALL, PSEUDOFORESTS
from .dominance import POISSON_TOL, Distribution, ratio_condition_check
from .engine import conjecture_explorer, statistic_distribution, verify_theorem1, verify_theorem2
from .forests import (
    bridge_free_base,
    fiber_mass_identity_check,
    moon_brute_force,
    moon_tree_total,
    verify_fn2_identity,
    verify_smalln25,
)
from .rooted import (
    rooted_forest_connectivity,
    rooted_kappa_distribution,
    verify_rooted_ratio,
    verify_theorem7,
)
from .sampler import ChainConfig, chi_square_validation
from .weighting import UNIFORM, Weighting

GRID = [(ALL_GRAPHS, 6), (FORESTS, 9), (PSEUDOFORESTS, 7), (BLOCK_CLIQUE, 6), (PLANAR_SMALL, 6)]
WEIGHTINGS = [Weighting(1, 1), Weighting(1, 2), Weighting(2, 1), Weighting("1/2", 3)]

# regression constant for uniform forests on 9 vertices, computed exactly by the engine
FORESTS9_E_FRAG = Fraction(11089781, 10026505)

CONJECTURE_N = range(1, 7)

SAMPLER_SEED = 20240611
SAMPLER_SAMPLES = 100_000
SAMPLER_BURN_IN = 1_000
SAMPLER_THINNING = 10


@dataclass
class Criterion:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number} [{mark}] {self.title}: {self.detail} ({self.seconds:.1f}s)"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t = time.perf_counter()
        c = fn(*args, **kwargs)
        c.seconds = time.perf_counter() - t
        return c
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _grid():
    for cls, top in GRID:
        for n in range(1, top + 1):
            for w in WEIGHTINGS:
                yield cls, n, w


def _tag(cls, n, w) -> str:
    return f"{cls.name} n={n} lambda={w.lam} nu={w.nu}"


@_timed
def criterion_1() -> Criterion:
    """Ratio inequality, connectivity bound and mean bound over the class grid."""
    failures = []
    checked = violated = 0
    for cls, n, w in _grid():
        r = verify_theorem1(cls, n, w, strict=False)
        violated += r.hypothesis.startswith("violated")
        checked += 1
        if not (r.ratio_holds and r.conn_holds and r.e_kappa_holds):
            failures.append(_tag(cls, n, w))
    return Criterion(1, "kappa ratio, connectivity and mean bounds", not failures,
                     f"{checked - len(failures)}/{checked} grid points hold "
                     f"({violated} outside the addable hypothesis)", failures=failures)


@_timed
def criterion_2() -> Criterion:
    """E[frag] < 2 nu/lambda over the grid; uniform forests on 9 vertices in [0.8, 1.2]."""
    failures = []
    checked = 0
    for cls, n, w in _grid():
        r = verify_theorem2(cls, n, w, strict=False)
        checked += 1
        if not r.e_frag < r.bound:
            failures.append(_tag(cls, n, w))
    e9 = statistic_distribution(FORESTS, 9, UNIFORM, "frag").mean()
    in_band = Fraction(4, 5) <= e9 <= Fraction(6, 5)
    if not in_band:
        failures.append(f"forests n=9 E[frag]={float(e9):.4f} outside [0.8, 1.2]")
    if e9 != FORESTS9_E_FRAG:
        failures.append(f"forests n=9 E[frag]={e9} differs from the frozen {FORESTS9_E_FRAG}")
    return Criterion(2, "fragment bound", not failures,
                     f"{checked} grid points; forests n=9 E[frag]={float(e9):.4f}",
                     failures=failures)


@_timed
def criterion_3() -> Criterion:
    """Rooted forest connectivity formula, rooted ratio bound, rooted dominance."""
    failures = []
    for n in range(1, 9):
        if rooted_kappa_distribution(FORESTS, n).p_connected != rooted_forest_connectivity(n):
            failures.append(f"rooted forests n={n} connectivity")
    checked = 0
    for cls, n, w in _grid():
        checked += 1
        if not verify_rooted_ratio(cls, n, w, strict=False).holds:
            failures.append("ratio " + _tag(cls, n, w))
        if not verify_theorem7(cls, n, w, strict=False).holds:
            failures.append("dominance " + _tag(cls, n, w))
    return Criterion(3, "rooted laws", not failures,
                     f"connectivity formula n<=8, {checked} grid points", failures=failures)


def fiber_bases(max_w: int = 9):
    """Every component-size multiset with total <= max_w and no part 2, as cycles,
    plus the clique realization when some part has 4 or more vertices."""
    def parts(total, largest):
        if total == 0:
            yield ()
            return
        for p in range(min(total, largest), 0, -1):
            if p == 2:
                continue
            for rest in parts(total - p, p):
                yield (p,) + rest

    for total in range(1, max_w + 1):
        for sizes in parts(total, total):
            yield sizes, "cycle"
            if max(sizes) >= 4:
                yield sizes, "clique"


@_timed
def criterion_4(seed: int = 4) -> Criterion:
    """Moon's count, fiber identity, the two-component identity, and the small-n ratio."""
    rng = random.Random(seed)
    failures = []
    moon = 0
    for n in range(1, 8):
        vectors = [(1,) * n] + [tuple(rng.randint(1, 4) for _ in range(n)) for _ in range(100)]
        for w in vectors:
            moon += 1
            if moon_brute_force(w) != moon_tree_total(w):
                failures.append(f"moon {w}")
    fibers = graphs = 0
    for sizes, shape in fiber_bases(9):
        g0, _ = bridge_free_base(sizes, shape)
        r = fiber_mass_identity_check(g0, 2, 3)
        fibers += 1
        graphs += r.graphs_seen
        if not r.holds:
            failures.append(f"fiber {sizes} {shape}")
    fn2 = 0
    for n in range(2, 7):
        for w in [(1,) * n] + [tuple(rng.randint(1, 4) for _ in range(n)) for _ in range(3)]:
            for wt in WEIGHTINGS:
                fn2 += 1
                if not verify_fn2_identity(n, w, wt.lam, wt.nu).holds:
                    failures.append(f"fn2 n={n} w={w} {wt.lam},{wt.nu}")
    small = 0
    for n in range(1, 8):
        for w in [(1,) * n] + [tuple(rng.randint(1, 4) for _ in range(n)) for _ in range(3)]:
            for wt in WEIGHTINGS:
                small += 1
                if not verify_smalln25(n, w, wt.lam, wt.nu).holds:
                    failures.append(f"smalln n={n} w={w} {wt.lam},{wt.nu}")
    return Criterion(4, "weighted forest identities", not failures,
                     f"moon {moon} vectors, fiber {fibers} bases/{graphs} graphs, "
                     f"fn2 {fn2} cases, small-n {small} cases", failures=failures)


def forest_connectivity_trend(n_range=range(3, 10)) -> list[tuple[int, Fraction]]:
    return [(n, statistic_distribution(FORESTS, n, UNIFORM, "kappa").prob(1)) for n in n_range]


@_timed
def criterion_5() -> Criterion:
    """Uniform forests: Pr(connected) at n=9 in [0.55, e^{-1/2}], monotone in n=3..9."""
    trend = forest_connectivity_trend()
    limit = math.exp(-0.5)
    p9 = float(trend[-1][1])
    failures = []
    if not 0.55 <= p9 <= limit:
        failures.append(f"Pr(connected) at n=9 is {p9:.4f}, outside [0.55, {limit:.4f}]")
    drops = [a[0] for a, b in zip(trend, trend[1:]) if b[1] < a[1]]
    if drops:
        failures.append("not monotone: decreases after n=" + ",".join(map(str, drops)))
    if any(float(p) > limit for _, p in trend):
        failures.append("exceeds e^{-1/2}")
    values = " ".join(f"{n}:{float(p):.4f}" for n, p in trend)
    return Criterion(5, "forest connectivity trend", not failures, values, failures=failures)


def conjecture_verdicts() -> dict:
    out = {}
    for cls, _ in GRID:
        for w in WEIGHTINGS:
            rep = conjecture_explorer(cls, w, CONJECTURE_N, strict=False)
            for row in rep.rows:
                out[(cls.name, str(w.lam), str(w.nu), row.n)] = (
                    row.kappa_vs_forests.holds, row.frag_vs_forests_holds)
    return out


@_timed
def criterion_6() -> Criterion:
    """The forest-comparison conjecture at n <= 6: runs, well-formed, verdicts as frozen."""
    from .conjecture_frozen import FROZEN

    failures = []
    for cls, _ in GRID:
        for w in WEIGHTINGS:
            rep = conjecture_explorer(cls, w, CONJECTURE_N, strict=False)
            if [r.n for r in rep.rows] != list(CONJECTURE_N):
                failures.append(f"malformed report for {cls.name}")
            for row in rep.rows:
                if row.kappa_vs_forests.verdict not in ("holds", "fails"):
                    failures.append(f"bad verdict {cls.name} n={row.n}")
    observed = conjecture_verdicts()
    if observed != FROZEN:
        diff = sorted(k for k in set(observed) | set(FROZEN) if observed.get(k) != FROZEN.get(k))
        failures.append(f"verdicts changed at {diff[:5]}")
    against = sorted(k for k, v in observed.items() if not all(v))
    detail = f"{len(observed)} comparisons; {len(against)} go against the conjecture"
    return Criterion(6, "forest-comparison conjecture evidence", not failures, detail,
                     failures=failures)


def sampler_runs(seed: int = SAMPLER_SEED):
    """(label, report, expected pass) for the two validations and the negative control."""
    steps = SAMPLER_BURN_IN + SAMPLER_SAMPLES * SAMPLER_THINNING
    cases = [
        ("forests n=6 uniform", FORESTS, 6, UNIFORM, None, True),
        ("pseudoforests n=5 lambda=2 nu=1", PSEUDOFORESTS, 5, Weighting(2, 1), None, True),
        ("negative control: swapped weighting", PSEUDOFORESTS, 5, Weighting(1, 2),
         Weighting(2, 1), False),
    ]
    for label, cls, n, w, target, expect in cases:
        cfg = ChainConfig(cls, n, w, steps=steps, burn_in=SAMPLER_BURN_IN,
                          thinning=SAMPLER_THINNING, seed=seed)
        yield label, chi_square_validation(cls, n, w, cfg, target=target), expect


@_timed
def criterion_7() -> Criterion:
    """Chi-square validation of the Metropolis chain, with a negative control."""
    failures = []
    parts = []
    for label, rep, expect in sampler_runs():
        parts.append(f"{label} p={rep.p_value:.3g}")
        if rep.passed != expect:
            failures.append(label)
    return Criterion(7, "sampler validation", not failures, "; ".join(parts), failures=failures)


def random_ratio_pmf(rng: random.Random):
    """A random exact pmf meeting Pr(k+1) <= alpha/(k+1) Pr(k) for k < k0, with
    arbitrary mass allowed above k0."""
    alpha = Fraction(rng.randint(1, 40), rng.randint(1, 10))
    k0 = rng.randint(0, 12)
    masses = {0: Fraction(rng.randint(1, 1000))}
    for k in range(k0):
        # a factor in [0, 1], with exact equality in about a fifth of the steps
        u = Fraction(1) if rng.random() < 0.2 else Fraction(rng.randint(0, 1000), 1000)
        masses[k + 1] = masses[k] * alpha / (k + 1) * u
    for k in range(k0 + 1, k0 + rng.randint(0, 4) + 1):
        masses[k] = Fraction(rng.randint(0, 1000))
    if sum(masses.values()) == 0:
        masses[0] = Fraction(1)
    return Distribution.from_masses(masses), alpha, k0


@_timed
def criterion_8(count: int = 1000, seed: int = 8) -> Criterion:
    """Truncated Poisson tail bound from the ratio condition, on random exact pmfs."""
    rng = random.Random(seed)
    failures = []
    worst = math.inf
    for i in range(count):
        x, alpha, k0 = random_ratio_pmf(rng)
        chk = ratio_condition_check(x, alpha, k0, POISSON_TOL)
        if not chk.holds:
            failures.append(f"pmf {i}: generator broke the ratio condition")
            continue
        worst = min([worst] + [m for _, m in chk.conclusion_margins])
        if not chk.conclusion_holds:
            failures.append(f"pmf {i}: alpha={alpha} k0={k0}")
    return Criterion(8, "truncated Poisson tail bound", not failures,
                     f"{count} pmfs, smallest margin {worst:.3g}", failures=failures)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8]


def run_all(only=None, echo=None) -> list[Criterion]:
    out = []
    for i, fn in enumerate(CRITERIA, start=1):
        if only and i not in only:
            continue
        c = fn()
        if echo:
            echo(c.line())
        out.append(c)
    return out
