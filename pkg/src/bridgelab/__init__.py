"""Exact finite-n laws of bridges and components in weighted bridge-addable graph classes."""

from .classes import (
    ALL_GRAPHS,
    BLOCK_CLIQUE,
    BUILTIN,
    FORESTS,
    PLANAR_SMALL,
    PSEUDOFORESTS,
    GraphClass,
    census,
    check_bridge_addable,
    check_bridge_alterable,
    enumerate_graphs,
    external_class,
    get_class,
    user_class,
)
from .dominance import Distribution, poisson_tail, ratio_condition_check, stochastic_leq
from .engine import (
    conjecture_explorer,
    statistic_distribution,
    trend_report,
    verify_theorem1,
    verify_theorem2,
)
from .errors import CapExceeded, DegenerateDistribution, DomainError, HypothesisError
from .forests import (
    contract,
    fiber_mass_identity_check,
    forest_mass,
    moon_tree_total,
    verify_fn2_identity,
    verify_smalln25,
)
from .graph import Graph, bridges, components, decode_graph6, encode_graph6, frag, kappa, skeleton
from .rooted import (
    rooted_frag_trend,
    rooted_kappa_distribution,
    unrooted_aside_check,
    verify_rooted_ratio,
    verify_theorem7,
)
from .sampler import ChainConfig, chi_square_validation, run_chain
from .weighting import UNIFORM, Weighting, random_cluster_weighting, tau

__version__ = "0.1.0"
