"""NSGA-II with static and adaptive polynomial mutation."""

from ._nsga2 import (
    ContractViolation,
    UserError,
    adaptive_distribution_index,
    benchmark,
    crowding_distance,
    evaluate,
    generational_distance,
    nondominated_ranks,
    polynomial_delta,
    problem_info,
    problem_names,
    reference_front,
    run,
    sample_stats,
    sbx_spread_factor,
    sigmoid_weight,
    spread,
    welch_t_test,
)

__all__ = [
    "ContractViolation",
    "UserError",
    "adaptive_distribution_index",
    "benchmark",
    "crowding_distance",
    "evaluate",
    "generational_distance",
    "nondominated_ranks",
    "polynomial_delta",
    "problem_info",
    "problem_names",
    "reference_front",
    "run",
    "sample_stats",
    "sbx_spread_factor",
    "sigmoid_weight",
    "spread",
    "welch_t_test",
]
