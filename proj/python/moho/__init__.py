"""Multi-objective hyperparameter optimization toolkit.

HPI-ParEGO (ParEGO with dynamic Shapley-importance configuration-space
reduction), vanilla ParEGO, random search and NSGA-II over ZDT-style
benchmark tasks, plus hypervolume-based convergence metrics.
"""

from moho._core import (
    ConfigSpace,
    Forest,
    Rng,
    analytic_pareto_front,
    auc,
    crowding_distance,
    default_trial_multiplier,
    expected_improvement,
    fast_nondominated_sort,
    fit_forest,
    hypervolume_2d,
    normalize_objectives,
    pareto_front,
    pareto_indices,
    run_optimizer,
    sample_weights,
    scalarize,
    select_important,
    shapley_exact,
    shapley_permutation,
    task_budget,
    task_names,
    zdt_evaluate,
)

__all__ = [
    "ConfigSpace",
    "Forest",
    "Rng",
    "analytic_pareto_front",
    "auc",
    "crowding_distance",
    "default_trial_multiplier",
    "expected_improvement",
    "fast_nondominated_sort",
    "fit_forest",
    "hypervolume_2d",
    "normalize_objectives",
    "pareto_front",
    "pareto_indices",
    "run_optimizer",
    "sample_weights",
    "scalarize",
    "select_important",
    "shapley_exact",
    "shapley_permutation",
    "task_budget",
    "task_names",
    "zdt_evaluate",
]
