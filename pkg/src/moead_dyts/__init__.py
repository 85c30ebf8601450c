"""MOEA/D-DRA with dynamic Thompson sampling operator selection.

Quick start::

    from moead_dyts import evolve, AlgoConfig, igd, sample_true_pf
    rec = evolve("UF1", AlgoConfig(max_evaluations=30_000), policy="dyts", rng=1)
    print(igd(rec.F, sample_true_pf("UF1", 10_000)))
"""
from ._backend import BACKEND
from .bandit import (
    ArmState,
    BanditModel,
    init_model,
    make_policy,
    parameter_update,
    posterior_mean,
    select_operator,
)
from .decomposition import generate_weights, tchebycheff
from .errors import ConfigurationError, ParameterError
from .experiment import ExperimentConfig, default_config, run_experiment
from .metrics import hypervolume, igd, nondominated_filter
from .moead import AlgoConfig, RunRecord, evolve
from .operators import Bounds, OperatorId, OperatorParams, apply_operator
from .problems import ProblemId, evaluate, get_problem, sample_true_pf
from .rng import new_rng, sample_beta, uniform01
from .stats import wilcoxon_rank_sum

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AlgoConfig",
    "ArmState",
    "BanditModel",
    "Bounds",
    "ConfigurationError",
    "ExperimentConfig",
    "OperatorId",
    "OperatorParams",
    "ParameterError",
    "ProblemId",
    "RunRecord",
    "apply_operator",
    "default_config",
    "evaluate",
    "evolve",
    "generate_weights",
    "get_problem",
    "hypervolume",
    "igd",
    "init_model",
    "make_policy",
    "new_rng",
    "nondominated_filter",
    "parameter_update",
    "posterior_mean",
    "run_experiment",
    "sample_beta",
    "sample_true_pf",
    "select_operator",
    "tchebycheff",
    "uniform01",
    "wilcoxon_rank_sum",
]
