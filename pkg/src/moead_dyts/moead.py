"""MOEA/D-DRA main loop with pluggable adaptive operator selection."""
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .bandit import Policy, make_policy
from .decomposition import (
    boundary_indices,
    build_neighborhoods,
    compute_fir,
    generate_weights,
    guarded_weights,
    update_utility,
)
from .errors import ConfigurationError, ParameterError
from .operators import OperatorId, OperatorParams, parent_count
from .problems import ProblemInstance, get_problem
from .rng import RngState, new_rng

__all__ = ["AlgoConfig", "Individual", "Subproblem", "RunRecord", "check_config", "evolve"]


@dataclass(frozen=True)
class AlgoConfig:
    population_N: int = 300
    neighborhood_T: int = 20
    delta_prob: float = 0.8
    threshold_C: float = 100.0
    max_evaluations: int = 300_000
    utility_period: int = 50
    dra_update_interval: int = 50
    tournament_size: int = 10
    operator_params: OperatorParams = field(default_factory=OperatorParams)
    usage_window: int = 100
    snapshot_interval: int = 0

    def replace(self, **changes) -> "AlgoConfig":
        from dataclasses import replace

        return replace(self, **changes)


@dataclass(frozen=True)
class Individual:
    x: np.ndarray
    objectives: np.ndarray


@dataclass(frozen=True)
class Subproblem:
    index: int
    weight: np.ndarray
    incumbent: Individual
    utility_pi: float
    neighborhood: np.ndarray


@dataclass
class RunRecord:
    """Everything a run leaves behind. Arrays are owned copies."""

    problem: str
    policy: str
    n_evaluations: int
    generations: int
    X: np.ndarray
    F: np.ndarray
    weights: np.ndarray
    neighborhoods: np.ndarray
    utilities: np.ndarray
    ideal: np.ndarray
    operator_usage: np.ndarray
    operator_successes: np.ndarray
    usage_windows: list
    arm_trajectory: np.ndarray | None
    snapshots: list
    replacements: int

    @property
    def population(self) -> list:
        return [Individual(x.copy(), f.copy()) for x, f in zip(self.X, self.F)]

    def subproblem(self, i: int) -> Subproblem:
        return Subproblem(i, self.weights[i], Individual(self.X[i], self.F[i]),
                          float(self.utilities[i]), self.neighborhoods[i])

    def same_as(self, other: "RunRecord") -> bool:
        """Bitwise equality of every recorded array and counter."""
        arrays = ("X", "F", "weights", "neighborhoods", "utilities", "ideal",
                  "operator_usage", "operator_successes")
        if (self.problem, self.policy, self.n_evaluations, self.generations, self.replacements) != \
                (other.problem, other.policy, other.n_evaluations, other.generations, other.replacements):
            return False
        if not all(np.array_equal(getattr(self, a), getattr(other, a)) for a in arrays):
            return False
        if (self.arm_trajectory is None) != (other.arm_trajectory is None):
            return False
        if self.arm_trajectory is not None and not np.array_equal(self.arm_trajectory, other.arm_trajectory):
            return False
        if len(self.usage_windows) != len(other.usage_windows) or len(self.snapshots) != len(other.snapshots):
            return False
        return all(np.array_equal(a, b) for a, b in zip(self.usage_windows, other.usage_windows)) and \
            all(ea == eb and np.array_equal(fa, fb) for (ea, fa), (eb, fb) in zip(self.snapshots, other.snapshots))


def _validate(config: AlgoConfig, prob: ProblemInstance, N: int):
    if config.neighborhood_T < 1 or config.neighborhood_T > N:
        raise ConfigurationError(f"neighborhood_T={config.neighborhood_T} must lie in [1, N={N}]")
    if not 0.0 <= config.delta_prob <= 1.0:
        raise ConfigurationError("delta_prob must lie in [0, 1]")
    if not config.threshold_C > 1:
        raise ConfigurationError("threshold_C must exceed 1")
    if config.max_evaluations < N:
        raise ConfigurationError(
            f"max_evaluations={config.max_evaluations} is below the initial population of {N}")
    if config.utility_period < 1 or config.dra_update_interval < 1:
        raise ConfigurationError("utility_period and dra_update_interval must be positive")
    if config.tournament_size < 1 or config.usage_window < 1:
        raise ConfigurationError("tournament_size and usage_window must be positive")
    if config.snapshot_interval < 0:
        raise ConfigurationError("snapshot_interval must be non-negative")
    if N // 5 - prob.m < 0:
        raise ConfigurationError(f"population of {N} too small for {prob.m} objectives")
    if N - 1 < max(parent_count(op) for op in OperatorId):
        raise ConfigurationError("population too small to draw distinct parents")


def check_config(problem, config: AlgoConfig) -> int:
    """Raise ConfigurationError for unusable settings; returns the actual population size."""
    prob = get_problem(problem)
    try:
        N = len(generate_weights(prob.m, config.population_N))
    except ParameterError as exc:
        raise ConfigurationError(str(exc)) from None
    _validate(config, prob, N)
    return N


def evolve(problem, config: AlgoConfig = AlgoConfig(), policy="dyts", rng: RngState | int = 0,
           on_snapshot=None) -> RunRecord:
    """Run MOEA/D-DRA with the given operator-selection policy.

    ``policy`` is a :class:`Policy` or a policy name (``dyts``, ``ts``,
    ``random``, ``fixed:<operator>``); ``rng`` is a generator or an integer
    seed. ``on_snapshot(neval, F)`` is called every ``config.snapshot_interval``
    evaluations when that is non-zero.
    """
    prob = get_problem(problem)
    if isinstance(rng, (int, np.integer)):
        rng = new_rng(int(rng))
    check_config(prob, config)
    if not isinstance(policy, Policy):
        policy = make_policy(str(policy), config.threshold_C)

    W = generate_weights(prob.m, config.population_N)
    N, m, n = len(W), prob.m, prob.n

    nbr = build_neighborhoods(W, config.neighborhood_T)
    Wg = guarded_weights(W)
    lo, up = prob.bounds.lower, prob.bounds.upper
    span = up - lo
    params = config.operator_params
    F_scale, K_scale = params.F, params.K
    um_prob, pm_prob, pm_eta = params.um_prob_for(n), params.pm_prob_for(n), float(params.pm_eta)
    delta = config.delta_prob
    period, dt = config.utility_period, config.dra_update_interval
    max_evals = config.max_evaluations
    snap_every = config.snapshot_interval
    k_ops = len(OperatorId)
    counts_needed = [parent_count(op) for op in OperatorId]

    X = np.empty((N, n))
    for i in range(N):
        for j in range(n):
            X[i, j] = lo[j] + rng.uniform01() * span[j]
    evaluate = prob.evaluate_unchecked
    Fpop = np.array([evaluate(np.ascontiguousarray(X[i])) for i in range(N)])
    neval = N
    z = Fpop.min(axis=0)
    pi = np.ones(N)

    def all_g():
        return (np.abs(Fpop - z) / Wg).max(axis=1)

    g_hist = {0: all_g()}
    boundary = boundary_indices(W)
    count = N // 5 - m
    all_idx = np.arange(N, dtype=np.intp)
    scopes = [np.ascontiguousarray(row) for row in nbr]

    usage = np.zeros(k_ops, dtype=np.int64)
    successes = np.zeros(k_ops, dtype=np.int64)
    window = np.zeros(k_ops, dtype=np.int64)
    usage_windows = []
    model = getattr(policy, "model", None)
    trajectory = [] if model is not None else None
    snapshots = []
    replacements = 0
    gen = 0

    k = kernels
    tournament, select_distinct = k.tournament, k.select_distinct
    variation, mutate, fitness_improvement = k.variation, k.polynomial_mutation, k.fitness_improvement
    select_op, update_op = policy.select, policy.update
    uniform = rng.uniform01

    while neval < max_evals:
        selected = tournament(pi, boundary, count, config.tournament_size, rng)
        for i in selected:
            op = select_op(rng)
            scope = scopes[i] if uniform() < delta else all_idx
            need = counts_needed[op]
            if need:
                if len(scope) - 1 < need:
                    scope = all_idx
                parents = X[select_distinct(scope, i, need, rng)]
            else:
                parents = None
            child = variation(op, X[i], parents, lo, up, F_scale, K_scale, um_prob, rng)
            child = mutate(child, lo, up, pm_eta, pm_prob, rng)
            fc = evaluate(child)
            neval += 1
            np.minimum(z, fc, out=z)
            fi, best = fitness_improvement(fc, Fpop, Wg, z, scope)
            reward = 0
            if fi > 0.0:
                reward = 1
                X[best] = child
                Fpop[best] = fc
                replacements += 1
            update_op(op, reward)
            usage[op] += 1
            window[op] += 1
            successes[op] += reward
            if snap_every and neval % snap_every == 0:
                snapshots.append((neval, Fpop.copy()))
                if on_snapshot is not None:
                    on_snapshot(neval, Fpop)
        gen += 1
        if trajectory is not None:
            trajectory.append(model.snapshot())
        if gen % config.usage_window == 0:
            usage_windows.append(window.copy())
            window[:] = 0
        if (gen + dt) % period == 0:
            g_hist[gen] = all_g()
        if gen % period == 0:
            g_new = all_g()
            g_old = g_hist.pop(gen - dt) if gen - dt > 0 else g_hist[0]
            for idx in range(N):
                pi[idx] = update_utility(pi[idx], compute_fir(g_old[idx], g_new[idx]))
    if window.any():
        usage_windows.append(window.copy())

    return RunRecord(
        problem=prob.name,
        policy=policy.name,
        n_evaluations=neval,
        generations=gen,
        X=X,
        F=Fpop,
        weights=W,
        neighborhoods=nbr,
        utilities=pi,
        ideal=z,
        operator_usage=usage,
        operator_successes=successes,
        usage_windows=usage_windows,
        arm_trajectory=np.array(trajectory) if trajectory is not None else None,
        snapshots=snapshots,
        replacements=replacements,
    )
