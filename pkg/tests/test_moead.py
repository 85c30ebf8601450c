import numpy as np
import pytest

from moead_dyts import ConfigurationError
from moead_dyts.bandit import DytsPolicy, Policy, init_model
from moead_dyts.decomposition import tchebycheff
from moead_dyts.moead import AlgoConfig, evolve
from moead_dyts.operators import OperatorId
from moead_dyts.problems import get_problem
from moead_dyts.rng import new_rng

SMALL = AlgoConfig(population_N=40, neighborhood_T=8, max_evaluations=2000, utility_period=5,
                   dra_update_interval=5, usage_window=10)


def test_budget_of_one_population():
    rec = evolve("UF1", AlgoConfig(population_N=50, max_evaluations=50), rng=1)
    assert rec.n_evaluations == 50 and rec.generations == 0
    assert rec.X.shape == (50, 30) and rec.F.shape == (50, 2)


def test_same_seed_bitwise_identical():
    a = evolve("UF2", SMALL, "dyts", new_rng(5, 1))
    b = evolve("UF2", SMALL, "dyts", new_rng(5, 1))
    assert a.same_as(b)
    c = evolve("UF2", SMALL, "dyts", new_rng(6, 1))
    assert not a.same_as(c)


@pytest.mark.parametrize("problem", ["UF1", "UF8", "WFG4"])
def test_evaluation_accounting(problem):
    cfg = SMALL.replace(population_N=40 if problem != "UF8" else 45)
    rec = evolve(problem, cfg, "dyts", 3)
    N = len(rec.weights)
    per_gen = N // 5 - get_problem(problem).m + get_problem(problem).m
    assert cfg.max_evaluations <= rec.n_evaluations < cfg.max_evaluations + per_gen
    assert rec.operator_usage.sum() == rec.n_evaluations - N
    assert sum(w.sum() for w in rec.usage_windows) == rec.n_evaluations - N
    assert rec.operator_successes.sum() == rec.replacements


def test_population_consistent_with_objectives():
    rec = evolve("UF3", SMALL, "dyts", 2)
    prob = get_problem("UF3")
    assert np.array_equal(np.array([prob.evaluate(x) for x in rec.X]), rec.F)
    assert all(prob.bounds.contains(x) for x in rec.X)


def test_ideal_not_above_anything_seen():
    rec = evolve("UF1", SMALL, "dyts", 4)
    assert np.all(rec.ideal <= rec.F.min(axis=0))


def test_utilities_in_unit_interval():
    rec = evolve("UF1", SMALL.replace(max_evaluations=5000), "dyts", 4)
    assert np.all(rec.utilities > 0) and np.all(rec.utilities <= 1)
    assert rec.utilities.min() < 1  # refresh actually ran


class Recorder(Policy):
    """Wraps DYTS and logs every reward alongside the population after the offspring."""

    name = "dyts"

    def __init__(self):
        self.inner = DytsPolicy(init_model(len(OperatorId)))
        self.model = self.inner.model
        self.rewards = []

    def select(self, rng):
        return self.inner.select(rng)

    def update(self, op, reward):
        self.rewards.append(reward)
        self.inner.update(op, reward)


def test_replacement_discipline_and_reward_consistency():
    frames = []
    pol = Recorder()
    cfg = SMALL.replace(max_evaluations=1200, snapshot_interval=1)
    rec = evolve("UF1", cfg, pol, 7, on_snapshot=lambda ev, F: frames.append((ev, F.copy())))
    N = len(rec.weights)
    assert len(frames) == len(pol.rewards) == rec.n_evaluations - N
    # the initial population is what the same seed produces with no offspring budget
    init = evolve("UF1", cfg.replace(max_evaluations=N), Recorder(), 7).F
    prev = init
    z = init.min(axis=0)
    for (ev, F), reward in zip(frames, pol.rewards):
        changed = np.flatnonzero(np.any(F != prev, axis=1))
        assert len(changed) == reward
        if reward:
            i = changed[0]
            z = np.minimum(z, F[i])
            assert tchebycheff(F[i], rec.weights[i], z) < tchebycheff(prev[i], rec.weights[i], z)
        prev = F
    assert sum(pol.rewards) == rec.replacements


def test_fixed_policy_uses_one_operator():
    rec = evolve("UF1", SMALL, "fixed:de_ctr_2", 1)
    assert rec.operator_usage[OperatorId.DE_CTR_2] == rec.operator_usage.sum() > 0
    assert rec.arm_trajectory is None


def test_arm_trajectory_recorded():
    rec = evolve("UF1", SMALL, "dyts", 1)
    assert rec.arm_trajectory.shape == (rec.generations, 2 * len(OperatorId))
    sums = rec.arm_trajectory[:, 0::2] + rec.arm_trajectory[:, 1::2]
    assert np.all(sums < 101)


@pytest.mark.parametrize("changes", [
    {"neighborhood_T": 0},
    {"neighborhood_T": 41},
    {"delta_prob": 1.2},
    {"threshold_C": 1.0},
    {"max_evaluations": 39},
    {"utility_period": 0},
    {"population_N": 4},
])
def test_config_errors_before_loop(changes):
    with pytest.raises(ConfigurationError):
        evolve("UF1", SMALL.replace(**changes), "dyts", 1)


def test_three_objective_population_from_lattice():
    rec = evolve("UF8", AlgoConfig(population_N=600, max_evaluations=600), rng=1)
    assert len(rec.F) == 595


def test_snapshot_interval():
    rec = evolve("UF1", SMALL.replace(snapshot_interval=500), "dyts", 1)
    assert [ev for ev, _ in rec.snapshots] == [500, 1000, 1500, 2000]


@pytest.mark.parametrize("policy", ["ts", "random", "fixed:um"])
def test_baseline_policies_run(policy):
    rec = evolve("UF4", SMALL, policy, 1)
    assert rec.policy == policy
    assert np.all(np.isfinite(rec.F))
