"""Acceptance criteria 1-10, one PASS/FAIL line each.

Criteria 1-4 run the full published budgets (UF: 300,000 evaluations, WFG:
25,000) over seeds 1-5, which takes a few minutes on one core with the compiled
kernels. The lines are printed as each check finishes and collected again in an
"acceptance criteria" section at the end of the pytest report. Running this
file directly prints the same lines without pytest.
"""
import math
import random
import subprocess
import sys
from pathlib import Path
from statistics import median

import numpy as np
import pytest
from conftest import record_criterion

from moead_dyts.bandit import ArmState, parameter_update, posterior_mean, vanilla_update
from moead_dyts.experiment import ExperimentConfig, read_runs, run_experiment
from moead_dyts.metrics import hypervolume, igd
from moead_dyts.stats import rank_sum_exact_p, rank_sum_normal_p, wilcoxon_rank_sum

SEEDS = [1, 2, 3, 4, 5]
HERE = Path(__file__).resolve().parent


@pytest.fixture(scope="module")
def reproduction(tmp_path_factory):
    """Full-budget runs shared by criteria 1-4."""
    out = tmp_path_factory.mktemp("reproduction")
    rows = []
    # UF1 and WFG5 only need the DYTS runs
    for problem, policy in [("UF1", "dyts"), ("UF4", "dyts"), ("UF4", "fixed:de_rand_1"), ("WFG5", "dyts")]:
        cfg = ExperimentConfig(problems=[problem], policies=[policy], seeds=SEEDS,
                               output_dir=out / f"{problem}_{policy.replace(':', '-')}")
        rows += read_runs(run_experiment(cfg)["runs"])
    return rows


def pick(rows, problem, policy, metric):
    return [r[metric] for r in rows if r["problem"] == problem and r["policy"] == policy]


def test_criterion_01_uf1_igd(reproduction):
    vals = pick(reproduction, "UF1", "dyts", "igd")
    med = median(vals)
    ok = len(vals) == 5 and med <= 5e-3
    record_criterion(1, ok, f"UF1 DYTS median IGD {med:.3e} (<= 5.0e-3) over seeds {SEEDS}")
    assert ok


def test_criterion_02_uf4_separation(reproduction):
    dyts = median(pick(reproduction, "UF4", "dyts", "igd"))
    de = median(pick(reproduction, "UF4", "fixed:de_rand_1", "igd"))
    ok = dyts <= 4.5e-2 and de >= 5e-2
    record_criterion(2, ok, f"UF4 median IGD DYTS {dyts:.3e} (<= 4.5e-2), fixed DE/rand/1 {de:.3e} (>= 5.0e-2)")
    assert ok


def test_criterion_03_wfg5_igd(reproduction):
    vals = pick(reproduction, "WFG5", "dyts", "igd")
    med = median(vals)
    ok = med <= 3e-2
    record_criterion(3, ok, f"WFG5 DYTS N=100 25k evals median IGD {med:.3e} (<= 3.0e-2); "
                            f"per seed {', '.join(f'{v:.4f}' for v in vals)}")
    assert ok


def test_criterion_04_uf1_hv(reproduction):
    med = median(pick(reproduction, "UF1", "dyts", "hv"))
    ok = med >= 3.64
    record_criterion(4, ok, f"UF1 DYTS median HV {med:.5f} (>= 3.64, ref (2,2))")
    assert ok


def test_criterion_05_bandit_invariants():
    rng = random.Random(5)
    updates = 0
    violations = []
    while updates < 10**6:
        C = rng.randint(2, 250)
        p = rng.random()
        arm = ArmState(1.0, 1.0)
        reached = False
        for _ in range(1000):
            r = 1 if rng.random() < p else 0
            new = parameter_update(arm, r, C)
            updates += 1
            s = new.alpha + new.beta
            if not s < C + 1:
                violations.append(("bound", C, s))
            if reached and not math.isclose(s, C, rel_tol=1e-9):
                violations.append(("pin", C, s))
            if not math.isclose(posterior_mean(new), (arm.alpha + r) / (arm.alpha + arm.beta + 1), rel_tol=1e-12):
                violations.append(("mean", C, s))
            reached = reached or s >= C
            arm = new
    ok = not violations
    record_criterion(5, ok, f"{updates} randomized updates, {len(violations)} invariant violations")
    assert ok, violations[:5]


def test_criterion_06_forgetting():
    arm = plain = ArmState(1.0, 1.0)
    for r in [1] * 500 + [0] * 500:
        arm = parameter_update(arm, r, 100)
        plain = vanilla_update(plain, r)
    mean = posterior_mean(arm)
    ok = mean < 0.1
    record_criterion(6, ok, f"posterior mean after 500 ones then 500 zeros at C=100: {mean:.4f} (< 0.1); "
                            f"uncapped update gives {posterior_mean(plain):.4f}")
    assert ok


def test_criterion_07_metric_oracles():
    from test_metrics import brute_igd, mc_hv_2d

    rng = np.random.default_rng(5)
    ref = np.array([2.0, 2.0])
    worst_z = 0.0
    for _ in range(100):
        P = rng.random((rng.integers(1, 25), 2)) * 1.8
        est, se = mc_hv_2d(P, ref, 10**6, rng)
        worst_z = max(worst_z, abs(hypervolume(P, ref) - est) / se if se else 0.0)
    worst_igd = 0.0
    for _ in range(100):
        S, R = rng.random((rng.integers(1, 30), 2)), rng.random((rng.integers(1, 60), 2))
        worst_igd = max(worst_igd, abs(igd(S, R) - brute_igd(S.tolist(), R.tolist())))
    two = hypervolume([(0.5, 1.5), (1.5, 0.5)], (2, 2))
    ok = worst_z <= 3 and worst_igd <= 1e-12 and two == 1.25
    record_criterion(7, ok, f"HV vs MC worst {worst_z:.2f} SE (<= 3); IGD vs brute force worst {worst_igd:.1e}; "
                            f"two-point HV {two}")
    assert ok


def test_criterion_08_rank_sum_oracle():
    from test_stats import enumeration_p

    p_enum = enumeration_p([1, 2, 3], [4, 5, 6])
    p = wilcoxon_rank_sum([1, 2, 3], [4, 5, 6]).p_value
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(1000):
        a, b = rng.normal(size=10), rng.normal(rng.uniform(0, 2), 1, size=10)
        worst = max(worst, abs(rank_sum_exact_p(a, b) - rank_sum_normal_p(a, b)))
    ok = math.isclose(p, 0.1, abs_tol=1e-15) and math.isclose(p_enum, 0.1) and worst <= 0.02
    record_criterion(8, ok, f"p([1,2,3],[4,5,6]) = {p} (enumeration {p_enum}); exact vs normal at (10,10) "
                            f"worst gap {worst:.4f} (<= 0.02)")
    assert ok


def test_criterion_09_determinism(tmp_path):
    def run(out):
        cfg = ExperimentConfig(problems=["UF2", "WFG1"], policies=["dyts", "ts"], seeds=[1, 2], output_dir=out,
                               max_evaluations=3000, population_N=60, jobs=1)
        run_experiment(cfg)
        return {p.name: p.read_bytes() for p in out.iterdir()
                if p.name == "runs.csv" or p.name.startswith("front_")}

    a, b = run(tmp_path / "a"), run(tmp_path / "b")
    ok = a == b and len(a) == 9
    record_criterion(9, ok, f"repeated experiment: {len(a)} files (runs.csv + fronts) byte-identical: {a == b}")
    assert ok


UNIT_MODULES = ["test_rng.py", "test_bandit.py", "test_operators.py", "test_decomposition.py",
                "test_moead.py", "test_problems.py", "test_metrics.py", "test_stats.py", "test_experiment.py"]


def test_criterion_10_worked_examples():
    res = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                          *[str(HERE / m) for m in UNIT_MODULES]],
                         capture_output=True, text=True, cwd=HERE.parent)
    tail = res.stdout.strip().splitlines()[-1] if res.stdout.strip() else res.stderr.strip()[-200:]
    ok = res.returncode == 0
    record_criterion(10, ok, f"unit suites with every worked example: {tail}")
    assert ok, res.stdout[-3000:]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
