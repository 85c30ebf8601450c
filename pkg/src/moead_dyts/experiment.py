"""Experiment matrix runner: (problem, policy, seed) cells to CSV tables and front dumps.

Output files in ``output_dir``:

* ``runs.csv``: one row per run with final IGD and HV, flushed as each run ends
* ``summary.csv``: per (problem, policy) mean, std and rank-sum verdict vs ``dyts``
* ``front_<problem>_<policy>_<seed>.dat``: final nondominated objective vectors
* ``operators_<problem>_<policy>_<seed>.csv``: operator counts per usage window
* ``arms_<problem>_<policy>_<seed>.csv``: per-generation (alpha, beta) for bandit policies
* ``snapshots_<problem>_<policy>_<seed>.csv``: IGD/HV every ``snapshot_interval`` evaluations
* ``timings.csv``: wall time per run, kept apart so the other files stay reproducible
* ``reference/pf_<problem>_<count>.dat``: cached reference sets
"""
import csv
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from statistics import fmean, stdev

import numpy as np

from .bandit import make_policy
from .errors import ConfigurationError, ParameterError
from .metrics import hypervolume, igd, nondominated_filter
from .moead import AlgoConfig, check_config, evolve
from .operators import OperatorId
from .problems import get_problem, reference_set, save_front
from .rng import new_rng, stream_id_for
from .stats import A_BETTER, B_BETTER, wilcoxon_rank_sum

__all__ = [
    "ExperimentConfig",
    "RunResult",
    "default_config",
    "hv_reference_point",
    "resolve_algo_config",
    "run_experiment",
    "run_single",
    "read_runs",
    "summarize",
    "RUNS_HEADER",
    "SUMMARY_HEADER",
]

REFERENCE_COUNT = 10_000
BASELINE_POLICY = "dyts"

RUNS_HEADER = ["problem", "policy", "seed", "n_evaluations", "generations", "igd", "hv",
               "front_size", "replacements"] + [f"uses_{op.name.lower()}" for op in OperatorId]
SUMMARY_HEADER = ["problem", "policy", "runs", "igd_mean", "igd_std", "igd_vs_dyts", "igd_p_vs_dyts",
                  "hv_mean", "hv_std", "hv_vs_dyts", "hv_p_vs_dyts"]


def default_config(problem) -> AlgoConfig:
    """Population size and budget used for each benchmark family."""
    prob = get_problem(problem)
    if prob.id.family == "WFG":
        return AlgoConfig(population_N=100, max_evaluations=25_000)
    return AlgoConfig(population_N=300 if prob.m == 2 else 600, max_evaluations=300_000)


def hv_reference_point(problem) -> tuple:
    prob = get_problem(problem)
    if prob.id.family == "WFG":
        return (3.0, 5.0)
    return (2.0,) * prob.m


@dataclass
class ExperimentConfig:
    problems: list
    policies: list
    seeds: list
    output_dir: Path
    overrides: dict = field(default_factory=dict)  # problem name -> AlgoConfig field changes
    max_evaluations: int | None = None
    population_N: int | None = None
    budget_divisor: int = 1
    snapshot_interval: int = 0
    hv_reference: dict = field(default_factory=dict)  # problem name -> reference point
    jobs: int = 1
    reference_count: int = REFERENCE_COUNT

    def __post_init__(self):
        self.output_dir = Path(self.output_dir)
        if not self.problems or not self.policies or not self.seeds:
            raise ConfigurationError("need at least one problem, one policy and one seed")
        try:
            self.problems = [get_problem(p).name for p in self.problems]
        except ParameterError as exc:
            raise ConfigurationError(str(exc)) from None
        names = []
        for label in self.policies:
            try:
                names.append(make_policy(str(label)).name)
            except ParameterError as exc:
                raise ConfigurationError(str(exc)) from None
        self.policies = names
        for s in self.seeds:
            if not isinstance(s, (int, np.integer)) or not 0 <= int(s) < 2 ** 64:
                raise ConfigurationError(f"seed {s!r} is not an unsigned 64-bit integer")
        self.seeds = [int(s) for s in self.seeds]
        if self.budget_divisor < 1 or self.jobs < 1 or self.snapshot_interval < 0:
            raise ConfigurationError("budget_divisor and jobs must be positive, snapshot_interval non-negative")
        unknown = set(self.overrides) - set(self.problems)
        if unknown:
            raise ConfigurationError(f"overrides for problems not in the run: {sorted(unknown)}")


def resolve_algo_config(config: ExperimentConfig, problem: str) -> AlgoConfig:
    algo = default_config(problem)
    changes = {"snapshot_interval": config.snapshot_interval}
    if config.population_N is not None:
        changes["population_N"] = config.population_N
    budget = config.max_evaluations if config.max_evaluations is not None else algo.max_evaluations
    changes["max_evaluations"] = budget // config.budget_divisor
    changes.update(config.overrides.get(problem, {}))
    try:
        return algo.replace(**changes)
    except TypeError as exc:
        raise ConfigurationError(f"bad override for {problem}: {exc}") from None


@dataclass
class RunResult:
    problem: str
    policy: str
    seed: int
    final_igd: float
    final_hv: float
    front: np.ndarray
    n_evaluations: int
    generations: int
    replacements: int
    operator_usage: np.ndarray
    usage_windows: list
    arm_trajectory: np.ndarray | None
    metric_snapshots: list  # (evaluations, igd, hv)
    wall_time: float


def run_single(problem: str, policy: str, seed: int, algo: AlgoConfig, reference, hv_ref) -> RunResult:
    """One cell of the matrix with its own generator stream."""
    start = time.perf_counter()
    rng = new_rng(seed, stream_id_for(problem, policy))
    rec = evolve(problem, algo, policy, rng)
    F = rec.F
    snaps = [(ev, igd(Fs, reference), hypervolume(Fs, hv_ref)) for ev, Fs in rec.snapshots]
    return RunResult(
        problem=problem,
        policy=policy,
        seed=seed,
        final_igd=igd(F, reference),
        final_hv=hypervolume(F, hv_ref),
        front=nondominated_filter(F),
        n_evaluations=rec.n_evaluations,
        generations=rec.generations,
        replacements=rec.replacements,
        operator_usage=rec.operator_usage,
        usage_windows=rec.usage_windows,
        arm_trajectory=rec.arm_trajectory,
        metric_snapshots=snaps,
        wall_time=time.perf_counter() - start,
    )


def _run_cell(args):
    return run_single(*args)


def _num(v) -> str:
    return f"{float(v):.17g}"


def _tag(problem, policy, seed) -> str:
    return f"{problem}_{policy.replace(':', '-')}_{seed}"


def _open_csv(path):
    fh = open(path, "w", encoding="utf-8", newline="")
    return fh, csv.writer(fh, lineterminator="\n")


def _write_table(path, header, rows):
    fh, w = _open_csv(path)
    with fh:
        w.writerow(header)
        w.writerows(rows)


def _check_writable(out: Path):
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write_probe"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise ConfigurationError(f"output directory {out} is not writable: {exc}") from None


def _write_run_files(out: Path, res: RunResult):
    tag = _tag(res.problem, res.policy, res.seed)
    save_front(out / f"front_{tag}.dat", res.front)
    op_names = [op.name.lower() for op in OperatorId]
    _write_table(out / f"operators_{tag}.csv", ["window"] + op_names,
                 [[i] + [int(c) for c in row] for i, row in enumerate(res.usage_windows)])
    if res.arm_trajectory is not None:
        k = res.arm_trajectory.shape[1] // 2
        header = ["generation"] + [f"{p}_{n}" for n in op_names[:k] for p in ("alpha", "beta")]
        _write_table(out / f"arms_{tag}.csv", header,
                     [[g + 1] + [_num(v) for v in row] for g, row in enumerate(res.arm_trajectory)])
    if res.metric_snapshots:
        _write_table(out / f"snapshots_{tag}.csv", ["evaluations", "igd", "hv"],
                     [[ev, _num(a), _num(b)] for ev, a, b in res.metric_snapshots])


def _run_row(res: RunResult) -> list:
    return [res.problem, res.policy, res.seed, res.n_evaluations, res.generations,
            _num(res.final_igd), _num(res.final_hv), len(res.front), res.replacements] + \
        [int(c) for c in res.operator_usage]


def _verdict(sample, baseline, minimize) -> tuple:
    r = wilcoxon_rank_sum(sample, baseline, minimize=minimize)
    word = {A_BETTER: "better", B_BETTER: "worse"}.get(r.verdict, "no_difference")
    return word, _num(r.p_value)


def summarize(rows: list, problems: list, policies: list) -> list:
    """Summary rows from parsed runs.csv records (dicts with float igd/hv)."""
    table = []
    for prob in problems:
        by_policy = {pol: [r for r in rows if r["problem"] == prob and r["policy"] == pol] for pol in policies}
        base = by_policy.get(BASELINE_POLICY)
        for pol in policies:
            cell = by_policy[pol]
            if not cell:
                continue
            out = [prob, pol, len(cell)]
            for metric, minimize in (("igd", True), ("hv", False)):
                vals = [r[metric] for r in cell]
                sd = stdev(vals) if len(vals) > 1 else 0.0
                if pol == BASELINE_POLICY or not base:
                    word, p = "", ""
                else:
                    word, p = _verdict(vals, [r[metric] for r in base], minimize)
                out += [f"{fmean(vals):.2e}", f"{sd:.2e}", word, p]
            table.append(out)
    return table


def read_runs(path) -> list:
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.DictReader(fh))
    for r in rows:
        r["seed"] = int(r["seed"])
        r["igd"] = float(r["igd"])
        r["hv"] = float(r["hv"])
    return rows


def run_experiment(config: ExperimentConfig, progress=None) -> dict:
    """Run every cell and write the output files; returns their paths.

    ``progress(result)`` is called after each run is written.
    """
    out = config.output_dir
    _check_writable(out)
    algos = {p: resolve_algo_config(config, p) for p in config.problems}
    for p, algo in algos.items():
        check_config(p, algo)  # fail before the first run

    ref_dir = out / "reference"
    refs = {p: reference_set(p, config.reference_count, ref_dir) for p in config.problems}
    hv_refs = {p: tuple(config.hv_reference.get(p, hv_reference_point(p))) for p in config.problems}
    cells = [(p, pol, s, algos[p], refs[p], hv_refs[p])
             for p in config.problems for pol in config.policies for s in config.seeds]

    runs_path = out / "runs.csv"
    timing_path = out / "timings.csv"
    runs_fh, runs_w = _open_csv(runs_path)
    time_fh, time_w = _open_csv(timing_path)
    parsed = []
    try:
        runs_w.writerow(RUNS_HEADER)
        time_w.writerow(["problem", "policy", "seed", "wall_seconds"])
        runs_fh.flush()
        if config.jobs > 1:
            pool = ProcessPoolExecutor(max_workers=config.jobs)
            results = pool.map(_run_cell, cells)
        else:
            pool = None
            results = map(_run_cell, cells)
        try:
            for res in results:  # map preserves cell order, so writing stays deterministic
                _write_run_files(out, res)
                runs_w.writerow(_run_row(res))
                runs_fh.flush()
                os.fsync(runs_fh.fileno())
                time_w.writerow([res.problem, res.policy, res.seed, f"{res.wall_time:.3f}"])
                time_fh.flush()
                parsed.append({"problem": res.problem, "policy": res.policy, "seed": res.seed,
                               "igd": float(_num(res.final_igd)), "hv": float(_num(res.final_hv))})
                if progress is not None:
                    progress(res)
        finally:
            if pool is not None:
                pool.shutdown(cancel_futures=True)
    finally:
        runs_fh.close()
        time_fh.close()

    summary_path = out / "summary.csv"
    _write_table(summary_path, SUMMARY_HEADER, summarize(parsed, config.problems, config.policies))
    return {"runs": runs_path, "summary": summary_path, "timings": timing_path, "reference": ref_dir}
