"""Command-line entry point: ``moead-dyts --problems UF1 UF4 --policies dyts fixed:de_rand_1``."""
import argparse
import sys

from .errors import ConfigurationError
from .experiment import ExperimentConfig, run_experiment
from .problems import PROBLEM_IDS

QUICK_SEEDS = 5
QUICK_DIVISOR = 3
FULL_RUNS = 31


def _problem_list(values):
    out = []
    for v in values:
        for item in v.split(","):
            item = item.strip()
            if item.lower() == "all":
                out.extend(p.value for p in PROBLEM_IDS)
            elif item:
                out.append(item)
    return out


def _split(values):
    return [item.strip() for v in values for item in v.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="moead-dyts",
        description="Run MOEA/D-DRA with bandit operator selection over a benchmark matrix.",
    )
    ap.add_argument("--problems", nargs="+", default=["UF1"],
                    help="problem ids (UF1..UF10, WFG1..WFG9) or 'all'; comma or space separated")
    ap.add_argument("--policies", nargs="+", default=["dyts"],
                    help="dyts, ts, random or fixed:<operator>, e.g. fixed:de_rand_1")
    ap.add_argument("--seeds", nargs="+", type=int, default=None, help="explicit seed list")
    ap.add_argument("--runs", type=int, default=None,
                    help=f"use seeds 1..RUNS (default {FULL_RUNS}, or {QUICK_SEEDS} with --quick)")
    ap.add_argument("--max-evals", type=int, default=None, help="evaluation budget for every problem")
    ap.add_argument("--pop-size", type=int, default=None, help="requested population size")
    ap.add_argument("--out", default="results", help="output directory")
    ap.add_argument("--quick", action="store_true",
                    help=f"{QUICK_SEEDS} seeds and budgets divided by {QUICK_DIVISOR}")
    ap.add_argument("--jobs", type=int, default=1, help="runs executed in parallel")
    ap.add_argument("--snapshot-interval", type=int, default=0,
                    help="record IGD/HV every this many evaluations (0 = off)")
    return ap


def config_from_args(args) -> ExperimentConfig:
    if args.seeds is not None and args.runs is not None:
        raise ConfigurationError("give either --seeds or --runs, not both")
    if args.seeds is not None:
        seeds = args.seeds
    else:
        runs = args.runs if args.runs is not None else (QUICK_SEEDS if args.quick else FULL_RUNS)
        if runs < 1:
            raise ConfigurationError("--runs must be positive")
        seeds = list(range(1, runs + 1))
    return ExperimentConfig(
        problems=_problem_list(args.problems),
        policies=_split(args.policies),
        seeds=seeds,
        output_dir=args.out,
        max_evaluations=args.max_evals,
        population_N=args.pop_size,
        budget_divisor=QUICK_DIVISOR if args.quick else 1,
        snapshot_interval=args.snapshot_interval,
        jobs=args.jobs,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)

        def report(res):
            print(f"{res.problem} {res.policy} seed={res.seed} igd={res.final_igd:.4e} "
                  f"hv={res.final_hv:.5f} ({res.wall_time:.1f}s)", flush=True)

        paths = run_experiment(config, progress=report)
    except ConfigurationError as exc:
        print(f"moead-dyts: error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {paths['runs']} and {paths['summary']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
