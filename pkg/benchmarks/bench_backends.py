"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_backends.py [--evals 6000]

Kernel timings run in-process on both modules. The end-to-end rows run a short
UF1 and WFG4 optimisation in a subprocess per backend (selected through
MOEAD_DYTS_BACKEND) and also confirm both backends produce the same population.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from moead_dyts import _pycore

try:
    from moead_dyts import _core
except ImportError:
    _core = None


def kernel_cases(mod):
    rng = mod.Xoshiro256(1, 1)
    lo, up = np.r_[0.0, -np.ones(29)], np.ones(30)
    x = np.ascontiguousarray(lo + 0.5 * (up - lo))
    parents = np.ascontiguousarray(lo + np.random.default_rng(0).random((5, 30)) * (up - lo))
    u = np.random.default_rng(1).random(300)
    F = np.random.default_rng(2).random((300, 2))
    Wg = np.maximum(np.column_stack([np.linspace(0, 1, 300), 1 - np.linspace(0, 1, 300)]), 1e-6)
    scope = np.arange(20, dtype=np.intp)
    alphas, betas = [3.0, 7.0, 1.0, 2.0, 40.0], [5.0, 2.0, 1.0, 9.0, 60.0]
    return {
        "uniform01 x1000": (lambda: [rng.uniform01() for _ in range(1000)], 1000),
        "beta(30, 70)": (lambda: rng.beta(30.0, 70.0), 1),
        "thompson_select k=5": (lambda: mod.thompson_select(alphas, betas, rng), 1),
        "tournament N=300": (lambda: mod.tournament(u, [0, 299], 58, 10, rng), 1),
        "DE/current-to-rand/2 n=30": (lambda: mod.variation(3, x, parents, lo, up, 0.5, 0.5, 1 / 30, rng), 1),
        "polynomial mutation n=30": (lambda: mod.polynomial_mutation(x, lo, up, 20.0, 1 / 30, rng), 1),
        "fitness improvement T=20": (lambda: mod.fitness_improvement(F[3], F, Wg, F.min(axis=0), scope), 1),
        "UF1 evaluate": (lambda: mod.uf_evaluate(1, x), 1),
    }


def per_call_us(fn, repeat=5):
    n, _ = timeit.Timer(fn).autorange()
    best = min(timeit.Timer(fn).repeat(repeat, n)) / n
    return best * 1e6


RUN = """
import hashlib, time
from moead_dyts import AlgoConfig, evolve, BACKEND
t = time.perf_counter()
r = evolve("{problem}", AlgoConfig(population_N=100, max_evaluations={evals}), "dyts", 1)
dt = time.perf_counter() - t
print(BACKEND, dt, hashlib.sha256(r.F.tobytes()).hexdigest()[:16])
"""


def end_to_end(problem, evals, backend):
    env = dict(os.environ, MOEAD_DYTS_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", RUN.format(problem=problem, evals=evals)],
                         env=env, capture_output=True, text=True, check=True).stdout.split()
    return out[0], float(out[1]), out[2]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--evals", type=int, default=6000, help="evaluations per end-to-end run")
    args = ap.parse_args(argv)
    if _core is None:
        print("compiled extension not built; only the Python kernels are available")
        return 1
    print(f"{'kernel':32s} {'python us':>12s} {'cython us':>12s} {'speed-up':>9s}")
    py_cases, cy_cases = kernel_cases(_pycore), kernel_cases(_core)
    for name in py_cases:
        tp = per_call_us(py_cases[name][0])
        tc = per_call_us(cy_cases[name][0])
        print(f"{name:32s} {tp:12.2f} {tc:12.2f} {tp / tc:8.1f}x")
    print()
    print(f"{'end-to-end (N=100)':32s} {'python s':>12s} {'cython s':>12s} {'speed-up':>9s}  same result")
    for problem in ("UF1", "WFG4"):
        name_p, tp, hp = end_to_end(problem, args.evals, "python")
        name_c, tc, hc = end_to_end(problem, args.evals, "cython")
        assert (name_p, name_c) == ("python", "cython")
        label = f"{problem} dyts {args.evals} evals"
        print(f"{label:32s} {tp:12.2f} {tc:12.2f} {tp / tc:8.1f}x  {hp == hc}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
