"""Benchmark suite: UF1-UF10 (n = 30) and two-objective WFG1-WFG9 (n = 38)."""
from enum import Enum
from pathlib import Path

import numpy as np

from .._backend import kernels
from ..errors import ParameterError
from ..operators import Bounds
from . import uf, wfg

__all__ = [
    "ProblemId",
    "ProblemInstance",
    "get_problem",
    "evaluate",
    "bounds",
    "sample_true_pf",
    "save_front",
    "load_front",
    "reference_set",
    "PROBLEM_IDS",
]


class ProblemId(str, Enum):
    UF1 = "UF1"
    UF2 = "UF2"
    UF3 = "UF3"
    UF4 = "UF4"
    UF5 = "UF5"
    UF6 = "UF6"
    UF7 = "UF7"
    UF8 = "UF8"
    UF9 = "UF9"
    UF10 = "UF10"
    WFG1 = "WFG1"
    WFG2 = "WFG2"
    WFG3 = "WFG3"
    WFG4 = "WFG4"
    WFG5 = "WFG5"
    WFG6 = "WFG6"
    WFG7 = "WFG7"
    WFG8 = "WFG8"
    WFG9 = "WFG9"

    @property
    def family(self) -> str:
        return "UF" if self.value.startswith("UF") else "WFG"

    @property
    def number(self) -> int:
        return int(self.value[len(self.family):])


PROBLEM_IDS = tuple(ProblemId)


class ProblemInstance:
    """A box-constrained benchmark with its evaluator and analytic front."""

    def __init__(self, pid: ProblemId):
        self.id = pid
        k = pid.number
        if pid.family == "UF":
            self.n = uf.N_VAR
            self.m = uf.n_objectives(k)
            lower, upper = uf.bounds(k, self.n)
            uf_eval = kernels.uf_evaluate
            self._fn = lambda x: uf_eval(k, x)
        else:
            self.n = wfg.K_POS + wfg.L_DIST
            self.m = 2
            lower, upper = wfg.bounds(self.n)
            self._fn = lambda x: wfg.evaluate_batch(k, x)[0]
        self.bounds = Bounds(lower, upper)

    @property
    def name(self) -> str:
        return self.id.value

    def evaluate(self, x) -> np.ndarray:
        x = np.ascontiguousarray(x, dtype=float)
        if x.shape != (self.n,):
            raise ParameterError(f"{self.name} expects a vector of length {self.n}, got shape {x.shape}")
        if not self.bounds.contains(x):
            raise ParameterError(f"decision vector outside the {self.name} box")
        return self._fn(x)

    def evaluate_unchecked(self, x) -> np.ndarray:
        """Evaluate a contiguous float vector already known to be feasible."""
        return self._fn(x)

    def evaluate_many(self, X) -> np.ndarray:
        X = np.ascontiguousarray(X, dtype=float)
        if self.id.family == "WFG":
            return wfg.evaluate_batch(self.id.number, X)
        return np.array([self._fn(row) for row in X])

    def sample_true_pf(self, count: int = 10000) -> np.ndarray:
        if count < 2:
            raise ParameterError("count must be at least 2")
        if self.id.family == "UF":
            return uf.true_front(self.id.number, count)
        return wfg.true_front(self.id.number, count)

    def __repr__(self):
        return f"ProblemInstance({self.name}, n={self.n}, m={self.m})"


def _as_id(pid) -> ProblemId:
    if isinstance(pid, ProblemInstance):
        return pid.id
    if isinstance(pid, ProblemId):
        return pid
    try:
        return ProblemId(str(pid).upper())
    except ValueError:
        raise ParameterError(f"unknown problem {pid!r}") from None


def get_problem(pid) -> ProblemInstance:
    if isinstance(pid, ProblemInstance):
        return pid
    return ProblemInstance(_as_id(pid))


def evaluate(problem, x) -> np.ndarray:
    return get_problem(problem).evaluate(x)


def bounds(problem) -> Bounds:
    return get_problem(problem).bounds


def sample_true_pf(problem, count: int = 10000) -> np.ndarray:
    return get_problem(problem).sample_true_pf(count)


def save_front(path, points) -> None:
    """Whitespace-separated objective vectors, one per line, no header."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in points:
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")


def load_front(path) -> np.ndarray:
    return np.atleast_2d(np.loadtxt(path, ndmin=2))


def reference_set(problem, count: int = 10000, cache_dir=None) -> np.ndarray:
    """True-front sample, read from / written to ``cache_dir`` when given."""
    prob = get_problem(problem)
    if cache_dir is None:
        return prob.sample_true_pf(count)
    path = Path(cache_dir) / f"pf_{prob.name}_{count}.dat"
    if path.exists():
        return load_front(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pts = prob.sample_true_pf(count)
    tmp = path.with_suffix(".tmp")
    save_front(tmp, pts)
    tmp.replace(path)
    return load_front(path)
