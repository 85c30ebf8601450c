"""Decomposition building blocks: scalarization, weights, neighborhoods, DRA utilities."""
import numpy as np

from . import _pycore
from ._backend import is_native, kernels
from ._lattice import lattice_divisions, simplex_lattice
from .errors import ParameterError

__all__ = [
    "EPS_W",
    "EPS_D",
    "TOURNAMENT_SIZE",
    "tchebycheff",
    "generate_weights",
    "build_neighborhoods",
    "boundary_indices",
    "new_ideal",
    "update_ideal",
    "compute_fir",
    "update_utility",
    "tournament_select_indices",
    "mating_scope",
    "fitness_improvement",
    "guarded_weights",
]

EPS_W = 1e-6
EPS_D = 1e-12
TOURNAMENT_SIZE = 10
TIE_TOL = 1e-12


def tchebycheff(objectives, weight, ideal) -> float:
    """max_i |f_i - z_i| / max(w_i, EPS_W)."""
    f = np.asarray(objectives, dtype=float)
    w = np.asarray(weight, dtype=float)
    z = np.asarray(ideal, dtype=float)
    if not (f.shape == w.shape == z.shape) or f.ndim != 1:
        raise ParameterError(f"dimension mismatch: {f.shape}, {w.shape}, {z.shape}")
    return float(np.max(np.abs(f - z) / np.maximum(w, EPS_W)))


def guarded_weights(weights) -> np.ndarray:
    return np.ascontiguousarray(np.maximum(weights, EPS_W))


def generate_weights(m: int, requested_N: int) -> np.ndarray:
    """Evenly spread weight vectors, one per row.

    Two objectives give exactly ``requested_N`` vectors; three objectives give
    the largest simplex lattice that does not exceed ``requested_N``.
    """
    if m not in (2, 3):
        raise ParameterError(f"weights are generated for m in (2, 3), got {m}")
    if requested_N < m:
        raise ParameterError(f"need at least {m} weight vectors, got {requested_N}")
    if m == 2:
        return simplex_lattice(2, requested_N - 1)
    return simplex_lattice(3, lattice_divisions(3, requested_N))


def build_neighborhoods(weights, T: int) -> np.ndarray:
    """Row i lists the T nearest weight vectors to w_i (itself first), ties by index."""
    W = np.asarray(weights, dtype=float)
    if not 1 <= T <= len(W):
        raise ParameterError(f"neighborhood size {T} outside [1, {len(W)}]")
    d = np.sqrt(((W[:, None, :] - W[None, :, :]) ** 2).sum(axis=2))
    out = np.empty((len(W), T), dtype=np.intp)
    for i, row in enumerate(d):
        order = np.argsort(row, kind="stable")
        # distances equal up to rounding form one tie group, ordered by index
        group = np.concatenate(([0], np.cumsum(np.diff(row[order]) > TIE_TOL)))
        out[i] = order[np.lexsort((order, group))][:T]
    return out


def boundary_indices(weights) -> list:
    """Subproblems whose weight is a unit vector, i.e. single-objective ones."""
    W = np.asarray(weights)
    return [int(i) for i in np.flatnonzero(np.isclose(W.max(axis=1), 1.0, rtol=0, atol=1e-12))]


def new_ideal(m: int) -> np.ndarray:
    return np.full(m, np.inf)


def update_ideal(ideal, objectives) -> np.ndarray:
    """Componentwise minimum; returns a new array."""
    z = np.asarray(ideal, dtype=float)
    f = np.asarray(objectives, dtype=float)
    if z.shape != f.shape:
        raise ParameterError("ideal point and objective vector differ in dimension")
    return np.minimum(z, f)


def compute_fir(g_old: float, g_new: float) -> float:
    """Relative improvement (g_old - g_new) / max(|g_old|, EPS_D)."""
    return (g_old - g_new) / max(abs(g_old), EPS_D)


def update_utility(pi: float, fir: float) -> float:
    if fir > 0.001:
        return 1.0
    return (0.95 + 0.05 * fir / 0.001) * pi


def tournament_select_indices(utilities, boundary, count: int, rng, depth: int = TOURNAMENT_SIZE) -> list:
    """Boundary indices followed by ``count`` tournament winners.

    Each tournament draws ``depth`` candidates with replacement from the
    indices not yet chosen; the first-drawn candidate of highest utility wins
    and leaves the pool.
    """
    u = np.ascontiguousarray(utilities, dtype=float)
    boundary = list(boundary)
    if count < 0 or count + len(boundary) > len(u):
        raise ParameterError("cannot select that many subproblems")
    mod = kernels if is_native(rng) else _pycore
    return mod.tournament(u, boundary, int(count), int(depth), rng)


def mating_scope(i: int, neighborhoods, delta_prob: float, N: int, rng):
    """B(i) with probability ``delta_prob``, else every index; one uniform per call."""
    if rng.uniform01() < delta_prob:
        return neighborhoods[i]
    return np.arange(N, dtype=np.intp)


def fitness_improvement(child_objectives, scope, weights, objectives, ideal):
    """Best g(incumbent) - g(child) over the scope and the subproblem achieving it.

    ``weights`` and ``objectives`` are the population's weight and objective
    matrices; ties go to the lowest subproblem index.
    """
    scope = np.asarray(scope, dtype=np.intp)
    if scope.size == 0:
        raise ParameterError("mating scope is empty")
    return kernels.fitness_improvement(
        np.ascontiguousarray(child_objectives, dtype=float),
        np.ascontiguousarray(objectives, dtype=float),
        guarded_weights(weights),
        np.ascontiguousarray(ideal, dtype=float),
        scope,
    )
