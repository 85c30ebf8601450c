"""Reproduction operator pool, polynomial mutation and bound repair."""
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from . import _pycore
from ._backend import is_native, kernels
from .errors import ParameterError

__all__ = [
    "OperatorId",
    "OperatorParams",
    "Bounds",
    "parse_operator",
    "parent_count",
    "apply_operator",
    "polynomial_mutation",
    "repair_bounds",
]


class OperatorId(IntEnum):
    DE_RAND_1 = 0
    DE_RAND_2 = 1
    DE_CTR_1 = 2
    DE_CTR_2 = 3
    UM = 4


_ALIASES = {
    "de/rand/1": OperatorId.DE_RAND_1,
    "de/rand/2": OperatorId.DE_RAND_2,
    "de/current-to-rand/1": OperatorId.DE_CTR_1,
    "de/current-to-rand/2": OperatorId.DE_CTR_2,
}


def parse_operator(name) -> OperatorId:
    """Accepts enum names (any case), ``de/rand/1``-style labels or indices."""
    if isinstance(name, (int, np.integer)):
        return OperatorId(int(name))
    key = str(name).strip().lower()
    if key in _ALIASES:
        return _ALIASES[key]
    try:
        return OperatorId[key.upper().replace("-", "_")]
    except KeyError:
        raise ParameterError(f"unknown operator {name!r}") from None


@dataclass(frozen=True)
class OperatorParams:
    """``None`` for the per-dimension probabilities means ``1/n``."""

    F: float = 0.5
    K: float = 0.5
    um_per_dim_prob: float | None = None
    pm_eta: float = 20.0
    pm_prob: float | None = None

    def __post_init__(self):
        if self.F < 0 or self.K < 0:
            raise ParameterError("F and K must be non-negative")
        if self.pm_eta <= 0:
            raise ParameterError("pm_eta must be positive")
        for p in (self.um_per_dim_prob, self.pm_prob):
            if p is not None and not 0.0 <= p <= 1.0:
                raise ParameterError("per-dimension probabilities must lie in [0, 1]")

    def um_prob_for(self, n: int) -> float:
        return 1.0 / n if self.um_per_dim_prob is None else float(self.um_per_dim_prob)

    def pm_prob_for(self, n: int) -> float:
        return 1.0 / n if self.pm_prob is None else float(self.pm_prob)


class Bounds:
    """Box ``lower <= x <= upper`` stored as contiguous float arrays."""

    __slots__ = ("lower", "upper")

    def __init__(self, lower, upper):
        lower = np.ascontiguousarray(lower, dtype=float)
        upper = np.ascontiguousarray(upper, dtype=float)
        if lower.shape != upper.shape or lower.ndim != 1:
            raise ParameterError("bounds must be two vectors of equal length")
        if not np.all(lower < upper):
            raise ParameterError("every lower bound must be below its upper bound")
        self.lower = lower
        self.upper = upper

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def span(self):
        return self.upper - self.lower

    def contains(self, x) -> bool:
        x = np.asarray(x)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def __repr__(self):
        return f"Bounds(n={self.n})"


_PARENTS = dict(zip(OperatorId, _pycore.PARENT_COUNTS))


def parent_count(op) -> int:
    """Random parents an operator needs besides the target vector."""
    return _PARENTS[OperatorId(op)]


def apply_operator(op, target, parents, bounds: Bounds, params: OperatorParams, rng):
    """Offspring of ``target`` under pool operator ``op``, clamped into ``bounds``.

    UM always consumes two uniforms per dimension (selection, step) and the DE
    variants consume none, so a call's draw count depends only on ``(op, n)``.
    """
    op = OperatorId(op)
    need = _PARENTS[op]
    if len(parents) != need:
        raise ParameterError(f"{op.name} needs {need} parents, got {len(parents)}")
    target = np.ascontiguousarray(target, dtype=float)
    if need:
        parents = np.ascontiguousarray(parents, dtype=float)
    else:
        parents = None
    n = len(target)
    mod = kernels if is_native(rng) else _pycore
    return mod.variation(int(op), target, parents, bounds.lower, bounds.upper,
                         params.F, params.K, params.um_prob_for(n), rng)


def polynomial_mutation(x, bounds: Bounds, params: OperatorParams, rng):
    """Polynomial mutation, two uniforms per dimension, result clamped into bounds.

    For a selected dimension with draw ``u`` the step is
    ``((2u) ** (1/(eta+1)) - 1) * span`` when ``u < 0.5`` and
    ``(1 - (2(1-u)) ** (1/(eta+1))) * span`` otherwise.
    """
    x = np.ascontiguousarray(x, dtype=float)
    mod = kernels if is_native(rng) else _pycore
    return mod.polynomial_mutation(x, bounds.lower, bounds.upper, float(params.pm_eta),
                                   params.pm_prob_for(len(x)), rng)


def repair_bounds(x, bounds: Bounds):
    return np.clip(np.asarray(x, dtype=float), bounds.lower, bounds.upper)
