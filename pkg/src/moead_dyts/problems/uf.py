"""CEC-2009 unconstrained test problems UF1-UF10.

Definitions follow Zhang et al., "Multiobjective optimization test instances
for the CEC 2009 special session and competition", technical report CES-487
(2008), section 3. The evaluators live in the kernel modules; this file holds
bounds and analytic Pareto fronts.
"""
import numpy as np

from .._lattice import lattice_divisions, simplex_lattice
from ._front import sample_segments

N_VAR = 30
TWO_OBJECTIVE = (1, 2, 3, 4, 5, 6, 7)


def n_objectives(k: int) -> int:
    return 2 if k in TWO_OBJECTIVE else 3


def bounds(k: int, n: int = N_VAR):
    lower = np.empty(n)
    upper = np.empty(n)
    if k == 3:
        lower[:] = 0.0
        upper[:] = 1.0
    elif k in (1, 2, 5, 6, 7):
        lower[0], upper[0] = 0.0, 1.0
        lower[1:], upper[1:] = -1.0, 1.0
    elif k == 4:
        lower[0], upper[0] = 0.0, 1.0
        lower[1:], upper[1:] = -2.0, 2.0
    else:
        lower[:2], upper[:2] = 0.0, 1.0
        lower[2:], upper[2:] = -2.0, 2.0
    return lower, upper


def pareto_set_point(k: int, x1: float, x2: float = 0.0, n: int = N_VAR) -> np.ndarray:
    """A decision vector on the Pareto set parameterised by x1 (and x2 for m = 3)."""
    j = np.arange(2, n + 1)
    x = np.empty(n)
    x[0] = x1
    if k in (1, 4, 5, 6, 7):
        x[1:] = np.sin(6 * np.pi * x1 + j * np.pi / n)
    elif k == 2:
        a = 0.3 * x1 * x1 * np.cos(24 * np.pi * x1 + 4 * j * np.pi / n) + 0.6 * x1
        x[1:] = np.where(j % 2 == 1, a * np.cos(6 * np.pi * x1 + j * np.pi / n),
                         a * np.sin(6 * np.pi * x1 + j * np.pi / n))
    elif k == 3:
        x[1:] = x1 ** (0.5 * (1 + 3 * (j - 2) / (n - 2)))
    else:
        j = np.arange(3, n + 1)
        x[1] = x2
        x[2:] = 2 * x2 * np.sin(2 * np.pi * x1 + j * np.pi / n)
    return x


def _largest_filtered_lattice(count, keep):
    h = max(1, lattice_divisions(3, count))
    best = None
    while True:
        pts = simplex_lattice(3, h)
        pts = pts[keep(pts)]
        if len(pts) > count:
            break
        best = pts
        h += 1
    return best


def true_front(k: int, count: int) -> np.ndarray:
    if k in (1, 2, 3):
        # f2 = 1 - sqrt(f1); grid uniform in sqrt(f1)
        return sample_segments(lambda t: np.column_stack([t * t, 1 - t]), [(0.0, 1.0)], count)
    if k == 4:
        return sample_segments(lambda t: np.column_stack([t, 1 - t * t]), [(0.0, 1.0)], count)
    if k == 5:
        i = np.arange(21) / 20.0
        return np.column_stack([i, 1 - i])
    if k == 6:
        line = lambda t: np.column_stack([t, 1 - t])  # noqa: E731
        return sample_segments(line, [(0.25, 0.5), (0.75, 1.0)], count, points=[0.0])
    if k == 7:
        return sample_segments(lambda t: np.column_stack([t, 1 - t]), [(0.0, 1.0)], count)
    if k in (8, 10):
        w = simplex_lattice(3, lattice_divisions(3, count))
        return w / np.linalg.norm(w, axis=1, keepdims=True)
    if k == 9:
        # plane f1 + f2 + f3 = 1 restricted to f1 <= (1-f3)/4 or f1 >= 3(1-f3)/4
        def keep(p):
            s = 1.0 - p[:, 2]
            return (p[:, 0] <= s / 4 + 1e-12) | (p[:, 0] >= 3 * s / 4 - 1e-12)

        return _largest_filtered_lattice(count, keep)
    raise ValueError(f"unknown UF problem {k}")
