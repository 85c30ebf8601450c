import numpy as np


def lattice_divisions(m: int, max_points: int) -> int:
    """Largest H whose simplex lattice in m dimensions has at most ``max_points`` points."""
    from math import comb

    h = 0
    while comb(h + 1 + m - 1, m - 1) <= max_points:
        h += 1
    return h


def simplex_lattice(m: int, h: int) -> np.ndarray:
    """All points of the simplex-lattice design {i/h : sum = 1} in m = 2 or 3 dimensions.

    Rows are ordered lexicographically by the first coordinate, then the second.
    The last coordinate is formed from integer counts so rows sum to one up to
    a single rounding.
    """
    if m == 2:
        i = np.arange(h + 1)
        return np.column_stack([i / h, 1.0 - i / h])
    if m == 3:
        rows = [(i / h, j / h, (h - i - j) / h) for i in range(h + 1) for j in range(h + 1 - i)]
        return np.array(rows, dtype=float)
    raise ValueError(f"lattice supports m in (2, 3), got {m}")
