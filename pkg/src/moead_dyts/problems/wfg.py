"""WFG1-WFG9 (Huband, Hingston, Barone, While; IEEE TEVC 10(5), 2006).

Two objectives with ``k`` position and ``l`` distance parameters. Transformation
and shape functions follow the report's definitions; evaluators work on a
batch of rows so the same code serves single evaluations and front sampling.
"""
import math

import numpy as np

from ._front import nondominated_runs, sample_segments

K_POS = 18
L_DIST = 20


def bounds(n: int):
    return np.zeros(n), 2.0 * np.arange(1, n + 1)


def _clip01(y):
    # Rounding in the transformations can leave values a hair outside [0, 1].
    return np.clip(y, 0.0, 1.0)


def s_linear(y, a):
    return _clip01(np.abs(y - a) / np.abs(np.floor(a - y) + a))


def s_decept(y, a, b, c):
    t1 = np.floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b)
    t2 = np.floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b)
    return _clip01(1.0 + (np.abs(y - a) - b) * (t1 + t2 + 1.0 / b))


def s_multi(y, a, b, c):
    t1 = np.abs(y - c) / (2.0 * (np.floor(c - y) + c))
    t2 = (4.0 * a + 2.0) * np.pi * (0.5 - t1)
    return _clip01((1.0 + np.cos(t2) + 4.0 * b * t1 ** 2) / (b + 2.0))


def b_poly(y, alpha):
    return _clip01(y ** alpha)


def b_flat(y, a, b, c):
    out = (a + np.minimum(0.0, np.floor(y - b)) * a * (b - y) / b
           - np.minimum(0.0, np.floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c))
    return _clip01(out)


def b_param(y, ref, a, b, c):
    v = a - (1.0 - 2.0 * ref) * np.abs(np.floor(0.5 - ref) + a)
    return _clip01(y ** (b + (c - b) * v))


def r_sum(y, w):
    return _clip01((y * w).sum(axis=1) / w.sum())


def r_nonsep(y, a):
    n = y.shape[1]
    val = np.zeros(y.shape[0])
    for j in range(n):
        val = val + y[:, j]
        for q in range(a - 1):
            val = val + np.abs(y[:, j] - y[:, (1 + j + q) % n])
    half = math.ceil(a / 2.0)
    return _clip01(val / (n / a * half * (1.0 + 2.0 * a - 2.0 * half)))


def _param_refs(y, lo, hi, before):
    """Mean of the variables after (``before=False``) or before each index in [lo, hi)."""
    n = y.shape[1]
    cs = np.cumsum(y, axis=1)
    idx = np.arange(lo, hi)
    if before:
        return cs[:, idx - 1] / idx
    return (cs[:, -1:] - cs[:, idx]) / (n - 1 - idx)


_BP = (0.98 / 49.98, 0.02, 50.0)


def _transform(num, y, k):
    """Reduce normalised decision rows ``y`` to (t_position, t_distance) columns."""
    n = y.shape[1]
    y = y.copy()
    if num == 1:
        y[:, k:] = s_linear(y[:, k:], 0.35)
        y[:, k:] = b_flat(y[:, k:], 0.8, 0.75, 0.85)
        y = b_poly(y, 0.02)
        w = 2.0 * np.arange(1, n + 1)
        return r_sum(y[:, :k], w[:k]), r_sum(y[:, k:], w[k:])
    if num in (2, 3):
        y[:, k:] = s_linear(y[:, k:], 0.35)
        pairs = (n - k) // 2
        dist = np.column_stack([r_nonsep(y[:, k + 2 * i:k + 2 * i + 2], 2) for i in range(pairs)])
        return r_sum(y[:, :k], np.ones(k)), r_sum(dist, np.ones(pairs))
    if num in (4, 5):
        if num == 4:
            y = s_multi(y, 30.0, 10.0, 0.35)
        else:
            y = s_decept(y, 0.35, 0.001, 0.05)
        return r_sum(y[:, :k], np.ones(k)), r_sum(y[:, k:], np.ones(n - k))
    if num == 6:
        y[:, k:] = s_linear(y[:, k:], 0.35)
        return r_nonsep(y[:, :k], k), r_nonsep(y[:, k:], n - k)
    if num == 7:
        y[:, :k] = b_param(y[:, :k], _param_refs(y, 0, k, before=False), *_BP)
        y[:, k:] = s_linear(y[:, k:], 0.35)
        return r_sum(y[:, :k], np.ones(k)), r_sum(y[:, k:], np.ones(n - k))
    if num == 8:
        y[:, k:] = b_param(y[:, k:], _param_refs(y, k, n, before=True), *_BP)
        y[:, k:] = s_linear(y[:, k:], 0.35)
        return r_sum(y[:, :k], np.ones(k)), r_sum(y[:, k:], np.ones(n - k))
    if num == 9:
        y[:, :n - 1] = b_param(y[:, :n - 1], _param_refs(y, 0, n - 1, before=False), *_BP)
        y[:, :k] = s_decept(y[:, :k], 0.35, 0.001, 0.05)
        y[:, k:] = s_multi(y[:, k:], 30.0, 95.0, 0.35)
        return r_nonsep(y[:, :k], k), r_nonsep(y[:, k:], n - k)
    raise ValueError(f"unknown WFG problem {num}")


def shape(num, x1):
    """Shape values (h1, h2) for position parameter x1 (M = 2)."""
    half_pi = 0.5 * np.pi
    if num == 1:
        h1 = 1.0 - np.cos(x1 * half_pi)
        h2 = 1.0 - x1 - np.cos(10.0 * np.pi * x1 + half_pi) / (10.0 * np.pi)
    elif num == 2:
        h1 = 1.0 - np.cos(x1 * half_pi)
        h2 = 1.0 - x1 * np.cos(5.0 * x1 * np.pi) ** 2
    elif num == 3:
        h1 = x1
        h2 = 1.0 - x1
    else:
        h1 = np.sin(x1 * half_pi)
        h2 = np.cos(x1 * half_pi)
    return h1, h2


def evaluate_batch(num, z, k=K_POS):
    """Objective rows for decision rows ``z`` (shape ``(rows, n)``)."""
    z = np.atleast_2d(np.asarray(z, dtype=float))
    n = z.shape[1]
    y = _clip01(z / (2.0 * np.arange(1, n + 1)))
    t_pos, t_dist = _transform(num, y, k)
    # degeneracy constant A_1 = 1 for every problem when M = 2, so x1 = t_pos
    x1 = np.maximum(t_dist, 1.0) * (t_pos - 0.5) + 0.5
    h1, h2 = shape(num, x1)
    return np.column_stack([t_dist + 2.0 * h1, t_dist + 4.0 * h2])


def true_front(num, count):
    def curve(t):
        h1, h2 = shape(num, t)
        return np.column_stack([2.0 * h1, 4.0 * h2])

    if num == 2:
        t = np.linspace(0.0, 1.0, 400001)
        segments = nondominated_runs(t, curve(t))
        return sample_segments(curve, segments, count)
    return sample_segments(curve, [(0.0, 1.0)], count)
