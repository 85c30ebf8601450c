import numpy as np


def allocate(lengths, count):
    """Split ``count`` points across segments proportionally (largest remainder)."""
    lengths = np.asarray(lengths, dtype=float)
    share = lengths / lengths.sum() * count
    out = np.floor(share).astype(int)
    rest = count - out.sum()
    order = np.argsort(-(share - out), kind="stable")
    out[order[:rest]] += 1
    return out


def sample_segments(curve, segments, count, points=()):
    """Uniform parameter grid over a union of intervals mapped through ``curve``.

    ``points`` are isolated parameter values that always appear once; the
    remaining budget is spread over ``segments`` in proportion to their length.
    """
    params = [np.asarray(points, dtype=float)]
    budget = count - len(points)
    lengths = [b - a for a, b in segments]
    for (a, b), c in zip(segments, allocate(lengths, budget)):
        if c == 1:
            params.append(np.array([a]))
        elif c > 1:
            params.append(np.linspace(a, b, c))
    return curve(np.concatenate(params))


def nondominated_runs(t, f):
    """Intervals of a dense 2-objective curve sample that are not dominated.

    ``f[:, 0]`` must be strictly increasing along ``t``; a sample is kept when
    its second objective is below everything to its left.
    """
    f2 = f[:, 1]
    prev_min = np.minimum.accumulate(np.concatenate([[np.inf], f2[:-1]]))
    mask = f2 < prev_min
    edges = np.flatnonzero(np.diff(np.concatenate([[0], mask.astype(int), [0]])))
    return [(t[s], t[e - 1]) for s, e in zip(edges[::2], edges[1::2])]
