"""Quality indicators: nondominated filtering, IGD and hypervolume."""
import numpy as np

from .errors import ParameterError

__all__ = ["dominates", "nondominated_filter", "igd", "hypervolume"]


def _as_set(points, name="points"):
    arr = np.asarray(points, dtype=float)
    if arr.size == 0:
        return arr.reshape(0, arr.shape[-1] if arr.ndim == 2 else 0)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2:
        raise ParameterError(f"{name} must be a list of objective vectors")
    return arr


def dominates(a, b) -> bool:
    """a is no worse in every objective and differs from b."""
    a = np.asarray(a)
    b = np.asarray(b)
    return bool(np.all(a <= b) and np.any(a < b))


def nondominated_filter(points) -> np.ndarray:
    """Rows not dominated by any other row; duplicates kept once, first-seen order."""
    P = _as_set(points)
    if len(P) == 0:
        return P.copy()
    P = P[np.sort(np.unique(P, axis=0, return_index=True)[1])]
    keep = np.ones(len(P), dtype=bool)
    for i in range(len(P)):
        # rows that are <= everywhere are dominators (duplicates removed above)
        le = np.all(P <= P[i], axis=1)
        le[i] = False
        if le.any():
            keep[i] = False
    return P[keep]


def igd(solutions, reference, chunk: int = 2048) -> float:
    """Mean over reference points of the distance to the nearest solution."""
    S = _as_set(solutions, "solutions")
    R = _as_set(reference, "reference")
    if len(S) == 0 or len(R) == 0:
        raise ParameterError("IGD needs non-empty solution and reference sets")
    if S.shape[1] != R.shape[1]:
        raise ParameterError("solution and reference sets differ in dimension")
    total = 0.0
    for start in range(0, len(R), chunk):
        block = R[start:start + chunk]
        d2 = ((block[:, None, :] - S[None, :, :]) ** 2).sum(axis=2)
        total += np.sqrt(d2.min(axis=1)).sum()
    return float(total / len(R))


def _hv2d(P, ref):
    # P: mutually nondominated points strictly inside the box
    P = P[np.argsort(P[:, 0], kind="stable")]
    vol = 0.0
    prev_f2 = ref[1]
    for f1, f2 in P:
        if f2 < prev_f2:
            vol += (ref[0] - f1) * (prev_f2 - f2)
            prev_f2 = f2
    return vol


def hypervolume(solutions, ref_point) -> float:
    """Volume dominated by the set inside the box bounded by ``ref_point``.

    Points that do not strictly dominate the reference point are dropped.
    Two objectives use a sorted sweep, three objectives slice along f3.
    """
    ref = np.asarray(ref_point, dtype=float)
    S = _as_set(solutions, "solutions")
    if len(S) == 0:
        return 0.0
    if S.shape[1] != ref.shape[0]:
        raise ParameterError("solution set and reference point differ in dimension")
    S = S[np.all(S < ref, axis=1)]
    if len(S) == 0:
        return 0.0
    m = ref.shape[0]
    if m == 2:
        return float(_hv2d(nondominated_filter(S), ref))
    if m == 3:
        S = nondominated_filter(S)
        S = S[np.argsort(S[:, 2], kind="stable")]
        levels = np.append(np.unique(S[:, 2]), ref[2])
        vol = 0.0
        for lo, hi in zip(levels[:-1], levels[1:]):
            active = S[S[:, 2] <= lo][:, :2]
            vol += _hv2d(active, ref[:2]) * (hi - lo)
        return float(vol)
    raise ParameterError("hypervolume supports two or three objectives")
