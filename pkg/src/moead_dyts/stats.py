"""Two-sided Wilcoxon rank-sum test with mid-ranks for ties."""
import math
from dataclasses import dataclass
from statistics import median

import numpy as np

from .errors import ParameterError

__all__ = [
    "A_BETTER",
    "B_BETTER",
    "NO_DIFFERENCE",
    "RankSumResult",
    "midranks",
    "rank_sum_exact_p",
    "rank_sum_normal_p",
    "wilcoxon_rank_sum",
]

A_BETTER = "A_better"
B_BETTER = "B_better"
NO_DIFFERENCE = "no_difference"

EXACT_MAX_SIZE = 12


@dataclass(frozen=True)
class RankSumResult:
    verdict: str
    p_value: float
    statistic: float
    method: str


def midranks(values) -> np.ndarray:
    """1-based ranks; tied values share the mean of the ranks they span."""
    v = np.asarray(values, dtype=float)
    order = np.argsort(v, kind="stable")
    ranks = np.empty(len(v))
    sv = v[order]
    i = 0
    while i < len(v):
        j = i
        while j + 1 < len(v) and sv[j + 1] == sv[i]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def rank_sum_exact_p(a, b) -> float:
    """Exact two-sided p-value by counting every split of the pooled ranks.

    Counts subsets of size len(a) by their rank sum (ranks doubled to stay
    integral under ties) and returns the share at least as far from the mean
    as the observed sum.
    """
    n1, n2 = len(a), len(b)
    r2 = np.rint(2 * midranks(list(a) + list(b))).astype(int)
    observed = int(r2[:n1].sum())
    total = int(r2.sum())
    # ways[j][s]: subsets of size j with doubled rank sum s
    ways = [dict() for _ in range(n1 + 1)]
    ways[0][0] = 1
    for r in r2:
        for j in range(min(n1, len(r2)) - 1, -1, -1):
            row = ways[j]
            if not row:
                continue
            nxt = ways[j + 1]
            for s, c in row.items():
                nxt[s + r] = nxt.get(s + r, 0) + c
    # doubled mean of the rank sum is n1 * total / (n1 + n2); compare scaled by (n1 + n2)
    centre = n1 * total
    dev_obs = abs(observed * (n1 + n2) - centre)
    extreme = sum(c for s, c in ways[n1].items() if abs(s * (n1 + n2) - centre) >= dev_obs)
    return min(1.0, extreme / math.comb(n1 + n2, n1))


def rank_sum_normal_p(a, b) -> float:
    """Normal approximation with tie-corrected variance and continuity correction."""
    n1, n2 = len(a), len(b)
    N = n1 + n2
    pooled = list(a) + list(b)
    ranks = midranks(pooled)
    w = ranks[:n1].sum()
    mean = n1 * (N + 1) / 2.0
    _, tie_counts = np.unique(np.asarray(pooled, dtype=float), return_counts=True)
    tie_term = float(((tie_counts ** 3) - tie_counts).sum())
    var = n1 * n2 / 12.0 * ((N + 1) - tie_term / (N * (N - 1))) if N > 1 else 0.0
    if var <= 0.0:
        return 1.0
    z = max(abs(w - mean) - 0.5, 0.0) / math.sqrt(var)
    return min(1.0, math.erfc(z / math.sqrt(2.0)))


def wilcoxon_rank_sum(sample_a, sample_b, significance: float = 0.05, minimize: bool = True) -> RankSumResult:
    """Compare two samples of an indicator.

    Exact when both samples have at most 12 values, normal approximation
    otherwise. When significant, the sample with the better median wins
    (lower if ``minimize``); equal medians fall back to the mean rank.
    """
    a = [float(v) for v in sample_a]
    b = [float(v) for v in sample_b]
    if not a or not b:
        raise ParameterError("both samples must be non-empty")
    if max(len(a), len(b)) <= EXACT_MAX_SIZE:
        p, method = rank_sum_exact_p(a, b), "exact"
    else:
        p, method = rank_sum_normal_p(a, b), "normal"
    ranks = midranks(a + b)
    w = float(ranks[:len(a)].sum())
    if p >= significance:
        return RankSumResult(NO_DIFFERENCE, p, w, method)
    ma, mb = median(a), median(b)
    if ma == mb:
        a_lower = ranks[:len(a)].mean() < ranks[len(a):].mean()
    else:
        a_lower = ma < mb
    verdict = A_BETTER if a_lower == minimize else B_BETTER
    return RankSumResult(verdict, p, w, method)
