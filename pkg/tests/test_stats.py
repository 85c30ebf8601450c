import itertools
from fractions import Fraction

import numpy as np
import pytest

from moead_dyts import ParameterError
from moead_dyts.stats import (
    A_BETTER,
    B_BETTER,
    NO_DIFFERENCE,
    midranks,
    rank_sum_exact_p,
    rank_sum_normal_p,
    wilcoxon_rank_sum,
)


def enumeration_p(a, b):
    """Two-sided p by listing every way to pick len(a) ranks from the pool."""
    ranks = [Fraction(r).limit_denominator(2) for r in midranks(list(a) + list(b))]
    n1 = len(a)
    mean = Fraction(n1) * sum(ranks) / len(ranks)
    obs = abs(sum(ranks[:n1]) - mean)
    hits = total = 0
    for combo in itertools.combinations(range(len(ranks)), n1):
        total += 1
        hits += abs(sum(ranks[i] for i in combo) - mean) >= obs
    return hits / total


def test_midranks():
    assert midranks([3, 1, 2]).tolist() == [3, 1, 2]
    assert midranks([1, 2, 2, 3]).tolist() == [1, 2.5, 2.5, 4]


def test_identical_samples():
    r = wilcoxon_rank_sum([1.0, 2.0, 3.0, 4.0], [1.0, 2.0, 3.0, 4.0])
    assert r.verdict == NO_DIFFERENCE and r.p_value == 1.0


def test_separated_triples():
    assert enumeration_p([1, 2, 3], [4, 5, 6]) == pytest.approx(0.1)
    r = wilcoxon_rank_sum([1, 2, 3], [4, 5, 6])
    assert r.p_value == pytest.approx(0.1, abs=1e-15)
    assert r.statistic == 6 and r.method == "exact" and r.verdict == NO_DIFFERENCE
    assert wilcoxon_rank_sum([1, 2, 3], [4, 5, 6], significance=0.11).verdict == A_BETTER


def test_exact_matches_enumeration_with_ties():
    rng = np.random.default_rng(0)
    for _ in range(150):
        n1, n2 = rng.integers(1, 7), rng.integers(1, 7)
        a = rng.integers(0, 5, n1).tolist()
        b = rng.integers(0, 5, n2).tolist()
        assert rank_sum_exact_p(a, b) == pytest.approx(enumeration_p(a, b), abs=1e-12)


def test_exact_matches_scipy():
    stats = pytest.importorskip("scipy.stats")
    rng = np.random.default_rng(1)
    for _ in range(100):
        a, b = rng.normal(size=rng.integers(2, 13)), rng.normal(0.7, 1, size=rng.integers(2, 13))
        assert rank_sum_exact_p(a, b) == pytest.approx(stats.mannwhitneyu(a, b, method="exact").pvalue, abs=1e-12)


def test_normal_matches_scipy_asymptotic():
    stats = pytest.importorskip("scipy.stats")
    rng = np.random.default_rng(2)
    for _ in range(100):
        a = np.round(rng.normal(size=31), 1)
        b = np.round(rng.normal(0.4, 1, size=31), 1)
        want = stats.mannwhitneyu(a, b, method="asymptotic", use_continuity=True).pvalue
        assert rank_sum_normal_p(a, b) == pytest.approx(want, abs=1e-12)


def test_exact_and_normal_agree_at_ten_ten():
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(1000):
        a = rng.normal(size=10)
        b = rng.normal(rng.uniform(0, 2), 1, size=10)
        worst = max(worst, abs(rank_sum_exact_p(a, b) - rank_sum_normal_p(a, b)))
    assert worst <= 0.02


def test_large_samples_far_apart():
    rng = np.random.default_rng(4)
    a = rng.normal(0, 1, 31)
    width = np.subtract(*np.percentile(a, [75, 25]))
    b = rng.normal(5 * width, 1, 31)
    r = wilcoxon_rank_sum(a, b)
    assert r.method == "normal" and r.p_value < 0.05 and r.verdict == A_BETTER
    assert rank_sum_exact_p(a[:12], b[:12]) < 0.05


def test_direction_follows_objective_sense():
    lo, hi = [0.1, 0.2, 0.15, 0.12, 0.11, 0.13], [0.9, 0.8, 0.85, 0.95, 0.88, 0.91]
    assert wilcoxon_rank_sum(lo, hi).verdict == A_BETTER
    assert wilcoxon_rank_sum(lo, hi, minimize=False).verdict == B_BETTER
    assert wilcoxon_rank_sum(hi, lo).verdict == B_BETTER


def test_equal_medians_fall_back_to_mean_rank():
    a = [0] * 5 + [5] * 7
    b = [5] * 7 + [9] * 5
    assert np.median(a) == np.median(b) == 5
    r = wilcoxon_rank_sum(a, b)
    assert r.p_value < 0.05 and r.verdict == A_BETTER
    assert wilcoxon_rank_sum(b, a).verdict == B_BETTER


def test_empty_sample_rejected():
    with pytest.raises(ParameterError):
        wilcoxon_rank_sum([], [1.0])
