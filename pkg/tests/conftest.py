import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))


class StubRng:
    """Replays a fixed list of uniform draws (cycled) for hand-checkable operator tests."""

    def __init__(self, draws):
        self.draws = list(draws)
        self.calls = 0

    def uniform01(self):
        v = self.draws[self.calls % len(self.draws)]
        self.calls += 1
        return v

    def randbelow(self, n):
        return int(self.uniform01() * n)


@pytest.fixture
def stub_rng():
    return StubRng


def ks_uniform_stat(samples):
    import numpy as np

    x = np.sort(np.asarray(samples))
    n = len(x)
    i = np.arange(1, n + 1)
    return max((i / n - x).max(), (x - (i - 1) / n).max())


# asymptotic one-sample Kolmogorov-Smirnov critical value at 1%: 1.6276 / sqrt(n)
KS_1PCT = 1.6276


ACCEPTANCE_LINES = {}


def record_criterion(number, passed, detail):
    line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
