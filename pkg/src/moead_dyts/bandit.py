"""Beta-Bernoulli bandit over the operator pool.

Each arm carries a Beta(alpha, beta) posterior over its success probability.
Dynamic Thompson sampling caps ``alpha + beta`` at a threshold ``C``: once the
cap is reached every update rescales both parameters by ``C / (C + 1)``, which
keeps the sum at ``C`` and discounts a reward received ``t`` updates ago by
``(C / (C + 1)) ** t``.
"""
from dataclasses import dataclass, field

from . import _pycore
from ._backend import is_native, kernels
from .errors import ParameterError
from .operators import OperatorId, parse_operator

__all__ = [
    "ArmState",
    "BanditModel",
    "init_model",
    "parameter_update",
    "vanilla_update",
    "posterior_mean",
    "select_operator",
    "Policy",
    "DytsPolicy",
    "ThompsonPolicy",
    "RandomPolicy",
    "FixedPolicy",
    "make_policy",
]


@dataclass(frozen=True)
class ArmState:
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise ParameterError(f"arm parameters must be positive, got ({self.alpha}, {self.beta})")


@dataclass
class BanditModel:
    arms: list
    threshold_C: float = 100.0

    @property
    def k(self) -> int:
        return len(self.arms)

    def alphas(self) -> list:
        return [a.alpha for a in self.arms]

    def betas(self) -> list:
        return [a.beta for a in self.arms]

    def snapshot(self) -> list:
        """Flat ``[alpha_0, beta_0, alpha_1, beta_1, ...]`` copy for logging."""
        out = []
        for arm in self.arms:
            out.extend((arm.alpha, arm.beta))
        return out


SUM_TOLERANCE = 1e-12


def init_model(k: int, threshold_C: float = 100.0) -> BanditModel:
    """Model with ``k`` arms, each at the uniform prior Beta(1, 1)."""
    if int(k) != k or k < 1:
        raise ParameterError(f"need at least one arm, got k={k!r}")
    if not threshold_C > 1:
        raise ParameterError(f"threshold_C must exceed 1, got {threshold_C!r}")
    return BanditModel([ArmState(1.0, 1.0) for _ in range(int(k))], float(threshold_C))


def _check_reward(reward):
    if reward not in (0, 1):
        raise ParameterError(f"reward must be 0 or 1, got {reward!r}")
    return int(reward)


def parameter_update(arm: ArmState, reward: int, threshold_C: float) -> ArmState:
    """Dynamic Thompson sampling update of one arm."""
    r = _check_reward(reward)
    a, b = arm.alpha, arm.beta
    s = a + b
    # a sum pinned at C can come back from the rescale an ulp short; that still counts as C
    if s < threshold_C and threshold_C - s > SUM_TOLERANCE * threshold_C:
        return ArmState(a + r, b + 1 - r)
    scale = threshold_C / (threshold_C + 1.0)
    return ArmState((a + r) * scale, (b + 1 - r) * scale)


def vanilla_update(arm: ArmState, reward: int) -> ArmState:
    """Plain conjugate update with no cap."""
    r = _check_reward(reward)
    return ArmState(arm.alpha + r, arm.beta + 1 - r)


def posterior_mean(arm: ArmState) -> float:
    return arm.alpha / (arm.alpha + arm.beta)


def select_operator(model: BanditModel, rng) -> int:
    """Thompson draw per arm; index of the largest draw (lowest index on ties)."""
    alphas, betas = model.alphas(), model.betas()
    if is_native(rng):
        return kernels.thompson_select(alphas, betas, rng)
    return _pycore.thompson_select(alphas, betas, rng)


class Policy:
    """Operator-choice strategy driven by the evolution loop."""

    name = "policy"
    model = None

    def select(self, rng) -> int:
        raise NotImplementedError

    def update(self, op: int, reward: int) -> None:
        pass


@dataclass
class DytsPolicy(Policy):
    model: BanditModel = field(default_factory=lambda: init_model(len(OperatorId)))
    name = "dyts"

    def select(self, rng):
        return select_operator(self.model, rng)

    def update(self, op, reward):
        arms = self.model.arms
        arms[op] = parameter_update(arms[op], reward, self.model.threshold_C)


@dataclass
class ThompsonPolicy(Policy):
    model: BanditModel = field(default_factory=lambda: init_model(len(OperatorId)))
    name = "ts"

    def select(self, rng):
        return select_operator(self.model, rng)

    def update(self, op, reward):
        self.model.arms[op] = vanilla_update(self.model.arms[op], reward)


@dataclass
class RandomPolicy(Policy):
    k: int = len(OperatorId)
    name = "random"

    def select(self, rng):
        return rng.randbelow(self.k)


@dataclass
class FixedPolicy(Policy):
    op: int = OperatorId.DE_RAND_1

    @property
    def name(self):
        return "fixed:" + OperatorId(self.op).name.lower()

    def select(self, rng):
        return int(self.op)


def make_policy(label: str, threshold_C: float = 100.0) -> Policy:
    """Build a fresh policy from ``dyts``, ``ts``, ``random`` or ``fixed:<operator>``."""
    key = label.strip().lower()
    k = len(OperatorId)
    if key == "dyts":
        return DytsPolicy(init_model(k, threshold_C))
    if key == "ts":
        return ThompsonPolicy(init_model(k, threshold_C))
    if key == "random":
        return RandomPolicy(k)
    if key.startswith("fixed:"):
        return FixedPolicy(parse_operator(key.split(":", 1)[1]))
    raise ParameterError(f"unknown policy {label!r}")
