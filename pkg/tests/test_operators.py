import numpy as np
import pytest
from conftest import StubRng
from hypothesis import given, settings
from hypothesis import strategies as st

from moead_dyts import ParameterError
from moead_dyts.operators import (
    Bounds,
    OperatorId,
    OperatorParams,
    apply_operator,
    parent_count,
    parse_operator,
    polynomial_mutation,
    repair_bounds,
)
from moead_dyts.rng import new_rng

UNIT2 = Bounds([0, 0], [1, 1])
WIDE = Bounds([-100.0] * 4, [100.0] * 4)


def test_pool_order():
    assert [op.name for op in OperatorId] == ["DE_RAND_1", "DE_RAND_2", "DE_CTR_1", "DE_CTR_2", "UM"]


@pytest.mark.parametrize("op,count", [("DE_RAND_1", 2), ("DE_RAND_2", 4), ("DE_CTR_1", 3), ("DE_CTR_2", 5), ("UM", 0)])
def test_parent_count(op, count):
    assert parent_count(OperatorId[op]) == count


def test_parse_operator_forms():
    assert parse_operator("de_rand_1") is OperatorId.DE_RAND_1
    assert parse_operator("DE/current-to-rand/2") is OperatorId.DE_CTR_2
    assert parse_operator(4) is OperatorId.UM
    with pytest.raises(ParameterError):
        parse_operator("sbx")


def test_de_rand_1_arithmetic():
    child = apply_operator(OperatorId.DE_RAND_1, [0, 0], [[1, 1], [0, 0]], UNIT2, OperatorParams(F=0.5), new_rng(0))
    assert np.array_equal(child, [0.5, 0.5])


def test_de_ctr_1_identity_when_parents_equal_target():
    x = np.array([0.3, 0.7])
    child = apply_operator(OperatorId.DE_CTR_1, x, [x, x, x], UNIT2, OperatorParams(), new_rng(0))
    assert np.array_equal(child, x)


def test_um_forced_draw():
    params = OperatorParams(um_per_dim_prob=1.0)
    child = apply_operator(OperatorId.UM, [0.5], [], Bounds([0], [1]), params, StubRng([0.3]))
    assert child[0] == pytest.approx(0.8, abs=1e-15)


def test_um_step_clamped_at_upper_bound():
    params = OperatorParams(um_per_dim_prob=1.0)
    child = apply_operator(OperatorId.UM, [0.5], [], Bounds([0], [1]), params, StubRng([0.0, 0.9]))
    assert child[0] == 1.0


def test_um_skips_unselected_dimensions():
    params = OperatorParams(um_per_dim_prob=0.5)
    # dim 0: flip 0.7 (skip), dim 1: flip 0.2 (apply step 0.25)
    rng = StubRng([0.7, 0.9, 0.2, 0.25])
    child = apply_operator(OperatorId.UM, [0.1, 0.1], [], UNIT2, params, rng)
    assert np.allclose(child, [0.1, 0.35])
    assert rng.calls == 4


@pytest.mark.parametrize("op", list(OperatorId))
def test_wrong_parent_count(op):
    parents = [[0.1, 0.1]] * (parent_count(op) + 1)
    with pytest.raises(ParameterError):
        apply_operator(op, [0.5, 0.5], parents, UNIT2, OperatorParams(), new_rng(0))


@pytest.mark.parametrize("op", [o for o in OperatorId if o != OperatorId.UM])
def test_zero_scale_returns_target(op):
    rng = np.random.default_rng(int(op))
    x = rng.uniform(-1, 1, 4)
    parents = rng.uniform(-1, 1, (parent_count(op), 4))
    child = apply_operator(op, x, parents, WIDE, OperatorParams(F=0.0, K=0.0), new_rng(0))
    assert np.array_equal(child, x)


@settings(max_examples=200, deadline=None)
@given(
    op=st.sampled_from([o for o in OperatorId if o != OperatorId.UM]),
    seed=st.integers(0, 2**32 - 1),
    shift=st.lists(st.floats(-5, 5), min_size=4, max_size=4),
)
def test_de_translation_equivariant(op, seed, shift):
    rng = np.random.default_rng(seed)
    x = rng.uniform(-5, 5, 4)
    parents = rng.uniform(-5, 5, (parent_count(op), 4))
    s = np.array(shift)
    base = apply_operator(op, x, parents, WIDE, OperatorParams(), new_rng(1))
    moved = apply_operator(op, x + s, parents + s, WIDE, OperatorParams(), new_rng(1))
    assert np.allclose(moved, base + s, atol=1e-9)


@settings(max_examples=200, deadline=None)
@given(op=st.sampled_from(list(OperatorId)), seed=st.integers(0, 2**32 - 1))
def test_outputs_inside_bounds(op, seed):
    b = Bounds([0.0, -1.0, -2.0], [1.0, 1.0, 2.0])
    rng = np.random.default_rng(seed)
    pts = b.lower + rng.random((6, 3)) * b.span
    params = OperatorParams(F=2.0, K=2.0, um_per_dim_prob=1.0, pm_prob=1.0)
    child = apply_operator(op, pts[0], pts[1:1 + parent_count(op)], b, params, new_rng(seed))
    assert b.contains(child)
    assert b.contains(polynomial_mutation(child, b, params, new_rng(seed + 1)))


@pytest.mark.parametrize("op", list(OperatorId))
def test_draw_count_depends_only_on_op_and_n(op):
    # counts draws through the stub, whatever values come out
    n = 7
    b = Bounds([0.0] * n, [1.0] * n)
    calls = set()
    for seed in range(5):
        r = np.random.default_rng(seed)
        stub = StubRng(list(r.random(64)))
        pts = r.random((6, n))
        apply_operator(op, pts[0], pts[1:1 + parent_count(op)], b, OperatorParams(), stub)
        calls.add(stub.calls)
    assert len(calls) == 1
    assert calls.pop() == (2 * n if op == OperatorId.UM else 0)


def test_pm_zero_probability_is_identity():
    x = np.array([0.2, 0.9, 0.5])
    out = polynomial_mutation(x, Bounds([0] * 3, [1] * 3), OperatorParams(pm_prob=0.0), new_rng(3))
    assert np.array_equal(out, x)


def test_pm_midpoint_draw_leaves_value():
    out = polynomial_mutation([0.5], Bounds([0], [1]), OperatorParams(pm_eta=20, pm_prob=1.0), StubRng([0.5]))
    assert out[0] == 0.5


def test_pm_step_matches_formula():
    # u = 0.1 < 0.5: delta = (0.2)^(1/21) - 1
    out = polynomial_mutation([0.5], Bounds([0], [2]), OperatorParams(pm_prob=1.0), StubRng([0.0, 0.1]))
    assert out[0] == pytest.approx(0.5 + (0.2 ** (1 / 21) - 1) * 2, abs=1e-15)
    out = polynomial_mutation([0.5], Bounds([0], [2]), OperatorParams(pm_prob=1.0), StubRng([0.0, 0.9]))
    assert out[0] == pytest.approx(0.5 + (1 - 0.2 ** (1 / 21)) * 2, abs=1e-15)


def test_repair_examples():
    b = Bounds([0], [1])
    assert repair_bounds([1.5], b)[0] == 1.0
    assert repair_bounds([-0.2], b)[0] == 0.0
    assert repair_bounds([0.4], b)[0] == 0.4


def test_bounds_validation():
    with pytest.raises(ParameterError):
        Bounds([0, 1], [1, 1])
    with pytest.raises(ParameterError):
        Bounds([0], [1, 2])


def test_params_validation():
    with pytest.raises(ParameterError):
        OperatorParams(F=-0.1)
    with pytest.raises(ParameterError):
        OperatorParams(pm_eta=0)
    with pytest.raises(ParameterError):
        OperatorParams(pm_prob=1.5)
