"""Round trips away from the defaults: other q values, mixed sign tensors,
negative and fractional type scalars, and larger dimensions."""

from fractions import Fraction as F

import pytest

from qaffine.extension import extend
from qaffine.factory import (
    EvalParams,
    evaluation_module,
    restrict_to_ugeq0,
    tensor_product,
)
from qaffine.scalars import qparam
from qaffine.weights import analyze_full, analyze_ugeq0


def assert_round_trip(module, alpha):
    wd = analyze_full(module)
    restricted = restrict_to_ugeq0(module, alpha)
    assert analyze_ugeq0(restricted).alpha == alpha
    full, trace = extend(restricted, wd.eps0, wd.eps1)
    for g in module.action:
        assert full.action[g] == module.action[g]
    assert trace.diameter == wd.diameter
    return trace


@pytest.mark.parametrize("qv", [3, F(1, 2), -2, F(3, 2)])
def test_round_trip_other_q(qv):
    q = qparam(qv)
    module = tensor_product(
        evaluation_module(EvalParams(1, 1, 1), q),
        evaluation_module(EvalParams(1, -1, F(5, 3)), q),
    )
    wd = analyze_full(module)
    assert (wd.eps0, wd.eps1) == (-1, -1)  # signs multiply across the tensor
    assert_round_trip(module, F(2, 7))


@pytest.mark.parametrize("alpha", [F(-1), F(-3, 2), F(7, 5)])
def test_round_trip_unusual_alpha(q2, alpha):
    module = evaluation_module(EvalParams(2, 1, 2), q2)
    assert_round_trip(module, alpha)


def test_round_trip_dim8_triple_tensor(q2):
    module = tensor_product(
        tensor_product(
            evaluation_module(EvalParams(1, 1, 1), q2),
            evaluation_module(EvalParams(1, 1, 3), q2),
        ),
        evaluation_module(EvalParams(1, 1, 9), q2),
    )
    trace = assert_round_trip(module, F(1))
    assert trace.diameter == 3
    assert [s.dim for s in trace.weight_spaces] == [1, 3, 3, 1]


def test_round_trip_dim9(q2):
    module = tensor_product(
        evaluation_module(EvalParams(2, 1, 1), q2),
        evaluation_module(EvalParams(2, 1, 7), q2),
    )
    trace = assert_round_trip(module, F(5))
    assert trace.diameter == 4
    assert [s.dim for s in trace.weight_spaces] == [1, 2, 3, 2, 1]


def test_round_trip_dim12(q2):
    module = tensor_product(
        evaluation_module(EvalParams(2, 1, 1), q2),
        evaluation_module(EvalParams(3, 1, 7), q2),
    )
    trace = assert_round_trip(module, F(1))
    assert trace.diameter == 5
    assert [s.dim for s in trace.weight_spaces] == [1, 2, 3, 3, 2, 1]
