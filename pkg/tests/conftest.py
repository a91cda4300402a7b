import pytest

from qaffine import EvalParams, evaluation_module, qparam, tensor_product


@pytest.fixture(scope="session")
def q2():
    return qparam(2)


@pytest.fixture(scope="session")
def v111(q2):
    return evaluation_module(EvalParams(1, 1, 1), q2)


@pytest.fixture(scope="session")
def v113(q2):
    return evaluation_module(EvalParams(1, 1, 3), q2)


@pytest.fixture(scope="session")
def v114(q2):
    return evaluation_module(EvalParams(1, 1, 4), q2)


@pytest.fixture(scope="session")
def v212(q2):
    return evaluation_module(EvalParams(2, 1, 2), q2)


@pytest.fixture(scope="session")
def tensor_13(v111, v113):
    return tensor_product(v111, v113)


@pytest.fixture(scope="session")
def tensor_14(v111, v114):
    return tensor_product(v111, v114)
