import numpy as np
import pytest

from tropimeas import build_space


@pytest.fixture
def two_point():
    return build_space(["a", "b"], [[0.0, 1.0], [1.0, 0.0]])


@pytest.fixture
def line3():
    # a - b - c on a line, d(a,b) = d(b,c) = 1
    return build_space(
        ["a", "b", "c"],
        [[0.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 0.0]],
    )


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
