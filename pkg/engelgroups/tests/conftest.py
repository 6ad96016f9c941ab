"""``pytest`` configuration."""

import numpy as np
import pytest

from engelgroups.alphabet import TreeSignature


@pytest.fixture(scope="session")
def growing3():
    return TreeSignature.growing(3)


@pytest.fixture(scope="session")
def growing2():
    return TreeSignature.growing(2)


@pytest.fixture(scope="session")
def regular35():
    return TreeSignature.regular(3, 5)


@pytest.fixture
def rng():
    return np.random.default_rng(0)
