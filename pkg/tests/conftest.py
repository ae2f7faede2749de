import math

import numpy as np
import pytest

from rmspec import PotentialParams


@pytest.fixture(scope="session")
def ex1():
    """Well with one bound state plus both continuum regions."""
    return PotentialParams(v0=1.0, mu=math.log(2.0) / 2.0)


@pytest.fixture(scope="session")
def ex2():
    """Well with no bound states; the lower threshold joins the continuum."""
    return PotentialParams(v0=2.0 / 3.0, mu=math.log(2.0) / 2.0)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
