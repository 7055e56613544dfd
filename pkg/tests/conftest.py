import math

import numpy as np
import pytest

from ptqs import oracle, ptcore
from ptqs.ptcore import PTParams

DRAWS = 1000
SEED = 20261018

# recurring reference point: sin(alpha) = 1/4
REF = PTParams(1.0, 2.0, math.pi / 6)


@pytest.fixture(scope="session")
def draws():
    """Random unbroken parameters paired with one time inside two periods each."""
    rng = np.random.default_rng(SEED)
    out = []
    for p in oracle.random_unbroken_params(rng, DRAWS):
        spec = ptcore.decompose(p)
        out.append((spec, float(rng.uniform(0.0, 4.0 * math.pi / spec.beta))))
    return out


@pytest.fixture(scope="session")
def ref_spec():
    return ptcore.decompose(REF)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def random_state(rng) -> np.ndarray:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)
