import math

import numpy as np
import pytest

from diracwig.landau import PhysParams


@pytest.fixture(scope="session")
def bench() -> PhysParams:
    """m = kz = eB = 1: E_1 = 2, A_1 = 1/3, B_1 = sqrt(2)/3, eta_1 = 3/4."""
    return PhysParams(m=1.0, kz=1.0, eB=1.0)


def trap_rule(lo, hi, n):
    x = np.linspace(lo, hi, n)
    w = np.full(n, x[1] - x[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return x, w


@pytest.fixture(scope="session")
def s_rule():
    """1-dim rule wide/dense enough for mode indices up to ~12."""
    return trap_rule(-13.0, 13.0, 1301)


def reduced_density(components, weights, eB):
    """Spin-parity density matrix int phi phi^dag dx from sampled components."""
    return np.einsum("ip,p,jp->ij", components, weights, np.conj(components)) / math.sqrt(eB)
