import numpy as np
import pytest

from specscan.params import NetworkParams
from specscan.priors import TypeDistribution


@pytest.fixture
def illus():
    """Parameters of the reference illustration (F and q0 set to one sweep point)."""
    return NetworkParams(U=1.0, V=1.0, C_S=0.4, C_I=0.1, F=0.3, a=0.01, b=0.3, c=0.3, q0=0.9)


@pytest.fixture
def illus_prior():
    return TypeDistribution.uniform(0.039, 0.3)


def random_params(rng, q0_min=0.05):
    """A random valid parameter set with a <= c <= b < 1/2."""
    a = rng.uniform(0.005, 0.1)
    b = rng.uniform(a + 0.02, 0.49)
    c = rng.uniform(a, b)
    return NetworkParams(
        U=rng.uniform(0.5, 2.0), V=rng.uniform(0.5, 2.0),
        C_S=rng.uniform(0.05, 1.0), C_I=rng.uniform(0.01, 0.5),
        F=rng.uniform(0.0, 1.0), a=a, b=b, c=c, q0=rng.uniform(q0_min, 1.0),
    )


def random_piecewise_prior(rng, a, b, max_pieces=4):
    n = int(rng.integers(1, max_pieces + 1))
    cuts = np.sort(rng.uniform(a, b, size=2 * n))
    pieces = [(cuts[2 * k], cuts[2 * k + 1], rng.uniform(0.1, 3.0)) for k in range(n)
              if cuts[2 * k + 1] > cuts[2 * k] + 1e-6]
    if not pieces:
        pieces = [(a, b, 1.0)]
    from specscan.priors import TypeDistribution
    return TypeDistribution.piecewise(pieces, normalize=True)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
