import numpy as np
import pytest

from specscan.errors import DomainError
from specscan.priors import TypeDistribution


def test_mass_must_be_one():
    with pytest.raises(DomainError, match="mass"):
        TypeDistribution("discrete", atoms=((0.1, 0.5),))
    with pytest.raises(DomainError, match="mass"):
        TypeDistribution("piecewise-uniform", pieces=((0.0, 0.5, 1.0),))
    TypeDistribution.piecewise([(0.0, 0.5, 1.0), (0.5, 0.6, 3.0)], normalize=True)


def test_overlapping_pieces_rejected():
    with pytest.raises(DomainError, match="overlap"):
        TypeDistribution.piecewise([(0.0, 0.5, 1.0), (0.4, 0.6, 1.0)], normalize=True)


def test_support_check():
    q = TypeDistribution.uniform(0.039, 0.3)
    q.check_support(0.01, 0.3)
    with pytest.raises(DomainError):
        q.check_support(0.05, 0.3)
    assert q.in_support(0.039) and q.in_support(0.3) and not q.in_support(0.31)


@pytest.mark.parametrize("L", [-0.1, 0.005, 0.01, 0.05, 0.15, 0.2, 0.3, 0.5])
@pytest.mark.parametrize("k", [1, 2])
def test_clamp_moment_matches_brute_force(L, k):
    a = 0.01
    q = TypeDistribution.piecewise([(0.02, 0.1, 2.0), (0.12, 0.25, 1.0), (0.25, 0.3, 0.5)], normalize=True)
    n = 1_000_000
    total = 0.0
    for lo, hi, d in q.pieces:
        c = lo + (np.arange(n) + 0.5) * (hi - lo) / n
        total += d * np.sum(np.minimum(np.maximum(L, a), c) ** k) * (hi - lo) / n
    assert q.clamp_moment(L, a, k) == pytest.approx(total, abs=1e-8)


def test_discretize_preserves_mass_and_mean():
    q = TypeDistribution.uniform(0.039, 0.3)
    d = q.discretize(64)
    assert len(d.atoms) == 64
    assert sum(w for _, w in d.atoms) == pytest.approx(1.0, abs=1e-12)
    assert d.mean() == pytest.approx(q.mean(), abs=1e-12)


def test_sample_types_inside_support():
    q = TypeDistribution.piecewise([(0.02, 0.1, 1.0), (0.2, 0.3, 1.0)], normalize=True)
    s = q.sample_types(1000, np.random.default_rng(1))
    assert np.all(((s >= 0.02) & (s <= 0.1)) | ((s >= 0.2) & (s <= 0.3)))
