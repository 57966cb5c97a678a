import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from specscan.errors import DomainError, UndefinedThresholdError
from specscan.params import (
    Band,
    NetworkParams,
    payoff_invader,
    payoff_scanner,
    payoff_scanner_expected,
    response_line,
)
from specscan.priors import TypeDistribution


def base(**kw):
    vals = dict(U=1.0, V=1.0, C_S=0.4, C_I=0.1, F=0.2, a=0.01, b=0.3, c=0.3, q0=1.0)
    vals.update(kw)
    return NetworkParams(**vals)


@pytest.mark.parametrize("kw, field", [
    (dict(U=0), "U"), (dict(V=-1), "V"), (dict(C_S=0), "C_S"), (dict(C_I=0), "C_I"),
    (dict(F=-0.1), "F"), (dict(a=0.2, c=0.1), "c"), (dict(c=0.35), "c"),
    (dict(b=0.5, c=0.3), "b"), (dict(q0=1.5), "q0"), (dict(a=0.0), "a"),
])
def test_invalid_params_rejected(kw, field):
    with pytest.raises(DomainError, match=field):
        base(**kw)


def test_derived_quantities_exact():
    p = base(F=0.3, q0=0.9)
    d = p.derived()
    assert d.T == (1.0 - 0.3 - 0.1) / 1.0
    assert d.R == (0.4 - 0.3) / 1.0
    assert d.R_q0 == (d.R - 0.01 * (1 - 0.9)) / 0.9
    assert d.R_q0 == pytest.approx(0.11, abs=1e-15)
    assert p.derived() == d


def test_r_q0_undefined_at_zero():
    p = base(q0=0.0)
    assert p.derived().R_q0 is None
    with pytest.raises(UndefinedThresholdError):
        p.R_q0


def test_payoff_examples():
    p0 = base(F=0.0)
    # zero widths are outside [a, c]; evaluate the formula unchecked
    assert payoff_invader(p0, 0.0, 0.0, check=False) == 0.0
    assert payoff_scanner(p0, 0.0, 0.0, check=False) == 0.0
    p = base(F=0.2)
    # 1*(0.5)*0.2 - 0.2*0.5 - 0.1*0.2
    assert payoff_invader(p, 0.3, 0.2) == pytest.approx(-0.02, abs=1e-15)
    # 0.2*0.5 - 0.2*0.5 - 0.12
    assert payoff_scanner(p, 0.3, 0.2) == pytest.approx(-0.12, abs=1e-15)


def test_payoff_range_errors():
    p = base()
    with pytest.raises(DomainError, match="x="):
        payoff_invader(p, 0.4, 0.1)
    with pytest.raises(DomainError, match="y="):
        payoff_scanner(p, 0.2, 0.31)


@settings(max_examples=200, deadline=None)
@given(x=st.floats(0.01, 0.3), y=st.floats(0.01, 0.29), F=st.floats(0, 1), h=st.floats(1e-4, 1e-2))
def test_invader_concave_scanner_affine(x, y, F, h):
    p = base(F=F)
    y = min(y, p.c - h)
    second_y = (payoff_invader(p, x, y + h, check=False) - 2 * payoff_invader(p, x, y, check=False)
                + payoff_invader(p, x, y - h, check=False))
    assert second_y == pytest.approx(-2 * p.U * h * h, rel=1e-6, abs=1e-13)
    assert second_y < 0
    second_x = (payoff_scanner(p, x + h, y, check=False) - 2 * payoff_scanner(p, x, y, check=False)
                + payoff_scanner(p, x - h, y, check=False))
    assert abs(second_x) < 1e-12


@settings(max_examples=100, deadline=None)
@given(x=st.floats(0.01, 0.3), y=st.floats(0.01, 0.3), F=st.floats(0, 1))
def test_scanner_slope_in_x(x, y, F):
    p = base(F=F)
    h = 1e-6
    fd = (payoff_scanner(p, x + h, y, check=False) - payoff_scanner(p, x - h, y, check=False)) / (2 * h)
    assert fd == pytest.approx(p.F + p.V * y - p.C_S, abs=1e-8)


@settings(max_examples=100, deadline=None)
@given(x=st.floats(0.01, 0.3), F=st.floats(0, 1))
def test_invader_vertex(x, F):
    p = base(F=F)
    vertex = (p.U * (1 - x) - p.F - p.C_I) / (2 * p.U)
    assert vertex == pytest.approx(response_line(p, x), abs=1e-15)
    h = 1e-3
    v = payoff_invader(p, x, vertex, check=False)
    assert v >= payoff_invader(p, x, vertex + h, check=False)
    assert v >= payoff_invader(p, x, vertex - h, check=False)


def test_response_line():
    p = base(F=0.2)
    assert p.T == pytest.approx(0.7)
    assert response_line(p, p.T) == 0.0
    assert response_line(p, 0.3) == pytest.approx(0.2, abs=1e-15)
    assert response_line(p, 0.2) - response_line(p, 0.3) == pytest.approx(0.05)


def test_expected_payoff_reductions():
    p = base(F=0.2, q0=1.0)
    q = TypeDistribution.point(0.25)
    pol = lambda c: min(0.15, c)  # noqa: E731
    assert payoff_scanner_expected(p, q, 0.2, pol) == pytest.approx(payoff_scanner(p, 0.2, 0.15), abs=1e-15)
    p0 = base(F=0.2, q0=0.0)
    assert payoff_scanner_expected(p0, q, 0.2, pol) == pytest.approx(payoff_scanner(p0, 0.2, p0.a), abs=1e-15)


def _quadrature_oracle(p, x, policy, lo=0.039, hi=0.3, n=1_000_000):
    c = lo + (np.arange(n) + 0.5) * (hi - lo) / n
    yy = policy(c)
    integrand = (p.F * (x + yy) - p.V * yy * (1 - x - yy)) / (hi - lo)
    related = integrand.sum() * (hi - lo) / n
    return p.q0 * related + (1 - p.q0) * (p.F * (x + p.a) - p.V * p.a * (1 - x - p.a)) - p.C_S * x


def test_expected_payoff_constant_policy_matches_quadrature(illus, illus_prior):
    # y = 0.1 exceeds the cap of types below 0.1, so the range check is off
    p = illus.with_(q0=0.5)
    got = payoff_scanner_expected(p, illus_prior, 0.2, lambda c: 0.1, check=False)
    oracle = _quadrature_oracle(p, 0.2, lambda c: np.full_like(c, 0.1))
    assert got == pytest.approx(oracle, abs=1e-10)


def test_expected_payoff_capped_policy_matches_quadrature(illus, illus_prior):
    from specscan.bayesian import ClampPolicy
    p = illus.with_(q0=0.5)
    pol = ClampPolicy(0.1, p.a)
    closed = payoff_scanner_expected(p, illus_prior, 0.2, pol)
    quad = payoff_scanner_expected(p, illus_prior, 0.2, lambda c: min(0.1, c))
    oracle = _quadrature_oracle(p, 0.2, lambda c: np.minimum(0.1, c))
    assert closed == pytest.approx(oracle, abs=1e-10)
    assert quad == pytest.approx(oracle, abs=1e-10)


def test_expected_payoff_policy_out_of_range(illus, illus_prior):
    with pytest.raises(DomainError, match="type c="):
        payoff_scanner_expected(illus, illus_prior, 0.2, lambda c: 0.2)


def test_band_containment_and_touching():
    with pytest.raises(DomainError):
        Band(0.9, 0.2)
    assert Band(0.0, 0.2).intersects(Band(0.2, 0.3))
    assert not Band(0.0, 0.2).intersects(Band(0.2000001, 0.3))
