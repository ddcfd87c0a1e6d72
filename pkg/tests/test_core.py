import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prodfn import (
    CES,
    CobbDouglas,
    DomainError,
    ExponentialModel,
    Factor,
    FitDiagnostics,
    GeneralizedCES,
    PowerLaw,
    evaluate,
    trajectory,
)
from conftest import CD1928

finite_rates = st.floats(min_value=-0.2, max_value=0.2, allow_nan=False)
log_levels = st.floats(min_value=-2.0, max_value=6.0, allow_nan=False)


# ---------------------------------------------------------------------------
# trajectory


def test_trajectory_zero_growth_is_flat():
    m = ExponentialModel(b1=0.0, b2=0.1, b3=0.1, ln_L0=0.0, ln_K0=0.0, ln_Y0=0.0)
    for t in (-5.0, 0.0, 3.25, 100.0):
        L, _, _ = trajectory(m, t)
        assert L == 1.0


def test_trajectory_at_zero_is_exactly_initial(cd1928):
    L, K, Y = trajectory(cd1928, 0.0)
    assert L == math.exp(cd1928.ln_L0)
    assert K == math.exp(cd1928.ln_K0)
    assert Y == math.exp(cd1928.ln_Y0)
    # the labor index starts near 106.65
    assert L == pytest.approx(106.65, abs=5e-3)


def test_trajectory_direct_exponentiation():
    # oracle: exponentiate the rates by hand
    m = ExponentialModel(b1=0.1, b2=0.2, b3=0.3, ln_L0=0.0, ln_K0=0.0, ln_Y0=0.0)
    L, K, Y = trajectory(m, 10.0)
    assert L == pytest.approx(math.exp(1.0), rel=1e-15)
    assert K == pytest.approx(math.exp(2.0), rel=1e-15)
    assert Y == pytest.approx(math.exp(3.0), rel=1e-15)


def test_trajectory_vectorized_matches_scalar(cd1928):
    t = np.array([0.0, 1.0, 12.5, 23.0])
    L, K, Y = trajectory(cd1928, t)
    assert L.shape == K.shape == Y.shape == t.shape
    for i, ti in enumerate(t):
        ls, ks, ys = trajectory(cd1928, float(ti))
        assert (L[i], K[i], Y[i]) == (ls, ks, ys)


def test_trajectory_overflow_names_variable_and_time():
    m = ExponentialModel(b1=1.0, b2=0.0, b3=0.0, ln_L0=0.0, ln_K0=0.0, ln_Y0=0.0)
    with pytest.raises(DomainError, match=r"L\(t\) overflows at t = 1000"):
        trajectory(m, 1000.0)


def test_trajectory_rejects_nonfinite_t(cd1928):
    with pytest.raises(DomainError):
        trajectory(cd1928, float("nan"))
    with pytest.raises(DomainError):
        trajectory(cd1928, np.array([0.0, float("inf")]))


@given(t=st.floats(min_value=-40, max_value=40))
def test_trajectory_solves_the_growth_ode(t):
    # centered finite difference with h = 1e-4 against the rate equations
    m = CD1928
    h = 1e-4
    for pick, b in ((0, m.b1), (1, m.b2), (2, m.b3)):
        x_plus = trajectory(m, t + h)[pick]
        x_minus = trajectory(m, t - h)[pick]
        x = trajectory(m, t)[pick]
        deriv = (x_plus - x_minus) / (2 * h)
        assert deriv == pytest.approx(b * x, rel=1e-6)


# ---------------------------------------------------------------------------
# evaluate


def test_cobb_douglas_geometric_mean():
    fn = CobbDouglas(A=1.0, alpha=0.5, beta=0.5)
    assert evaluate(fn, 4.0, 9.0) == pytest.approx(6.0, rel=1e-12)


def test_ces_at_p_one_is_weighted_arithmetic_mean():
    fn = CES(A=1.0, alpha=0.5, p=1.0, v=1.0)
    assert evaluate(fn, 2.0, 4.0) == pytest.approx(3.0, rel=1e-12)
    assert fn.sigma is None


def test_cobb_douglas_at_equal_inputs():
    # A = 1.01, alpha = 0.75 and constant returns: at L = K = 100, Y = 101
    fn = CobbDouglas(A=1.01, alpha=0.75, beta=0.25)
    assert evaluate(fn, 100.0, 100.0) == pytest.approx(101.0, rel=1e-12)


def test_power_law_reads_only_its_input():
    fn = PowerLaw(coeff=2.0, exponent=3.0, input=Factor.LABOR)
    assert evaluate(fn, 2.0, 7.0) == evaluate(fn, 2.0, 9999.0) == pytest.approx(16.0)
    fn_k = PowerLaw(coeff=1.0, exponent=0.5, input=Factor.CAPITAL)
    assert evaluate(fn_k, 123.0, 49.0) == pytest.approx(7.0, rel=1e-12)


def test_evaluate_rejects_nonpositive_inputs():
    fn = CobbDouglas(A=1.0, alpha=0.5, beta=0.5)
    with pytest.raises(DomainError):
        evaluate(fn, 0.0, 1.0)
    with pytest.raises(DomainError):
        evaluate(fn, 1.0, -2.0)
    with pytest.raises(DomainError):
        evaluate(fn, np.array([1.0, float("nan")]), np.array([1.0, 1.0]))


def test_evaluate_vectorized():
    fn = CobbDouglas(A=2.0, alpha=0.3, beta=0.6)
    L = np.array([1.0, 4.0, 9.0])
    K = np.array([1.0, 2.0, 3.0])
    y = evaluate(fn, L, K)
    assert y.shape == (3,)
    assert y[0] == pytest.approx(2.0)


@given(
    s=st.floats(min_value=0.1, max_value=10),
    L=st.floats(min_value=0.5, max_value=200),
    K=st.floats(min_value=0.5, max_value=200),
    alpha=st.floats(min_value=0.05, max_value=0.95),
    beta=st.floats(min_value=-1.0, max_value=2.0),
)
@settings(max_examples=200)
def test_cobb_douglas_homogeneity(s, L, K, alpha, beta):
    fn = CobbDouglas(A=1.7, alpha=alpha, beta=beta)
    lhs = evaluate(fn, s * L, s * K)
    rhs = s ** (alpha + beta) * evaluate(fn, L, K)
    assert lhs == pytest.approx(rhs, rel=1e-12)


@given(
    s=st.floats(min_value=0.1, max_value=10),
    L=st.floats(min_value=0.5, max_value=200),
    K=st.floats(min_value=0.5, max_value=200),
    alpha=st.floats(min_value=0.05, max_value=0.95),
    p=st.floats(min_value=-3.0, max_value=3.0).filter(lambda p: abs(p) > 1e-3),
    v=st.floats(min_value=-1.0, max_value=2.0),
)
@settings(max_examples=200)
def test_ces_homogeneity_of_degree_v(s, L, K, alpha, p, v):
    fn = CES(A=0.9, alpha=alpha, p=p, v=v)
    lhs = evaluate(fn, s * L, s * K)
    rhs = s**v * evaluate(fn, L, K)
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_generalized_ces_evaluation_survives_huge_inner_exponents():
    # 1/b-style exponents near 100 overflow naive term-by-term evaluation
    fn = GeneralizedCES(cK=1e250, cL=1e-200, alpha=0.5, eK=90.0, eL=80.0, outer=0.01)
    y = evaluate(fn, 50.0, 50.0)
    assert math.isfinite(y) and y > 0


# ---------------------------------------------------------------------------
# type invariants


def test_model_requires_finite_fields():
    with pytest.raises(DomainError):
        ExponentialModel(b1=float("nan"), b2=0.0, b3=0.0, ln_L0=0.0, ln_K0=0.0, ln_Y0=0.0)
    with pytest.raises(DomainError):
        ExponentialModel(b1=0.0, b2=0.0, b3=0.0, ln_L0=float("inf"), ln_K0=0.0, ln_Y0=0.0)


def test_initial_level_accessors(cd1928):
    assert cd1928.L0 == math.exp(cd1928.ln_L0)
    assert cd1928.Y0 > 0


@pytest.mark.parametrize(
    "make",
    [
        lambda: PowerLaw(coeff=0.0, exponent=1.0, input=Factor.LABOR),
        lambda: PowerLaw(coeff=-1.0, exponent=1.0, input=Factor.CAPITAL),
        lambda: CobbDouglas(A=1.0, alpha=0.0, beta=0.5),
        lambda: CobbDouglas(A=1.0, alpha=1.0, beta=0.5),
        lambda: CobbDouglas(A=-1.0, alpha=0.5, beta=0.5),
        lambda: GeneralizedCES(cK=0.0, cL=1.0, alpha=0.5, eK=1.0, eL=1.0, outer=1.0),
        lambda: GeneralizedCES(cK=1.0, cL=1.0, alpha=1.5, eK=1.0, eL=1.0, outer=1.0),
        lambda: CES(A=1.0, alpha=0.5, p=0.0, v=1.0),
        lambda: CES(A=0.0, alpha=0.5, p=1.0, v=1.0),
        lambda: CES(A=1.0, alpha=-0.1, p=1.0, v=1.0),
    ],
)
def test_production_function_invariants_rejected(make):
    with pytest.raises(DomainError):
        make()


def test_ces_sigma_accessor():
    assert CES(A=1.0, alpha=0.4, p=2.0, v=0.5).sigma == pytest.approx(-1.0)
    assert CES(A=1.0, alpha=0.4, p=0.5, v=1.0).sigma == pytest.approx(2.0)
    assert CES(A=1.0, alpha=0.4, p=1.0, v=1.0).sigma is None


def test_fit_diagnostics_invariants():
    with pytest.raises(DomainError):
        FitDiagnostics(slope=0.0, intercept=0.0, r_squared=1.5, residual_max_abs=0.0, n_points=5)
    with pytest.raises(DomainError):
        FitDiagnostics(slope=0.0, intercept=0.0, r_squared=0.5, residual_max_abs=0.0, n_points=1)
