import math

import numpy as np
import pytest
from scipy import special as sp

from besselint.quad import (AlgebraicDecay, EndpointSingularity,
                            ExponentialDecay, Integrand,
                            OscillationDescriptor, epsilon_extrapolate,
                            integrate_finite, integrate_semiinf_decaying,
                            integrate_semiinf_oscillatory)
from besselint.specfun import DomainError

import oracles


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# ----------------------------------------------------------------------
# finite intervals
# ----------------------------------------------------------------------

def test_polynomial():
    r = integrate_finite(lambda x: x * x, 0.0, 1.0, 1e-12)
    assert r.converged
    assert abs(r.value - 1.0 / 3.0) < 1e-14


def test_arcsine_endpoint_singularities():
    f = Integrand(lambda u: (1 - u * u) ** -0.5,
                  singularities=(EndpointSingularity(-1.0, -0.5),
                                 EndpointSingularity(1.0, -0.5)))
    r = integrate_finite(f, -1.0, 1.0, 1e-11)
    assert r.converged
    assert abs(r.value - math.pi) <= max(r.abs_err_est, 1e-11)


def test_strong_singularity_with_offset_form():
    # int_0^1 (1-u^2)^g du = B(1/2, g+1)/2
    g = -0.75
    exact = 0.5 * math.gamma(0.5) * math.gamma(g + 1.0) / math.gamma(g + 1.5)
    f = Integrand(lambda u: (1 - u * u) ** g,
                  singularities=(EndpointSingularity(
                      1.0, g, offset_fn=lambda h: (h * (2 - h)) ** g),))
    r = integrate_finite(f, 0.0, 1.0, 1e-13)
    assert r.converged
    assert rel(r.value, exact) < 1e-13


def test_transformed_integrand_against_composite_oracle():
    # cos-kernel integrand with a (1-t^2)^(nu-1/2) endpoint factor at nu=1,
    # u=2: oracle is a 1e5-point composite rule on the u = 1-s^2 transform.
    nu, u = 1.0, 2.0
    s = np.linspace(0.0, 1.0, 100_001)
    t = 1.0 - s * s
    y = (1 - t * t) ** (nu - 0.5) * np.cos(u * t) * 2.0 * s
    want = oracles.simpson(y, s)
    f = Integrand(lambda tt: (1 - tt * tt) ** (nu - 0.5) * np.cos(u * tt),
                  singularities=(EndpointSingularity(1.0, nu - 0.5),))
    r = integrate_finite(f, 0.0, 1.0, 1e-11)
    assert rel(r.value, want) < 1e-9


def test_interior_singularity_split():
    # int_0^2 |x-1|^(-1/2) dx = 4; the interior hint becomes two regularized
    # endpoint pieces
    f = Integrand(lambda x: np.abs(x - 1.0) ** -0.5,
                  singularities=(EndpointSingularity(1.0, -0.5),))
    r = integrate_finite(f, 0.0, 2.0, 1e-11)
    assert r.converged
    assert abs(r.value - 4.0) < 1e-10


def test_budget_exhaustion_flagged():
    r = integrate_finite(lambda x: np.sin(x), 0.0, 2.0 * math.pi, 1e-12,
                         abs_floor=0.0, max_evals=4000)
    assert not r.converged
    assert "budget" in r.note


def test_bad_interval():
    with pytest.raises(DomainError):
        integrate_finite(lambda x: x, 1.0, 0.0, 1e-8)
    with pytest.raises(DomainError):
        integrate_finite(lambda x: x, 0.0, 1.0, -1e-8)


# ----------------------------------------------------------------------
# semi-infinite, exponential decay
# ----------------------------------------------------------------------

def test_exponential():
    f = Integrand(lambda x: np.exp(-x), decay=ExponentialDecay(1.0))
    r = integrate_semiinf_decaying(f, 0.0, 1e-10)
    assert r.converged
    assert abs(r.value - 1.0) <= max(r.abs_err_est, 1e-10)


def test_gaussian():
    f = Integrand(lambda x: np.exp(-x * x), decay=ExponentialDecay(1.0))
    r = integrate_semiinf_decaying(f, 0.0, 1e-10)
    assert abs(r.value - 0.5 * math.sqrt(math.pi)) < 1e-10


def test_triple_j0_against_composite_oracle():
    # int_0^inf e^-x J0(sqrt(x))^3 dx by brute force on [0, 60]
    x = np.linspace(0.0, 60.0, 1_000_001)
    y = np.exp(-x) * sp.jv(0, np.sqrt(x)) ** 3
    want = oracles.simpson(y, x)
    f = Integrand(lambda t: np.exp(-t) * sp.jv(0, np.sqrt(t)) ** 3,
                  decay=ExponentialDecay(1.0))
    r = integrate_semiinf_decaying(f, 0.0, 1e-10)
    assert rel(r.value, want) < 1e-9


def test_decay_class_required():
    with pytest.raises(DomainError):
        integrate_semiinf_decaying(Integrand(lambda x: np.exp(-x)), 0.0, 1e-8)
    with pytest.raises(DomainError):
        integrate_semiinf_decaying(
            Integrand(lambda x: x ** -2.0, decay=AlgebraicDecay(2.0)), 1.0, 1e-8)


# ----------------------------------------------------------------------
# semi-infinite, oscillatory with partition-extrapolation
# ----------------------------------------------------------------------

def test_dirichlet_integral():
    f = Integrand(lambda x: np.sinc(x / np.pi))
    r = integrate_semiinf_oscillatory(f, 0.0, OscillationDescriptor(math.pi, math.pi),
                                      1e-10)
    assert r.converged
    assert abs(r.value - 0.5 * math.pi) < 1e-9


def test_bessel_kernel_unit_integral():
    f = Integrand(lambda x: sp.jv(0, x))
    r = integrate_semiinf_oscillatory(f, 0.0, OscillationDescriptor(math.pi, 2.405),
                                      1e-10)
    assert r.converged
    assert abs(r.value - 1.0) < 1e-9


def test_hankel_tail_matches_k0_oracle():
    # int_0^inf y J0(y)/(1+y^2) dy = K_0(1), target from the integral oracle
    want = oracles.bessel_k0_integral(1.0)
    f = Integrand(lambda y: y * sp.jv(0, y) / (1 + y * y))
    r = integrate_semiinf_oscillatory(f, 0.0, OscillationDescriptor(math.pi, 2.405),
                                      1e-8)
    assert r.converged
    assert rel(r.value, want) < 1e-6


def test_oscillation_descriptor_required():
    with pytest.raises(DomainError):
        integrate_semiinf_oscillatory(Integrand(lambda x: np.cos(x)), 0.0, None, 1e-8)


def test_first_cell_width_invariance():
    f = Integrand(lambda y: y * sp.jv(0, y) / (1 + y * y))
    r1 = integrate_semiinf_oscillatory(f, 0.0, OscillationDescriptor(math.pi, 2.405), 1e-9)
    r2 = integrate_semiinf_oscillatory(f, 0.0, OscillationDescriptor(math.pi, 4.81), 1e-9)
    assert abs(r1.value - r2.value) <= r1.abs_err_est + r2.abs_err_est


def test_stagnation_flagged():
    f = Integrand(lambda y: y * sp.jv(0, y) / (1 + y * y))
    r = integrate_semiinf_oscillatory(f, 0.0, OscillationDescriptor(math.pi, 2.405),
                                      1e-12, max_cells=4)
    assert not r.converged
    assert "stagnated" in r.note


# ----------------------------------------------------------------------
# epsilon algorithm
# ----------------------------------------------------------------------

def test_epsilon_alternating_harmonic():
    sums = np.cumsum([(-1.0) ** k / (k + 1) for k in range(12)])
    r = epsilon_extrapolate(sums)
    assert abs(r.value - math.log(2.0)) < 1e-9


def test_epsilon_geometric_exact():
    sums = np.cumsum([0.5 ** k for k in range(5)])
    r = epsilon_extrapolate(sums)
    assert r.value == pytest.approx(2.0, abs=1e-14)


def test_epsilon_leibniz():
    sums = np.cumsum([(-1.0) ** k / (2 * k + 1) for k in range(15)])
    r = epsilon_extrapolate(sums)
    assert abs(r.value - 0.25 * math.pi) < 1e-10


def test_epsilon_breakdown_guard():
    r = epsilon_extrapolate([1.0, 1.0, 1.0, 1.0, 1.0])
    assert r.value == 1.0
    with pytest.raises(DomainError):
        epsilon_extrapolate([1.0, 2.0])


# ----------------------------------------------------------------------
# error-estimate honesty over a battery of known integrals
# ----------------------------------------------------------------------

def test_error_estimates_bound_truth():
    cases = []

    def record(result, truth):
        cases.append((abs(result.value - truth), result.abs_err_est))

    record(integrate_finite(lambda x: x * x, 0.0, 1.0, 1e-10), 1.0 / 3.0)
    record(integrate_finite(lambda x: np.exp(x), 0.0, 1.0, 1e-10), math.e - 1.0)
    record(integrate_finite(lambda x: np.cos(7 * x), 0.0, 2.0, 1e-10),
           math.sin(14.0) / 7.0)
    f = Integrand(lambda u: (1 - u * u) ** -0.5,
                  singularities=(EndpointSingularity(-1.0, -0.5),
                                 EndpointSingularity(1.0, -0.5)))
    record(integrate_finite(f, -1.0, 1.0, 1e-10), math.pi)
    record(integrate_semiinf_decaying(
        Integrand(lambda x: np.exp(-x), decay=ExponentialDecay(1.0)), 0.0, 1e-9), 1.0)
    record(integrate_semiinf_decaying(
        Integrand(lambda x: np.exp(-2 * x) * np.cos(3 * x),
                  decay=ExponentialDecay(2.0)), 0.0, 1e-9), 2.0 / 13.0)
    record(integrate_semiinf_decaying(
        Integrand(lambda x: np.exp(-x * x), decay=ExponentialDecay(1.0)), 0.0, 1e-9),
        0.5 * math.sqrt(math.pi))
    record(integrate_semiinf_oscillatory(
        Integrand(lambda x: np.sinc(x / np.pi)), 0.0,
        OscillationDescriptor(math.pi, math.pi), 1e-9), 0.5 * math.pi)
    record(integrate_semiinf_oscillatory(
        Integrand(lambda x: sp.jv(0, x)), 0.0,
        OscillationDescriptor(math.pi, 2.405), 1e-9), 1.0)
    record(integrate_semiinf_oscillatory(
        Integrand(lambda y: y * sp.jv(0, y) / (1 + y * y)), 0.0,
        OscillationDescriptor(math.pi, 2.405), 1e-9),
        float(sp.kv(0, 1)))

    bounded = sum(1 for err, est in cases if err <= est)
    assert bounded / len(cases) >= 0.95
    for err, est in cases:
        assert err <= 100.0 * max(est, 5e-16)
