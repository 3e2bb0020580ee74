import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselint import specfun as sf
from besselint.specfun import DomainError

import oracles


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# ----------------------------------------------------------------------
# gamma
# ----------------------------------------------------------------------

def test_gamma_values():
    assert sf.gamma(1.0) == 1.0
    assert rel(sf.gamma(0.5), math.sqrt(math.pi)) < 1e-14
    assert sf.gamma(5.0) == 24.0


def test_gamma_poles_and_overflow():
    for x in (0.0, -1.0, -2.0, -7.0):
        with pytest.raises(DomainError):
            sf.gamma(x)
    with pytest.raises(OverflowError):
        sf.gamma(500.0)
    assert rel(sf.log_gamma(500.0), math.lgamma(500.0)) < 1e-15


@given(st.floats(min_value=0.1, max_value=50.0))
def test_gamma_recurrence(x):
    assert rel(sf.gamma(x + 1.0), x * sf.gamma(x)) < 5e-14


# ----------------------------------------------------------------------
# Bessel J
# ----------------------------------------------------------------------

def test_bessel_j_trivial():
    assert sf.bessel_j(0, 0.0).value == 1.0
    # half-integer closed form J_{1/2}(x) = sqrt(2/(pi x)) sin x at x = pi/2
    assert rel(sf.bessel_j(0.5, math.pi / 2).value, 2.0 / math.pi) < 1e-13


def test_bessel_j_first_zero_from_series_oracle():
    x0 = oracles.bisect_zero(lambda x: oracles.bessel_j_series(0.0, x), 2.0, 3.0)
    assert abs(x0 - 2.404825557695773) < 1e-12
    assert abs(sf.bessel_j(0.0, x0).value) < 1e-10


@pytest.mark.parametrize("nu", [-0.75, 0.0, 0.4, 1.0, 2.5])
@pytest.mark.parametrize("x", [0.3, 1.0, 4.0, 9.0])
def test_bessel_j_matches_series_oracle(nu, x):
    assert rel(sf.bessel_j(nu, x).value, oracles.bessel_j_series(nu, x)) < 1e-11


def test_bessel_j_domain():
    with pytest.raises(DomainError):
        sf.bessel_j(0.0, -1.0)
    with pytest.raises(DomainError):
        sf.bessel_j(-0.5, 0.0)


def test_bessel_j_integer_reflection():
    # J_{-n}(x) = (-1)^n J_n(x)
    for n in (1, 2, 3):
        for x in (0.5, 1.0, 5.0, 20.0):
            lhs = sf.bessel_j(-n, x).value
            rhs = (-1.0) ** n * sf.bessel_j(n, x).value
            assert rel(lhs, rhs) < 1e-12


# ----------------------------------------------------------------------
# Bessel Y
# ----------------------------------------------------------------------

def test_bessel_y_half_integer():
    # Y_{1/2}(x) = -sqrt(2/(pi x)) cos x
    assert abs(sf.bessel_y(0.5, math.pi / 2).value) < 1e-12
    assert rel(sf.bessel_y(0.5, math.pi).value, math.sqrt(2.0) / math.pi) < 1e-13


def test_bessel_y0_series_oracle():
    want = oracles.y0_series(1.0)
    assert abs(want - 0.088256964215677) < 1e-13
    assert rel(sf.bessel_y(0.0, 1.0).value, want) < 1e-12


def test_bessel_y_domain():
    with pytest.raises(DomainError):
        sf.bessel_y(0.0, 0.0)
    with pytest.raises(DomainError):
        sf.bessel_y(0.0, -2.0)


# ----------------------------------------------------------------------
# Bessel I and K
# ----------------------------------------------------------------------

def test_bessel_i_values():
    assert sf.bessel_i(0, 0.0).value == 1.0
    want = math.sqrt(2.0 / math.pi) * math.sinh(1.0)  # I_{1/2}(1)
    assert rel(sf.bessel_i(0.5, 1.0).value, want) < 1e-13
    # 30-term brute force of sum (x^2/4)^k / (k!)^2 at x = 0.5
    brute = sum((0.25 * 0.25) ** k / math.factorial(k) ** 2 for k in range(30))
    assert rel(sf.bessel_i(0.0, 0.5).value, brute) < 1e-14
    assert abs(brute - 1.063483370741324) < 1e-14


def test_bessel_i_scaled_and_overflow():
    with pytest.raises(OverflowError):
        sf.bessel_i(0.0, 800.0)
    r = sf.bessel_i_scaled(0.0, 800.0)
    assert r.converged and 0.0 < r.value < 1.0


def test_bessel_k_values():
    want = math.sqrt(math.pi / 2.0) * math.exp(-1.0)  # K_{1/2}(1)
    assert rel(sf.bessel_k(0.5, 1.0).value, want) < 1e-13
    k0 = oracles.bessel_k0_integral(1.0)
    assert abs(k0 - 0.421024438240708) < 1e-10
    assert rel(sf.bessel_k(0.0, 1.0).value, k0) < 1e-9
    # recurrence K_{nu+1}(x) = K_{nu-1}(x) + (2 nu/x) K_nu(x)
    lhs = sf.bessel_k(2.0, 3.0).value
    rhs = sf.bessel_k(0.0, 3.0).value + (2.0 / 3.0) * sf.bessel_k(1.0, 3.0).value
    assert rel(lhs, rhs) < 1e-10


def test_bessel_k_domain():
    with pytest.raises(DomainError):
        sf.bessel_k(0.0, 0.0)


# ----------------------------------------------------------------------
# Wronskians (derivatives by recurrence, not finite differences)
# ----------------------------------------------------------------------

def _jy_wronskian(nu, x):
    j = sf.bessel_j(nu, x).value
    y = sf.bessel_y(nu, x).value
    jp = 0.5 * (sf.bessel_j(nu - 1, x).value - sf.bessel_j(nu + 1, x).value)
    yp = 0.5 * (sf.bessel_y(nu - 1, x).value - sf.bessel_y(nu + 1, x).value)
    return j * yp - jp * y


def _ik_wronskian(nu, x):
    i = sf.bessel_i(nu, x).value if x < 600 else None
    k = sf.bessel_k(nu, x).value
    ip = 0.5 * (sf.bessel_i(nu - 1, x).value + sf.bessel_i(nu + 1, x).value)
    kp = -0.5 * (sf.bessel_k(nu - 1, x).value + sf.bessel_k(nu + 1, x).value)
    return i * kp - ip * k


@pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.0, 2.5])
@pytest.mark.parametrize("x", [0.1, 1.0, 5.0, 20.0, 50.0])
def test_wronskians(nu, x):
    assert rel(_jy_wronskian(nu, x), 2.0 / (math.pi * x)) < 1e-8
    assert rel(_ik_wronskian(nu, x), -1.0 / x) < 1e-8


@settings(max_examples=40, deadline=None)
@given(nu=st.floats(min_value=-2.0, max_value=5.0),
       x=st.floats(min_value=0.05, max_value=40.0))
def test_jy_wronskian_property(nu, x):
    assert rel(_jy_wronskian(nu, x), 2.0 / (math.pi * x)) < 1e-8


# ----------------------------------------------------------------------
# Kelvin functions
# ----------------------------------------------------------------------

def test_kelvin_at_zero():
    assert sf.kelvin_ber(0.0, 0.0).value == 1.0
    assert sf.kelvin_bei(0.0, 0.0).value == 0.0
    assert sf.kelvin_ber(1.5, 0.0).value == 0.0


def test_kelvin_0f3_bridge_unit():
    ber = sf.kelvin_ber(0.0, 1.0)
    bei = sf.kelvin_bei(0.0, 1.0)
    f1 = sf.hyp0f3(0.5, 0.5, 1.0, -1.0 / 256.0)
    f2 = sf.hyp0f3(1.5, 1.5, 1.0, -1.0 / 256.0)
    assert rel(ber.value, f1.value) < 1e-13
    assert rel(bei.value, 0.25 * f2.value) < 1e-13


@pytest.mark.parametrize("x", [0.25, 1.0, 2.5, 5.0, 7.5, 10.0])
def test_kelvin_0f3_bridge_grid(x):
    # ber(x) = 0F3(1/2,1/2,1; -x^4/256), bei(x) = (x^2/4) 0F3(3/2,3/2,1; -x^4/256)
    z = -x ** 4 / 256.0
    assert rel(sf.kelvin_ber(0.0, x).value, sf.hyp0f3(0.5, 0.5, 1.0, z).value) < 1e-8
    assert rel(sf.kelvin_bei(0.0, x).value,
               0.25 * x * x * sf.hyp0f3(1.5, 1.5, 1.0, z).value) < 1e-8


def test_kelvin_general_order_against_j_series():
    # ber_nu + i bei_nu = J_nu(x e^{3 pi i/4}), checked against the complex
    # power series evaluated with Python complex arithmetic.
    for nu in (-1.0, 0.3, 1.0, 2.5):
        for x in (0.6, 2.0, 6.0):
            z = x * complex(math.cos(0.75 * math.pi), math.sin(0.75 * math.pi))
            total = 0.0 + 0.0j
            for k in range(80):
                g = nu + k + 1
                if g <= 0 and g == math.floor(g):
                    continue  # 1/Gamma vanishes at the pole
                total += (-1.0) ** k * (0.5 * z) ** (nu + 2 * k) \
                    / (math.factorial(k) * math.gamma(g))
            assert rel(sf.kelvin_ber(nu, x).value, total.real) < 1e-10
            assert rel(sf.kelvin_bei(nu, x).value, total.imag) < 1e-10


def test_kelvin_domain():
    with pytest.raises(DomainError):
        sf.kelvin_ber(0.0, -1.0)
    with pytest.raises(DomainError):
        sf.kelvin_ber(-0.5, 0.0)
    with pytest.raises(DomainError):
        sf.kelvin_bei(0.0, 500.0)


# ----------------------------------------------------------------------
# hypergeometric series
# ----------------------------------------------------------------------

def test_hyp0f3_empty_product():
    for (a, b, c) in [(0.5, 1.0, 2.0), (1.3, 0.7, 4.4)]:
        r = sf.hyp0f3(a, b, c, 0.0)
        assert r.value == 1.0 and r.converged


def test_hyp0f3_brute_force():
    brute = sum(0.1 ** k / math.factorial(k) ** 4 for k in range(10))
    r = sf.hyp0f3(1.0, 1.0, 1.0, 0.1)
    assert rel(r.value, brute) < 1e-15
    assert r.abs_err_est < 1e-14


def test_hyp0f3_pole_and_window():
    with pytest.raises(DomainError):
        sf.hyp0f3(-1.0, 0.5, 0.5, 1.0)
    with pytest.raises(DomainError):
        sf.hyp0f3(0.5, 0.5, 0.5, -2e6)


def test_hyp0f3_cancellation_err_tracking():
    # large negative argument: heavy cancellation must show up in the estimate
    r = sf.hyp0f3(0.5, 0.5, 1.0, -1e4)
    assert r.converged
    assert r.abs_err_est > 1e-12 * abs(r.value)


def test_hyp0f1_matches_bessel_series():
    # 0F1(;1;-z^2/4) = J_0(z)
    r = sf.hyp0f1(1.0, -0.25)
    assert rel(r.value, oracles.bessel_j_series(0.0, 1.0)) < 1e-14


def test_hyp2f1_values():
    assert sf.hyp2f1(0.3, 0.7, 1.1, 0.0).value == 1.0
    # closed form -ln(1-z)/z at a=b=1, c=2
    assert rel(sf.hyp2f1(1, 1, 2, 0.5).value, -math.log(0.5) / 0.5) < 1e-13
    # terminating case = Legendre polynomial: 2F1(-3, 4; 1; 0.3) = P_3(0.4)
    assert rel(sf.hyp2f1(-3, 4, 1, 0.3).value, oracles.legendre(3, 0.4)) < 1e-13
    assert abs(sf.hyp2f1(-3, 4, 1, 0.3).value - (-0.44)) < 1e-14


def test_hyp2f1_domain():
    with pytest.raises(DomainError):
        sf.hyp2f1(0.5, 0.5, -2.0, 0.3)
    with pytest.raises(DomainError):
        sf.hyp2f1(1.0, 1.0, 1.5, 1.0)  # c-a-b < 0 at z = 1
    r = sf.hyp2f1(0.5, 0.5, 3.0, 0.95)
    assert r.converged and "degraded" in r.note


@pytest.mark.parametrize("n", range(1, 9))
def test_hyp2f1_terminating_legendre_family(n):
    # 2F1(-n, -n; 1; y) = (1-y)^n P_n((1+y)/(1-y))
    for y in (0.1, 0.35, 0.6, 0.85):
        lhs = sf.hyp2f1(-n, -n, 1.0, y).value
        rhs = (1.0 - y) ** n * oracles.legendre(n, (1.0 + y) / (1.0 - y))
        assert rel(lhs, rhs) < 1e-9


# ----------------------------------------------------------------------
# orthogonal polynomials
# ----------------------------------------------------------------------

def test_laguerre():
    assert sf.laguerre(0, 0, 3.3) == 1.0
    assert sf.laguerre(2, 0, 1.0) == -0.5
    brute = sum((-1.0) ** k * math.comb(5, 3 - k) * 0.7 ** k / math.factorial(k)
                for k in range(4))
    assert rel(sf.laguerre(3, 2, 0.7), brute) < 1e-14


def test_gegenbauer():
    assert sf.gegenbauer(0, 1.5, 0.3) == 1.0
    assert rel(sf.gegenbauer(1, 1.5, 0.2), 0.6) < 1e-15
    assert rel(sf.gegenbauer(2, 0.5, 0.5), oracles.legendre(2, 0.5)) < 1e-15
    for n in (3, 5, 8):
        for x in (-0.7, 0.2, 0.9):
            assert rel(sf.gegenbauer(n, 0.5, x), oracles.legendre(n, x)) < 1e-12
    with pytest.raises(DomainError):
        sf.gegenbauer(2, 0.0, 0.5)


# ----------------------------------------------------------------------
# EvalResult contract
# ----------------------------------------------------------------------

def test_evalresult_invariants():
    for r in (sf.bessel_j(0.3, 2.0), sf.hyp0f3(1, 1, 1, -3.0),
              sf.kelvin_ber(0.5, 2.0)):
        assert r.converged
        assert math.isfinite(r.abs_err_est) and r.abs_err_est >= 0.0
        assert r.terms_or_nodes_used >= 0
        assert float(r) == r.value
