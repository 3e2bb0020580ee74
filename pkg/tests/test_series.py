import itertools
import math

import numpy as np
import pytest
from scipy import special as sp

from besselint import series as se
from besselint.quad import ExponentialDecay, Integrand, integrate_semiinf_decaying
from besselint.series import SeriesState, TripleParams
from besselint.specfun import DomainError, bessel_j, hyp0f1

import oracles


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# ----------------------------------------------------------------------
# SeriesState bookkeeping
# ----------------------------------------------------------------------

def test_series_state_tracking():
    s = SeriesState()
    for term in (1.0, -0.5, 0.25, -0.125):
        s.add(term)
    assert s.terms == 4
    assert s.last_term_abs == 0.125
    assert s.max_partial_abs >= abs(s.partial_sum)
    assert abs(s.partial_sum - 0.625) < 1e-15


# ----------------------------------------------------------------------
# product_jj_gauss
# ----------------------------------------------------------------------

def test_gauss_product_at_zero():
    r = se.product_jj_gauss(0.0, 0.0, 1.0, 1.0, 0.0)
    assert r.value == 1.0


def test_gauss_product_against_series_oracle():
    want = oracles.bessel_j_series(0.0, 1.0) * oracles.bessel_j_series(0.0, 0.5)
    r = se.product_jj_gauss(0.0, 0.0, 1.0, 0.5, 1.0)
    assert rel(r.value, want) < 1e-12
    want = oracles.bessel_j_series(1.0, 1.4) * oracles.bessel_j_series(0.0, 0.7)
    r = se.product_jj_gauss(1.0, 0.0, 2.0, 1.0, 0.7)
    assert rel(r.value, want) < 1e-12


def test_gauss_product_requires_ordered_args():
    with pytest.raises(DomainError):
        se.product_jj_gauss(0.0, 0.0, 1.0, 2.0, 1.0)


# ----------------------------------------------------------------------
# product_jj_neumann
# ----------------------------------------------------------------------

def test_neumann_product_values():
    want = oracles.bessel_j_series(0.0, 1.0) ** 2
    r = se.product_jj_neumann(0.0, 1.0, 1.0, 1.0)
    assert rel(r.value, want) < 1e-12
    assert abs(want - 0.5855274995136641) < 1e-13

    r = se.product_jj_neumann(0.0, 1.0, 2.0, 0.0)
    assert r.value == 1.0

    # half-integer closed form: J_{1/2}(z) = sqrt(2/(pi z)) sin z
    a, b, x = 1.0, 2.0, 0.9
    want = (math.sqrt(2.0 / (math.pi * a * x)) * math.sin(a * x)
            * math.sqrt(2.0 / (math.pi * b * x)) * math.sin(b * x))
    r = se.product_jj_neumann(0.5, a, b, x)
    assert rel(r.value, want) < 1e-12


def test_neumann_gauss_direct_agree():
    # series routes and the direct kernel product agree across the grid
    for nu in (0.0, 0.5, 1.0, 2.0):
        for a, b in ((0.5, 0.5), (1.0, 0.5), (2.0, 1.0), (2.0, 2.0)):
            for x in (0.1, 1.0, 5.0):
                direct = bessel_j(nu, a * x).value * bessel_j(nu, b * x).value
                neu = se.product_jj_neumann(nu, a, b, x).value
                gau = se.product_jj_gauss(nu, nu, max(a, b), min(a, b), x).value
                scale = max(abs(direct), 1e-12)
                assert abs(neu - direct) / scale < 1e-8
                assert abs(gau - direct) / scale < 1e-8


# ----------------------------------------------------------------------
# hyp0f1_product
# ----------------------------------------------------------------------

def test_hyp0f1_product_x_zero_reduces():
    r = se.hyp0f1_product(1.3, 0.0, 2.0)
    assert rel(r.value, hyp0f1(1.3, 2.0).value) < 1e-14


def test_hyp0f1_product_j0_square():
    want = oracles.bessel_j_series(0.0, 1.0) ** 2
    r = se.hyp0f1_product(1.0, -0.25, -0.25)
    assert rel(r.value, want) < 1e-13


def test_hyp0f1_product_brute_force():
    def f01(c, z, terms=20):
        return sum(z ** k / (math.gamma(c + k) / math.gamma(c)) / math.factorial(k)
                   for k in range(terms))
    want = f01(1.5, 0.3) * f01(1.5, 0.2)
    r = se.hyp0f1_product(1.5, 0.3, 0.2)
    assert rel(r.value, want) < 1e-13


def test_hyp0f1_product_grid():
    for c in (0.7, 1.0, 2.5):
        for x in (-2.0, 0.5, 3.0):
            for y in (-1.0, 0.25, 2.0):
                lhs = se.hyp0f1_product(c, x, y).value
                rhs = hyp0f1(c, x).value * hyp0f1(c, y).value
                assert rel(lhs, rhs) < 1e-9


# ----------------------------------------------------------------------
# weber_triple family
# ----------------------------------------------------------------------

def test_weber_triple_collapses_to_single_term():
    # beta3 = 0 keeps only n = 0: value is e^{-1/2} I_0(1/2) at unit params
    want = math.exp(-0.5) * oracles.bessel_i_series(0.0, 0.5)
    r = se.weber_triple(TripleParams(1.0, 1.0, 1.0, 0.0))
    assert rel(r.value, want) < 1e-13


def test_weber_triple_all_zero_betas():
    for al in (0.5, 1.0, 2.0):
        r = se.weber_triple(TripleParams(al, 0.0, 0.0, 0.0))
        assert rel(r.value, 1.0 / al) < 1e-14


def test_weber_triple_permutation_symmetry():
    vals = [se.weber_triple(TripleParams(0.7, *perm)).value
            for perm in itertools.permutations((0.5, 1.0, 1.5))]
    spread = (max(vals) - min(vals)) / abs(vals[0])
    assert spread < 1e-12


def test_weber_triple_against_quadrature():
    f = Integrand(lambda x: np.exp(-x) * sp.jv(0, np.sqrt(x)) ** 3,
                  decay=ExponentialDecay(1.0))
    want = integrate_semiinf_decaying(f, 0.0, 1e-11).value
    r = se.weber_triple(TripleParams(1.0, 1.0, 1.0, 1.0))
    assert rel(r.value, want) < 1e-9


def test_weber_triple_reduction_to_weber_second_integral():
    # beta3 = 0 reduces to the closed form (1/2p) e^{-(a^2+b^2)/4p} I_0(ab/2p)
    # under the x -> x^2 substitution
    for al, b1, b2 in ((1.0, 1.0, 1.0), (0.5, 0.4, 1.1), (2.0, 1.5, 0.6)):
        r = se.weber_triple(TripleParams(al, b1, b2, 0.0))
        want = math.exp(-(b1 * b1 + b2 * b2) / (4 * al)) * sp.iv(0, b1 * b2 / (2 * al)) / al
        assert rel(r.value, want) < 1e-10


def test_weber_triple_m_zero_matches_weber_triple():
    p0 = TripleParams(1.2, 0.8, 1.1, 0.4, 0)
    assert se.weber_triple_m(p0).value == se.weber_triple(p0).value


@pytest.mark.parametrize("m,al,betas", [
    (1, 1.0, (1e-6, 1.0, 1.0)),
    (1, 1.0, (1.0, 1.0, 1.0)),
    (2, 1.0, (0.5, 1.0, 1.5)),
])
def test_weber_triple_m_against_quadrature(m, al, betas):
    b1, b2, b3 = betas
    f = Integrand(lambda x: (np.exp(-al * x) * sp.jv(0, b1 * np.sqrt(x))
                             * sp.jv(m, b2 * np.sqrt(x)) * sp.jv(m, b3 * np.sqrt(x))),
                  decay=ExponentialDecay(al))
    want = integrate_semiinf_decaying(f, 0.0, 1e-11).value
    r = se.weber_triple_m(TripleParams(al, b1, b2, b3, m))
    assert r.converged
    assert rel(r.value, want) < 1e-6


def test_weber_triple_m_domain():
    with pytest.raises(DomainError):
        se.weber_triple_m(TripleParams(1.0, 1.0, 1.0, 1.0, 5))
    with pytest.raises(DomainError):
        TripleParams(-1.0, 1.0, 1.0, 1.0)


# ----------------------------------------------------------------------
# weber_j0jm_limit
# ----------------------------------------------------------------------

def test_j0jm_limit_m0_is_weber():
    r = se.weber_j0jm_limit(1.0, 1.0, 1.0, 0)
    want = math.exp(-0.5) * oracles.bessel_i_series(0.0, 0.5)
    assert rel(r.value, want) < 1e-13


def test_j0jm_limit_beta1_zero_closed_form():
    # m = 3, alpha = 2, beta1 = 0: only n = 0 survives with I_0(0) = 1
    b2 = 1.3
    r = se.weber_j0jm_limit(2.0, 0.0, b2, 3)
    want = 0.5 * (b2 / 4.0) ** 3 * math.exp(-b2 * b2 / 8.0)
    assert rel(r.value, want) < 1e-13


def test_j0jm_limit_against_quadrature():
    for (m, al, b1, b2) in ((1, 1.0, 1.0, 1.0), (2, 1.5, 0.7, 1.2), (3, 1.0, 0.8, 1.1)):
        f = Integrand(lambda x: (np.exp(-al * x) * sp.jv(0, b1 * np.sqrt(x))
                                 * sp.jv(m, b2 * np.sqrt(x)) * x ** (0.5 * m)),
                      decay=ExponentialDecay(al))
        want = integrate_semiinf_decaying(f, 0.0, 1e-11).value
        r = se.weber_j0jm_limit(al, b1, b2, m)
        assert rel(r.value, want) < 1e-10


# ----------------------------------------------------------------------
# derivative_m
# ----------------------------------------------------------------------

def test_derivative_m_trivials():
    assert abs(se.derivative_m(lambda x: x * x, 3.0, 2).value - 2.0) < 1e-8
    assert abs(se.derivative_m(math.exp, 0.0, 3).value - 1.0) < 1e-3
    assert abs(se.derivative_m(math.sin, 0.0, 1).value - 1.0) < 1e-10


def test_derivative_m_error_estimate_bounds():
    for m in (1, 2, 3, 4):
        r = se.derivative_m(math.exp, 2.0, m)
        assert r.converged
        assert abs(r.value - math.exp(2.0)) <= max(r.abs_err_est, 1e-12)


def test_derivative_m_domain():
    with pytest.raises(DomainError):
        se.derivative_m(math.exp, -1.0, 2)
    with pytest.raises(DomainError):
        se.derivative_m(math.exp, 1.0, 5)
