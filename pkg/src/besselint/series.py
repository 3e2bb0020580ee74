"""Series-side evaluators.

The explicit expansions used as closed/series routes by the catalog:
the Gauss-sum expansion of J_mu(ax)J_nu(bx), its Neumann-series
counterpart, the 0F1 product sum, the Laplace-transform series for the
product of three Bessel functions (with its m-th-derivative
generalization and the two-factor limit), and the Richardson-extrapolated
numerical m-th derivative the generalization needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import special as _sp

from .specfun import DomainError, EvalResult, hyp0f1, log_gamma

__all__ = [
    "SeriesState",
    "TripleParams",
    "product_jj_gauss",
    "product_jj_neumann",
    "hyp0f1_product",
    "weber_triple",
    "weber_triple_m",
    "weber_j0jm_limit",
    "derivative_m",
]

_EPS = 2.0 ** -52


@dataclass
class SeriesState:
    """Running state of a compensated summation.

    ``max_partial_abs`` tracks the largest partial-sum magnitude seen, the
    cancellation signal used by error estimates; ``terms`` only grows.
    """

    partial_sum: float = 0.0
    last_term_abs: float = 0.0
    terms: int = 0
    max_partial_abs: float = 0.0
    _comp: float = 0.0
    _abs_sum: float = 0.0

    def add(self, term: float) -> None:
        y = term - self._comp
        t = self.partial_sum + y
        self._comp = (t - self.partial_sum) - y
        self.partial_sum = t
        self.last_term_abs = abs(term)
        self._abs_sum += abs(term)
        self.terms += 1
        if abs(t) > self.max_partial_abs:
            self.max_partial_abs = abs(t)

    def err_est(self) -> float:
        return self.last_term_abs + 4.0 * _EPS * self._abs_sum

    def result(self, converged: bool, note: str = "") -> EvalResult:
        return EvalResult(self.partial_sum, self.err_est(), converged, self.terms, note)


@dataclass(frozen=True)
class TripleParams:
    """Parameters of the three-Bessel Laplace transform family."""

    alpha: float
    beta1: float
    beta2: float
    beta3: float
    m: int = 0

    def __post_init__(self):
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise DomainError(f"TripleParams: alpha must be finite > 0, got {self.alpha!r}")
        for name in ("beta1", "beta2", "beta3"):
            b = getattr(self, name)
            if not (b >= 0.0 and math.isfinite(b)):
                raise DomainError(f"TripleParams: {name} must be finite >= 0, got {b!r}")
        if self.m < 0:
            raise DomainError(f"TripleParams: m must be >= 0, got {self.m!r}")


def _stop(state: SeriesState, run: int, term_abs: float) -> int:
    scale = max(abs(state.partial_sum), _EPS * state.max_partial_abs, 1e-305)
    return run + 1 if term_abs <= _EPS * scale else 0


# ----------------------------------------------------------------------
# products of two Bessel functions
# ----------------------------------------------------------------------

def _hyp2f1_terminating(m: int, b, c, z):
    # 2F1(-m, b; c; z) summed exactly over its m+1 terms (dtype-generic)
    term = z / z if z != 0 else 1.0  # one in the operand dtype
    total = term
    for j in range(m):
        term = term * (j - m) * (b + j) * z / ((c + j) * (j + 1))
        total = total + term
    return total


def product_jj_gauss(mu: float, nu: float, a: float, b: float, x: float,
                     max_terms: int = 2000) -> EvalResult:
    """J_mu(a x) * J_nu(b x) by the expansion in Gauss sums.

    Outer sum over m of (-1)^m (ax/2)^(2m) / (m! (mu+1)_m) times the
    terminating 2F1(-m, -mu-m; nu+1; b^2/a^2), normalized by the gamma
    prefactors.  Serves as the series oracle for the direct product;
    requires 0 < b <= a so the 2F1 argument stays in [0, 1].

    The outer sum cancels like exp(2 b x) while the result stays O(1),
    so the accumulation runs in extended precision (longdouble) to hold
    the 1e-8 agreement window out to a x ~ 10.
    """
    mu, nu, a, b, x = float(mu), float(nu), float(a), float(b), float(x)
    if not (0.0 < b <= a):
        raise DomainError(f"product_jj_gauss: requires 0 < b <= a, got a={a!r}, b={b!r}")
    if x < 0.0:
        raise DomainError(f"product_jj_gauss: requires x >= 0, got x={x!r}")
    if nu + 1.0 <= 0.0 and (nu + 1.0) == math.floor(nu + 1.0):
        raise DomainError(f"product_jj_gauss: nu={nu!r} makes (nu+1) a nonpositive integer")
    if x == 0.0:
        if mu < 0.0 or nu < 0.0:
            raise DomainError("product_jj_gauss: x = 0 needs mu, nu >= 0")
        return EvalResult(1.0 if mu == 0.0 and nu == 0.0 else 0.0, 0.0, True, 1)

    ld = np.longdouble
    ld_eps = float(np.finfo(ld).eps)
    w = (ld(b) / ld(a)) ** 2
    pref = math.exp(mu * math.log(0.5 * a * x) + nu * math.log(0.5 * b * x)
                    - log_gamma(mu + 1.0) - log_gamma(nu + 1.0))
    q = ld(0.25) * ld(a) * ld(a) * ld(x) * ld(x)  # (ax/2)^2
    coeff = ld(1.0)  # (-1)^m (ax/2)^{2m} / (m! (mu+1)_m)
    total = _hyp2f1_terminating(0, ld(-mu), ld(nu + 1.0), w)
    abs_sum = abs(total)
    last = float(abs(total))
    run = 0
    terms = 1
    converged = False
    for m in range(1, max_terms + 1):
        coeff = coeff * (-q) / (ld(m) * ld(mu + m))
        term = coeff * _hyp2f1_terminating(m, ld(-mu - m), ld(nu + 1.0), w)
        total = total + term
        abs_sum += abs(term)
        last = float(abs(term))
        terms += 1
        scale = max(abs(float(total)), _EPS * float(abs_sum), 1e-305)
        run = run + 1 if last <= _EPS * scale else 0
        if run >= 3:
            converged = True
            break
    err = pref * (last + 4.0 * ld_eps * float(abs_sum) + _EPS * abs(float(total)))
    return EvalResult(pref * float(total), err, converged, terms,
                      note="" if converged else "product_jj_gauss: ran past term budget")


def product_jj_neumann(nu: float, a: float, b: float, x: float,
                       max_terms: int = 500) -> EvalResult:
    """J_nu(a x) * J_nu(b x) as a Neumann series over J_{nu+2r}(x sqrt(a^2+b^2))."""
    nu, a, b, x = float(nu), float(a), float(b), float(x)
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"product_jj_neumann: requires a, b > 0, got a={a!r}, b={b!r}")
    if x < 0.0:
        raise DomainError(f"product_jj_neumann: requires x >= 0, got x={x!r}")
    if x == 0.0:
        if nu < 0.0:
            raise DomainError("product_jj_neumann: x = 0 needs nu >= 0")
        return EvalResult(1.0 if nu == 0.0 else 0.0, 0.0, True, 1)
    c = math.hypot(a, b)
    q = a * b * x / (2.0 * c)
    if nu + 1.0 <= 0.0 and (nu + 1.0) == math.floor(nu + 1.0):
        raise DomainError(f"product_jj_neumann: nu={nu!r} hits a gamma pole")

    # coeff_r = q^(nu+2r) / (r! Gamma(nu+r+1))
    coeff = math.exp(nu * math.log(q) - log_gamma(nu + 1.0))
    state = SeriesState()
    run = 0
    for r in range(max_terms):
        if r > 0:
            coeff *= q * q / (r * (nu + r))
        term = coeff * float(_sp.jv(nu + 2 * r, x * c))
        state.add(term)
        run = _stop(state, run, coeff)  # envelope: |J| <= 1
        if run >= 3:
            return state.result(True)
    return state.result(False, note="product_jj_neumann: ran past term budget")


def hyp0f1_product(c: float, x: float, y: float, max_terms: int = 500) -> EvalResult:
    """0F1(;c;x) * 0F1(;c;y) via the product expansion.

    Sums sum_r (xy)^r / (r! (c)_r (c)_2r) * 0F1(;c+2r;x+y).
    """
    c, x, y = float(c), float(x), float(y)
    if c <= 0.0 and c == math.floor(c):
        raise DomainError(f"hyp0f1_product: c={c!r} is a nonpositive-integer pole")
    xy = x * y
    s = x + y
    coeff = 1.0
    state = SeriesState()
    inner_terms = 0
    run = 0
    for r in range(max_terms):
        if r > 0:
            coeff *= xy / (r * (c + r - 1.0) * (c + 2.0 * r - 2.0) * (c + 2.0 * r - 1.0))
        inner = hyp0f1(c + 2.0 * r, s)
        inner_terms += inner.terms_or_nodes_used
        term = coeff * inner.value
        state.add(term)
        run = _stop(state, run, abs(term))
        if run >= 3:
            return EvalResult(state.partial_sum, state.err_est(), True,
                              state.terms + inner_terms)
    return EvalResult(state.partial_sum, state.err_est(), False,
                      state.terms + inner_terms,
                      note="hyp0f1_product: ran past term budget")


# ----------------------------------------------------------------------
# Laplace transforms of triple Bessel products
# ----------------------------------------------------------------------

def weber_triple(p: TripleParams, max_terms: int = 300) -> EvalResult:
    """Laplace transform of J_0(b1 sqrt(x)) J_0(b2 sqrt(x)) J_0(b3 sqrt(x)).

    Evaluates (1/alpha) exp(-(b1^2+b2^2+b3^2)/4 alpha) * sum over n of
    (2 - delta_n0) (-1)^n I_n(b1 b2/2a) I_n(b1 b3/2a) I_n(b2 b3/2a), with
    the modified Bessel factors scaled so only one exponential is formed,
    in log space, at the end.  The (-1)^n comes with the modified-Bessel
    form of the circular addition theorem; without it the sum disagrees
    with the defining integral at the percent level.
    """
    if p.m != 0:
        raise DomainError("weber_triple: requires TripleParams with m = 0 "
                          "(use weber_triple_m for m >= 1)")
    al = p.alpha
    z1 = p.beta1 * p.beta2 / (2.0 * al)
    z2 = p.beta1 * p.beta3 / (2.0 * al)
    z3 = p.beta2 * p.beta3 / (2.0 * al)
    expo = -(p.beta1 ** 2 + p.beta2 ** 2 + p.beta3 ** 2) / (4.0 * al) + (z1 + z2 + z3)
    state = SeriesState()
    run = 0
    converged = False
    for n in range(max_terms):
        w = 1.0 if n == 0 else 2.0 * (-1.0) ** n
        term = w * float(_sp.ive(n, z1)) * float(_sp.ive(n, z2)) * float(_sp.ive(n, z3))
        state.add(term)
        run = _stop(state, run, abs(term))
        if run >= 3:
            converged = True
            break
    scale = math.exp(expo) / al
    return EvalResult(scale * state.partial_sum, scale * state.err_est(),
                      converged, state.terms,
                      note="" if converged else "weber_triple: ran past term budget")


def _triple_m_series(p: TripleParams, x: float, max_terms: int) -> tuple[float, bool]:
    # sum over n of (-1)^n (n+m)(2m+n-1)!/n! * I_{m+n}(b2 sqrt(x/a))
    #   * I_{m+n}(b3 sqrt(x/a)) * I_{m+n}(b2 b3/2a); the last factor is
    #   constant in x.  The (-1)^n again belongs to the modified-Bessel
    #   Gegenbauer addition theorem.
    m, al = p.m, p.alpha
    s = math.sqrt(max(x, 0.0) / al)
    u2, u3 = p.beta2 * s, p.beta3 * s
    zc = p.beta2 * p.beta3 / (2.0 * al)
    state = SeriesState()
    run = 0
    for n in range(max_terms):
        w = (-1.0) ** n * (n + m) * math.exp(log_gamma(2.0 * m + n) - log_gamma(n + 1.0))
        term = w * float(_sp.iv(m + n, u2)) * float(_sp.iv(m + n, u3)) * float(_sp.iv(m + n, zc))
        state.add(term)
        run = _stop(state, run, abs(term))
        if run >= 3:
            return state.partial_sum, True
    return state.partial_sum, False


def weber_triple_m(p: TripleParams, max_terms: int = 300) -> EvalResult:
    """Laplace transform of J_0(b1 sqrt(x)) J_m(b2 sqrt(x)) J_m(b3 sqrt(x)), m >= 1.

    Prefactor times the numerical m-th derivative (Richardson-extrapolated
    central differences) of exp(-x) * S(x) at x = b1^2/(4 alpha), where S
    is the modified-Bessel product series above.  m = 0 reduces to
    :func:`weber_triple` identically.
    """
    if p.m == 0:
        return weber_triple(p, max_terms=max_terms)
    if not (1 <= p.m <= 4):
        raise DomainError(f"weber_triple_m: m must be in 1..4, got {p.m!r}")
    if not (p.beta2 > 0.0 and p.beta3 > 0.0):
        raise DomainError("weber_triple_m: requires beta2, beta3 > 0")
    m, al = p.m, p.alpha
    pref = (math.exp((2 * m + 1) * math.log(2.0) + log_gamma(m + 1.0) - log_gamma(2.0 * m + 1.0)
                     + m * math.log(al / (p.beta2 * p.beta3))
                     - (p.beta2 ** 2 + p.beta3 ** 2) / (4.0 * al)) / al)
    x0 = p.beta1 ** 2 / (4.0 * al)
    series_ok = True

    def g(x: float) -> float:
        nonlocal series_ok
        val, ok = _triple_m_series(p, x, max_terms)
        series_ok = series_ok and ok
        return math.exp(-x) * val

    d = derivative_m(g, x0, m)
    note = d.note
    if not series_ok:
        note = (note + "; " if note else "") + "weber_triple_m: inner series ran past budget"
    return EvalResult(pref * d.value, pref * d.abs_err_est,
                      d.converged and series_ok, d.terms_or_nodes_used, note=note)


def weber_j0jm_limit(alpha: float, beta1: float, beta2: float, m: int) -> EvalResult:
    """Laplace transform of J_0(b1 sqrt(x)) J_m(b2 sqrt(x)) x^(m/2).

    Closed finite sum: (1/alpha) (b2/2 alpha)^m exp(-(b1^2+b2^2)/4 alpha)
    * sum_{n=0}^m (-1)^n C(m,n) (b1/b2)^n I_n(b1 b2/2 alpha).
    """
    alpha, beta1, beta2 = float(alpha), float(beta1), float(beta2)
    if not (alpha > 0.0):
        raise DomainError(f"weber_j0jm_limit: alpha must be > 0, got {alpha!r}")
    if m < 0:
        raise DomainError(f"weber_j0jm_limit: m must be >= 0, got {m!r}")
    if beta1 < 0.0 or beta2 < 0.0:
        raise DomainError("weber_j0jm_limit: requires beta1, beta2 >= 0")
    if beta2 == 0.0:
        if m == 0:
            v = math.exp(-beta1 ** 2 / (4.0 * alpha)) / alpha
            return EvalResult(v, abs(v) * 5e-15, True, 1)
        return EvalResult(0.0, 0.0, True, 1)  # J_m(0) = 0 for m >= 1
    z = beta1 * beta2 / (2.0 * alpha)
    total = math.fsum((-1.0) ** n * math.comb(m, n) * (beta1 / beta2) ** n * float(_sp.iv(n, z))
                      for n in range(m + 1))
    v = ((beta2 / (2.0 * alpha)) ** m * math.exp(-(beta1 ** 2 + beta2 ** 2) / (4.0 * alpha))
         / alpha * total)
    return EvalResult(v, abs(v) * 1e-13 + 1e-305, True, m + 1)


# ----------------------------------------------------------------------
# numerical m-th derivative
# ----------------------------------------------------------------------

def _central_diff(f: Callable[[float], float], x0: float, m: int, h: float):
    vals = [f(x0 + (0.5 * m - k) * h) for k in range(m + 1)]
    acc = math.fsum((-1.0) ** k * math.comb(m, k) * v for k, v in enumerate(vals))
    return acc / h ** m, max(abs(v) for v in vals)


def _forward_diff(f: Callable[[float], float], x0: float, m: int, h: float):
    vals = [f(x0 + k * h) for k in range(m + 1)]
    acc = math.fsum((-1.0) ** (m - k) * math.comb(m, k) * v for k, v in enumerate(vals))
    return acc / h ** m, max(abs(v) for v in vals)


def derivative_m(f: Callable[[float], float], x0: float, m: int) -> EvalResult:
    """m-th derivative of f at x0 >= 0 (m in 1..4) by finite differences.

    Central stencils with steps h, h/2, h/4 and Richardson extrapolation
    of the h^2 error series; one-sided stencils (with the matching h^1
    ladder) when x0 sits too close to 0.  Flags instability when the
    extrapolation ladder stops contracting.
    """
    if not (1 <= m <= 4):
        raise DomainError(f"derivative_m: m must be in 1..4, got {m!r}")
    x0 = float(x0)
    if x0 < 0.0:
        raise DomainError(f"derivative_m: requires x0 >= 0, got {x0!r}")
    h = max(abs(x0), 1.0) * _EPS ** (1.0 / (m + 2))
    one_sided = x0 < 0.5 * m * h
    if one_sided:
        d1, f1 = _forward_diff(f, x0, m, h)
        d2, f2 = _forward_diff(f, x0, m, h / 2.0)
        d4, f4 = _forward_diff(f, x0, m, h / 4.0)
        r1 = 2.0 * d2 - d1
        r1b = 2.0 * d4 - d2
        r2 = (4.0 * r1b - r1) / 3.0
    else:
        d1, f1 = _central_diff(f, x0, m, h)
        d2, f2 = _central_diff(f, x0, m, h / 2.0)
        d4, f4 = _central_diff(f, x0, m, h / 4.0)
        r1 = (4.0 * d2 - d1) / 3.0
        r1b = (4.0 * d4 - d2) / 3.0
        r2 = (16.0 * r1b - r1) / 15.0
    if not all(map(math.isfinite, (d1, d2, d4))):
        return EvalResult(math.nan, math.inf, False, 3 * (m + 1),
                          note="derivative_m: non-finite stencil values")
    # stencil roundoff: sum|binomial| * eps * max|f| on the finest step
    noise = 2.0 ** m * _EPS * max(f1, f2, f4, _EPS) / (h / 4.0) ** m
    err = abs(r2 - r1b) + noise
    unstable = abs(r2 - r1b) > abs(r1b - r1) + noise and abs(r1b - r1) > noise
    return EvalResult(r2, err, not unstable, 3 * (m + 1),
                      note="derivative_m: extrapolants diverging" if unstable else "")
