"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately primitive (direct power series, composite
rules, bisection) and shares no code with the package's evaluation paths.
"""

from __future__ import annotations

import math

import numpy as np


def bessel_j_series(nu: float, x: float, terms: int = 120) -> float:
    """J_nu(x) from the defining power series."""
    total = 0.0
    for k in range(terms):
        total += ((-1.0) ** k / (math.factorial(k) * math.gamma(nu + k + 1))
                  * (0.5 * x) ** (nu + 2 * k))
    return total


def bessel_i_series(nu: float, x: float, terms: int = 120) -> float:
    """I_nu(x) from the defining power series."""
    total = 0.0
    for k in range(terms):
        total += (0.5 * x) ** (nu + 2 * k) / (math.factorial(k) * math.gamma(nu + k + 1))
    return total


def bessel_k0_integral(x: float, n: int = 200_001, tmax: float = 20.0) -> float:
    """K_0(x) = int_0^inf exp(-x cosh t) dt by a composite Simpson rule."""
    t = np.linspace(0.0, tmax, n)
    y = np.exp(-x * np.cosh(t))
    return simpson(y, t)


def y0_series(x: float, terms: int = 60) -> float:
    """Y_0(x) from the logarithmic series with the Euler-Mascheroni term."""
    euler = 0.5772156649015328606
    j0 = bessel_j_series(0.0, x, terms)
    s = 0.0
    h = 0.0
    for k in range(1, terms):
        h += 1.0 / k
        s += (-1.0) ** (k + 1) * h * (0.25 * x * x) ** k / math.factorial(k) ** 2
    return 2.0 / math.pi * ((math.log(0.5 * x) + euler) * j0 + s)


def simpson(y: np.ndarray, x: np.ndarray) -> float:
    """Plain composite Simpson rule on an odd-length uniform grid."""
    n = len(x)
    assert n % 2 == 1
    h = (x[-1] - x[0]) / (n - 1)
    w = np.ones(n)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return float(h / 3.0 * np.dot(w, y))


def bisect_zero(f, lo: float, hi: float, iters: int = 200) -> float:
    flo = f(lo)
    assert flo * f(hi) < 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
            flo = f(lo)
    return 0.5 * (lo + hi)


def legendre(n: int, x: float) -> float:
    """Legendre P_n by the recurrence (independent of the package)."""
    p0, p1 = 1.0, x
    if n == 0:
        return p0
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    return p1
