# The three integration engines and the sequence accelerator.
#
# Run:  python demos/02_quadrature_engines.py

import math

import numpy as np
from scipy import special as sp

from besselint import (EndpointSingularity, ExponentialDecay, Integrand,
                       OscillationDescriptor, epsilon_extrapolate,
                       integrate_finite, integrate_semiinf_decaying,
                       integrate_semiinf_oscillatory)

print("== adaptive finite quadrature ==")
r = integrate_finite(lambda x: x * x, 0.0, 1.0, 1e-12)
print(f"int_0^1 x^2 dx        = {r.value:.15g}  (1/3), est={r.abs_err_est:.1e}")

# Endpoint singularities are declared, never auto-detected.  The hint can
# carry an offset form f(endpoint -+ h) so the singular factor is computed
# from the exact distance h.
arcsine = Integrand(lambda u: (1 - u * u) ** -0.5,
                    singularities=(EndpointSingularity(-1.0, -0.5),
                                   EndpointSingularity(1.0, -0.5)))
r = integrate_finite(arcsine, -1.0, 1.0, 1e-12)
print(f"int (1-u^2)^-1/2 du   = {r.value:.15g}  (pi = {math.pi:.15g})")

g = -0.75
strong = Integrand(lambda u: (1 - u * u) ** g,
                   singularities=(EndpointSingularity(
                       1.0, g, offset_fn=lambda h: (h * (2 - h)) ** g),))
r = integrate_finite(strong, 0.0, 1.0, 1e-13)
exact = 0.5 * math.gamma(0.5) * math.gamma(g + 1) / math.gamma(g + 1.5)
print(f"int_0^1 (1-u^2)^-3/4  = {r.value:.15g}  (beta form {exact:.15g})")

print()
print("== semi-infinite with exponential decay ==")
# The declared rate drives an analytic tail bound; the finite part gets the
# other half of the budget.
r = integrate_semiinf_decaying(
    Integrand(lambda x: np.exp(-x * x), decay=ExponentialDecay(1.0)), 0.0, 1e-11)
print(f"int_0^inf e^(-x^2) dx = {r.value:.15g}  (sqrt(pi)/2 = {math.sqrt(math.pi)/2:.15g})")

triple = Integrand(lambda x: np.exp(-x) * sp.jv(0, np.sqrt(x)) ** 3,
                   decay=ExponentialDecay(1.0))
r = integrate_semiinf_decaying(triple, 0.0, 1e-11)
print(f"int e^-x J0(sqrt x)^3 = {r.value:.15g}  ({r.terms_or_nodes_used} evals)")

print()
print("== conditionally convergent oscillatory tails ==")
# Partition the axis into cells of one asymptotic period, integrate cell by
# cell, and extrapolate the partial sums with Wynn's epsilon algorithm.
r = integrate_semiinf_oscillatory(
    Integrand(lambda x: np.sinc(x / np.pi)), 0.0,
    OscillationDescriptor(asymptotic_period=math.pi, first_zero_estimate=math.pi),
    1e-10)
print(f"int_0^inf sin(x)/x dx = {r.value:.15g}  (pi/2 = {math.pi/2:.15g})")

r = integrate_semiinf_oscillatory(
    Integrand(lambda y: y * sp.jv(0, y) / (1 + y * y)), 0.0,
    OscillationDescriptor(math.pi, 2.405), 1e-9)
print(f"int y J0(y)/(1+y^2)   = {r.value:.15g}  (K_0(1) = {float(sp.kv(0, 1)):.15g})")

print()
print("== Wynn's epsilon on raw partial sums ==")
sums = np.cumsum([(-1.0) ** k / (k + 1) for k in range(12)])
r = epsilon_extrapolate(sums)
print(f"12 alternating-harmonic sums -> {r.value:.12f}  (ln 2 = {math.log(2):.12f})")
print(f"last raw sum error {abs(sums[-1]-math.log(2)):.1e}  vs extrapolated "
      f"{abs(r.value-math.log(2)):.1e}")
