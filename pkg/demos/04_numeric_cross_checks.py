"""Cross-validating the exact families against integrals and series.

The exact pipeline never uses floating point, but the polynomial families
it generates are closed forms of kernel moment integrals and of slowly
converging trigonometric series.  This script spot-checks both routes
numerically: adaptive quadrature against f_{2m}, partial sums against the
series summation formula, and the closed-form layer kernels for n=1, 3.
"""

import math

from layerpoisson import dirichlet
from layerpoisson.numcheck import (
    convolution_check,
    kernel_recurrence_residual,
    moment_integral,
    poisson_kernel_1d,
    run_all_checks,
    trig_series_closed_form,
    trig_series_sum,
)

# --- moment integrals of the 1-D kernel equal f_{2m} ----------------------

y, a = 0.4, 1.0
for m in range(4):
    exact = dirichlet.f_poly(m).eval_float((y, a))
    approx = moment_integral(m, y, a, "plus")
    print(f"m={m}: quadrature {approx:.12f}  exact {exact:.12f}  "
          f"err {abs(approx - exact):.2e}")
print()

# --- series summation: sum sin(ky)/k^5 and its alternating twin -----------

for alternating in (True, False):
    partial = trig_series_sum(2, 1.0, math.pi, alternating, 10_000)
    closed = trig_series_closed_form(2, 1.0, math.pi, alternating)
    tag = "alternating" if alternating else "plain"
    print(f"{tag:>11} series: partial {partial:.12f}  closed {closed:.12f}")
print()

# --- the convolution that the polynomial algebra replaces -----------------

val = convolution_check(3, 0.7, 0.4, 1.0)
exact = dirichlet.basis_u(3, 1).eval_float((0.7, 0.4, 1.0))
print(f"convolution of x^3 data: quadrature {val:.10f}  basis value {exact:.10f}")
print()

# --- kernel facts ----------------------------------------------------------

print("kernel at the layer midline:", poisson_kernel_1d(0.0, 0.5, 1.0))
print("dimension recurrence residual:", kernel_recurrence_residual(0.8, 0.3, 1.0))
print()

# --- the full battery ------------------------------------------------------

results = run_all_checks()
fails = [r for r in results if not r.passed]
print(f"{len(results) - len(fails)}/{len(results)} cross-checks passed")
