"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines; any failure fails the corresponding test.
"""

import math
import random
import time
from fractions import Fraction

from layerpoisson import dirichlet, mixed, numcheck
from layerpoisson.particular import (
    inv_laplacian_monomial,
    inv_laplacian_monomial_alt,
)
from layerpoisson.polyring import Poly, Ring, lift
from layerpoisson.solver import LayerProblem, solve

from conftest import P, XYA, YA, X3Y
from test_solver import (
    EXAMPLE_1,
    EXAMPLE_1_SOLUTION,
    EXAMPLE_23_RHS,
    EXAMPLE_2_SOLUTION,
    EXAMPLE_3_SOLUTION,
    _random_problem,
)


def _report(criterion: str, ok: bool, elapsed: float | None = None):
    status = "PASS" if ok else "FAIL"
    timing = f" ({elapsed:.3f}s)" if elapsed is not None else ""
    print(f"{status}  {criterion}{timing}")
    assert ok, criterion


def test_criterion_1_golden_tables():
    t0 = time.perf_counter()
    f_expected = [
        P("y*a^-1", YA),
        P("-1/3*y*a^-1*(y^2 - a^2)", YA),
        P("1/15*y*a^-1*(3*y^4 - 10*y^2*a^2 + 7*a^4)", YA),
        P("-1/21*y*a^-1*(3*y^6 - 21*y^4*a^2 + 49*y^2*a^4 - 31*a^6)", YA),
        # the printed 249 y^4 a^4 coefficient is a typesetting defect; 294 is
        # forced by the harmonicity oracle and the series summation check
        P("1/45*y*a^-1*(5*y^8 - 60*y^6*a^2 + 294*y^4*a^4 - 620*y^2*a^6 + 381*a^8)", YA),
        P("-1/33*y*a^-1*(3*y^10 - 55*y^8*a^2 + 462*y^6*a^4 - 2046*y^4*a^6"
          " + 4191*y^2*a^8 - 2555*a^10)", YA),
    ]
    u_expected = [
        P("y*a^-1", XYA),
        P("x1*y*a^-1", XYA),
        P("1/3*y*a^-1*(3*x1^2 - y^2 + a^2)", XYA),
        P("x1*y*a^-1*(x1^2 - y^2 + a^2)", XYA),
        P("1/15*y*a^-1*(15*x1^4 - 30*x1^2*y^2 + 30*x1^2*a^2 + 3*y^4"
          " - 10*y^2*a^2 + 7*a^4)", XYA),
        P("1/3*x1*y*a^-1*(3*x1^4 - 10*x1^2*y^2 + 10*x1^2*a^2 + 3*y^4"
          " - 10*y^2*a^2 + 7*a^4)", XYA),
    ]
    p_expected = [
        P("1", YA),
        P("-y^2 + 2*a*y", YA),
        P("y^4 - 4*a*y^3 + 8*a^3*y", YA),
        P("-y^6 + 6*a*y^5 - 40*a^3*y^3 + 96*a^5*y", YA),
        P("y^8 - 8*a*y^7 + 112*a^3*y^5 - 896*a^5*y^3 + 2176*a^7*y", YA),
        P("-y^10 + 10*a*y^9 - 240*a^3*y^7 + 4032*a^5*y^5 - 32640*a^7*y^3"
          " + 79360*a^9*y", YA),
    ]
    q_expected = [
        P("y", YA),
        P("-1/3*y^3 + a^2*y", YA),
        P("1/5*y^5 - 2*a^2*y^3 + 5*a^4*y", YA),
        P("-1/7*y^7 + 3*a^2*y^5 - 25*a^4*y^3 + 61*a^6*y", YA),
        P("1/9*y^9 - 4*a^2*y^7 + 70*a^4*y^5 - 1708/3*a^6*y^3 + 1385*a^8*y", YA),
        P("-1/11*y^11 + 5*a^2*y^9 - 150*a^4*y^7 + 2562*a^6*y^5 - 20775*a^8*y^3"
          " + 50521*a^10*y", YA),
    ]
    mu_expected = [
        P("1", XYA),
        P("x1", XYA),
        P("x1^2 - y^2 + 2*a*y", XYA),
        P("x1^3 - 3*x1*y^2 + 6*a*x1*y", XYA),
        P("x1^4 - 6*x1^2*y^2 + 12*a*x1^2*y + y^4 - 4*a*y^3 + 8*a^3*y", XYA),
        P("x1^5 - 10*x1^3*y^2 + 20*a*x1^3*y + 5*x1*y^4 - 20*a*x1*y^3"
          " + 40*a^3*x1*y", XYA),
    ]
    mv_expected = [
        P("y", XYA),
        P("x1*y", XYA),
        P("x1^2*y - 1/3*y^3 + a^2*y", XYA),
        P("x1^3*y - x1*y^3 + 3*a^2*x1*y", XYA),
        P("x1^4*y - 2*x1^2*y^3 + 6*a^2*x1^2*y + 1/5*y^5 - 2*a^2*y^3 + 5*a^4*y", XYA),
        P("x1^5*y - 10/3*x1^3*y^3 + 10*a^2*x1^3*y + x1*y^5 - 10*a^2*x1*y^3"
          " + 25*a^4*x1*y", XYA),
    ]
    ok = (
        all(dirichlet.f_poly(m) == f_expected[m] for m in range(6))
        and all(dirichlet.basis_u(k, 1) == u_expected[k] for k in range(6))
        and all(mixed.p_poly(m) == p_expected[m] for m in range(6))
        and all(mixed.q_poly(m) == q_expected[m] for m in range(6))
        and all(mixed.mixed_basis_u(k, 1) == mu_expected[k] for k in range(6))
        and all(mixed.mixed_basis_v(l, 1) == mv_expected[l] for l in range(6))
    )
    elapsed = time.perf_counter() - t0
    _report("criterion 1: golden tables exact", ok and elapsed < 1.0, elapsed)


def test_criterion_2_particular_solutions():
    t0 = time.perf_counter()
    ok = (
        inv_laplacian_monomial(4, 3, 1)
        == P("1/20*x1^4*y^5 - 1/70*x1^2*y^7 + 1/2520*y^9", ("x1", "y"))
        and inv_laplacian_monomial_alt(4, 3)
        == P("1/30*x1^6*y^3 - 1/280*x1^8*y", ("x1", "y"))
        and inv_laplacian_monomial((3, 2, 1), 3, 3)
        == P(
            "1/20*x1^3*x2^2*x3*y^5 - 1/420*x1^3*x3*y^7 - 1/140*x1*x2^2*x3*y^7"
            " + 1/2520*x1*x3*y^9",
            X3Y,
        )
    )
    elapsed = time.perf_counter() - t0
    _report("criterion 2: worked particular solutions exact", ok and elapsed < 0.1, elapsed)


def test_criterion_3_end_to_end_examples():
    t0 = time.perf_counter()
    r1 = solve(EXAMPLE_1)
    zero = Poly.zero(4)
    r2 = solve(LayerProblem(n=3, a=Fraction(1), rhs=EXAMPLE_23_RHS,
                            kind="dirichlet", lower=zero, upper=zero))
    r3 = solve(LayerProblem(n=3, a=Fraction(1), rhs=EXAMPLE_23_RHS,
                            kind="mixed", lower=zero, upper=zero))
    ok = (
        r1.u == EXAMPLE_1_SOLUTION and r1.verified
        and r2.u == EXAMPLE_2_SOLUTION and r2.verified
        and r3.u == EXAMPLE_3_SOLUTION and r3.verified
    )
    elapsed = time.perf_counter() - t0
    _report("criterion 3: end-to-end examples 1-3 exact", ok and elapsed < 1.0, elapsed)


def test_criterion_4_multiindex_identity():
    ok = dirichlet.multiindex_f((2, 1, 1)) == Fraction(1, 35) * dirichlet.f_poly(4)
    _report("criterion 4: multi-index identity f_2(2,1,1) = f_8/35", ok)


def test_criterion_5_property_suite():
    t0 = time.perf_counter()
    rng = random.Random(20250824)
    ok = all(solve(_random_problem(rng)).verified for _ in range(500))

    # linearity / superposition
    p1 = _random_problem(rng, kind="dirichlet")
    ring = p1.ring
    zero = Poly.zero(ring.nvars)
    parts = [
        LayerProblem(n=p1.n, a=p1.a, kind=p1.kind, rhs=p1.rhs, lower=zero, upper=zero),
        LayerProblem(n=p1.n, a=p1.a, kind=p1.kind, rhs=zero, lower=p1.lower, upper=zero),
        LayerProblem(n=p1.n, a=p1.a, kind=p1.kind, rhs=zero, lower=zero, upper=p1.upper),
    ]
    ok = ok and sum((solve(p).u for p in parts), start=zero) == solve(p1).u

    # reflection symmetry for a Dirichlet problem
    flip = ring.const(p1.a) - ring.y_var()
    reflected = LayerProblem(
        n=p1.n, a=p1.a, kind="dirichlet",
        rhs=p1.rhs.subs(ring.y, flip), lower=p1.upper, upper=p1.lower,
    )
    ok = ok and solve(reflected).u == solve(p1).u.subs(ring.y, flip)

    # particular-solution independence on the 1-D worked example
    tilde = inv_laplacian_monomial_alt(4, 3)
    u = tilde
    for exp, coeff in (EXAMPLE_1.lower - tilde.subs(1, 0)).terms.items():
        u = u + coeff * dirichlet.basis_v(exp[:1], 1, EXAMPLE_1.a)
    for exp, coeff in (EXAMPLE_1.upper - tilde.subs(1, EXAMPLE_1.a)).terms.items():
        u = u + coeff * dirichlet.basis_u(exp[:1], 1, EXAMPLE_1.a)
    ok = ok and u == EXAMPLE_1_SOLUTION

    elapsed = time.perf_counter() - t0
    _report("criterion 5: 500 randomized problems + properties", ok and elapsed < 30.0, elapsed)


def test_criterion_6_generating_function_identities():
    M = 8
    nv = 3  # ring (y, a, t)

    def trunc(p):
        return Poly(nv, {e: c for e, c in p.terms.items() if e[2] <= 2 * M + 1})

    zero = Poly.zero(nv)
    sinh_a = sum(
        (Poly.monomial(nv, (0, 2 * i + 1, 2 * i + 1), Fraction(1, math.factorial(2 * i + 1)))
         for i in range(M + 1)), start=zero)
    sinh_y = sum(
        (Poly.monomial(nv, (2 * i + 1, 0, 2 * i + 1), Fraction(1, math.factorial(2 * i + 1)))
         for i in range(M + 1)), start=zero)
    c_series = sum(
        (lift(dirichlet.c_coeffs(M)[m], nv, (0, 1)) * Poly.monomial(nv, (0, 0, 2 * m))
         for m in range(M + 1)), start=zero)
    ok = trunc(c_series * sinh_a) == trunc(sinh_y)

    cosh_a = sum(
        (Poly.monomial(nv, (0, 2 * i, 2 * i), Fraction(1, math.factorial(2 * i)))
         for i in range(M + 1)), start=zero)
    y = Poly.variable(nv, 0)
    a = Poly.variable(nv, 1)
    cosh_ay = sum(
        (((a - y) ** (2 * i)) * Poly.monomial(nv, (0, 0, 2 * i), Fraction(1, math.factorial(2 * i)))
         for i in range(M + 1)), start=zero)
    d_series = sum(
        (lift(mixed.p_poly(m), nv, (0, 1))
         * Poly.monomial(nv, (0, 0, 2 * m), Fraction((-1) ** m, math.factorial(2 * m)))
         for m in range(M + 1)), start=zero)
    ok = ok and trunc(d_series * cosh_a) == trunc(cosh_ay)

    sinh_y_over_t = sum(
        (Poly.monomial(nv, (2 * i + 1, 0, 2 * i), Fraction(1, math.factorial(2 * i + 1)))
         for i in range(M + 1)), start=zero)
    e_series = sum(
        (lift(mixed.q_poly(m), nv, (0, 1))
         * Poly.monomial(nv, (0, 0, 2 * m), Fraction((-1) ** m, math.factorial(2 * m)))
         for m in range(M + 1)), start=zero)
    ok = ok and trunc(e_series * cosh_a) == trunc(sinh_y_over_t)

    _report("criterion 6: generating-function ring identities (M=8)", ok)


def test_criterion_7_numeric_cross_checks():
    t0 = time.perf_counter()
    rng = random.Random(4242)
    ok = True

    # moment integrals vs exact f polynomials: m <= 4, 20 points, 1e-6 relative
    for _ in range(20):
        m = rng.randint(0, 4)
        a = rng.uniform(0.5, 2.0)
        y = rng.uniform(0.05 * a, 0.95 * a)
        exact = dirichlet.f_poly(m).eval_float((y, a))
        approx = numcheck.moment_integral(m, y, a, "plus")
        ok = ok and abs(approx - exact) <= 1e-6 * max(1.0, abs(exact))

    # trig series at the m=2, a=pi instances
    y = 1.0
    alt = y * (3 * y ** 4 - 10 * math.pi ** 2 * y ** 2 + 7 * math.pi ** 4) / 720
    ok = ok and abs(numcheck.trig_series_sum(2, y, math.pi, True, 10_000) - alt) <= 1e-9
    plain = (y * (math.pi - y)
             * (3 * y ** 3 - 12 * math.pi * y ** 2 + 8 * math.pi ** 2 * y + 8 * math.pi ** 3) / 720)
    ok = ok and abs(numcheck.trig_series_sum(2, y, math.pi, False, 10_000) - plain) <= 1e-9

    # convolution vs exact basis at 10 points
    for _ in range(10):
        k = rng.randint(0, 6)
        a = rng.uniform(0.5, 2.0)
        x = rng.uniform(-1.5, 1.5)
        y = rng.uniform(0.1 * a, 0.9 * a)
        exact = dirichlet.basis_u(k, 1).eval_float((x, y, a))
        approx = numcheck.convolution_check(k, x, y, a)
        ok = ok and abs(approx - exact) <= 1e-6 * max(1.0, abs(exact))

    # kernel dimension recurrence by finite differences
    for _ in range(6):
        a = rng.uniform(0.5, 2.0)
        r = rng.uniform(0.2, 1.5)
        y = rng.uniform(0.1 * a, 0.9 * a)
        ok = ok and numcheck.kernel_recurrence_residual(r, y, a) <= 1e-5

    elapsed = time.perf_counter() - t0
    _report("criterion 7: numeric cross-checks", ok and elapsed < 60.0, elapsed)
