"""Solving full layer problems and certifying the result symbolically.

A layer problem is a polynomial right-hand side plus polynomial boundary
data (values on both planes, or a value below and a normal derivative
above).  The solver returns the unique polynomial solution together with
three residual polynomials that are identically zero when the solution is
exact -- which is checked here, along with what goes wrong on a rectangle.
"""

from fractions import Fraction

from layerpoisson import (
    LayerProblem,
    Poly,
    Ring,
    parse_poly,
    rectangle_trace,
    solve,
    to_text,
    verify,
)

ring = Ring(1)

# --- a Dirichlet problem with Chebyshev-style boundary data ---------------

problem = LayerProblem(
    n=1,
    a=Fraction(1),
    rhs=parse_poly("x^4*y^3", 1),
    kind="dirichlet",
    lower=parse_poly("8*x^4 - 8*x^2 + 1", 1),
    upper=parse_poly("8*x^4 - 8*x^2 + 1", 1),
)
report = solve(problem)
print("solution:", to_text(report.u, ring.names))
print("verified:", report.verified)
print()

# --- a mixed problem in three dimensions ----------------------------------

zero = Poly.zero(4)
mixed_problem = LayerProblem(
    n=3, a=Fraction(1), rhs=parse_poly("x1^3*x2^2*x3*y^3", 3),
    kind="mixed", lower=zero, upper=zero,
)
mixed_report = solve(mixed_problem)
print("mixed solution:", to_text(mixed_report.u, Ring(3).names))
print("verified:", mixed_report.verified)
print()

# --- verification catches wrong candidates --------------------------------

bad = report.u + parse_poly("y^2 - y", 1)
bad_report = verify(bad, problem)
print("perturbed candidate residual (pde):",
      to_text(bad_report.residual_pde, ring.names))
print("verified:", bad_report.verified)
print()

# --- why the rectangle problem usually has no polynomial solution ---------

strip = LayerProblem(
    n=1, a=Fraction(1), rhs=Poly.zero(2), kind="dirichlet",
    lower=parse_poly("x^2", 1), upper=parse_poly("x^2", 1),
)
u = solve(strip).u
print("strip solution with x^2 on both planes:", to_text(u, ring.names))
left, right = rectangle_trace(u, (Fraction(0), Fraction(1)))
print("induced trace at x=0:", to_text(left, ("y",)))
print("induced trace at x=1:", to_text(right, ("y",)))
print("any other polynomial data on the vertical sides is incompatible")
