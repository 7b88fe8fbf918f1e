"""Full layer boundary value problems: assembly and exact verification.

solve() splits the problem into a particular solution of the Poisson
equation plus a harmonic correction whose boundary data absorbs whatever
the particular solution left on the two hyperplanes.  Every step is exact
rational arithmetic, so verify() certifies the result by checking that
three residual polynomials are identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from . import dirichlet, mixed
from .particular import inv_laplacian
from .polyring import Poly, Ring, lift

Kind = Literal["dirichlet", "mixed"]


@dataclass(frozen=True)
class LayerProblem:
    """Poisson problem in the layer 0 < y < a with polynomial data.

    ``lower`` is the prescribed value at y=0.  ``upper`` is the value at
    y=a for a Dirichlet problem, or the y-derivative at y=a for a mixed
    problem.  All three data polynomials live in the ring x1..xn, y; the
    boundary polynomials must not involve y.
    """

    n: int
    a: Fraction
    rhs: Poly
    kind: Kind
    lower: Poly
    upper: Poly

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("spatial dimension must be at least 1")
        object.__setattr__(self, "a", Fraction(self.a))
        if self.a <= 0:
            raise ValueError("layer width must be positive")
        if self.kind not in ("dirichlet", "mixed"):
            raise ValueError(f"unknown problem kind {self.kind!r}")
        nvars = self.ring.nvars
        for name, p in (("rhs", self.rhs), ("lower", self.lower), ("upper", self.upper)):
            if not isinstance(p, Poly) or p.nvars != nvars:
                raise ValueError(f"{name} must be a Poly in the ring x1..x{self.n}, y")
        for name, p in (("lower", self.lower), ("upper", self.upper)):
            if p.degree_in(self.n) != 0:
                raise ValueError(f"boundary polynomial {name} must not involve y")

    @property
    def ring(self) -> Ring:
        return Ring(self.n)


@dataclass(frozen=True)
class SolutionReport:
    """A candidate solution together with its exact residuals."""

    u: Poly
    residual_pde: Poly
    residual_lower: Poly
    residual_upper: Poly

    @property
    def verified(self) -> bool:
        return (
            self.residual_pde.is_zero()
            and self.residual_lower.is_zero()
            and self.residual_upper.is_zero()
        )

    def to_json_dict(self) -> dict:
        return {
            "solution": self.u.to_json_dict(),
            "residual_pde": self.residual_pde.to_json_dict(),
            "residual_lower": self.residual_lower.to_json_dict(),
            "residual_upper": self.residual_upper.to_json_dict(),
            "verified": self.verified,
        }


def _x_monomials(p: Poly, n: int):
    """Iterate (k, coeff) over a polynomial with no y-dependence."""
    for exp, coeff in p.terms.items():
        yield exp[:n], coeff


def solve(problem: LayerProblem) -> SolutionReport:
    """Unique polynomial solution of the layer problem, with certification."""
    n, a, kind = problem.n, problem.a, problem.kind
    ring = problem.ring
    y = ring.y

    tilde = inv_laplacian(problem.rhs, n)
    u = tilde

    lower_corr = problem.lower - tilde.subs(y, 0)
    if kind == "dirichlet":
        upper_corr = problem.upper - tilde.subs(y, a)
        for k, coeff in _x_monomials(lower_corr, n):
            u = u + coeff * dirichlet.basis_v(k, n, a)
        for k, coeff in _x_monomials(upper_corr, n):
            u = u + coeff * dirichlet.basis_u(k, n, a)
    else:
        upper_corr = problem.upper - tilde.diff(y).subs(y, a)
        for k, coeff in _x_monomials(lower_corr, n):
            u = u + coeff * mixed.mixed_basis_u(k, n, a)
        for k, coeff in _x_monomials(upper_corr, n):
            u = u + coeff * mixed.mixed_basis_v(k, n, a)

    report = verify(u, problem)
    if not report.verified:
        # the construction is exact, so this can only mean an internal bug
        raise AssertionError("internal consistency failure: nonzero residual from solve()")
    return report


def verify(u: Poly, problem: LayerProblem) -> SolutionReport:
    """Exact residuals of a candidate solution against the problem data."""
    n, a = problem.n, problem.a
    ring = problem.ring
    if u.nvars != ring.nvars:
        raise ValueError(f"solution must live in the ring x1..x{n}, y")
    y = ring.y
    residual_pde = u.laplacian(n) - problem.rhs
    residual_lower = u.subs(y, 0) - problem.lower
    if problem.kind == "dirichlet":
        residual_upper = u.subs(y, a) - problem.upper
    else:
        residual_upper = u.diff(y).subs(y, a) - problem.upper
    return SolutionReport(u, residual_pde, residual_lower, residual_upper)


def rectangle_trace(u: Poly, x_edges: tuple[Fraction, Fraction]) -> tuple[Poly, Poly]:
    """Induced side traces u(b0, y), u(b1, y) of a strip solution (n=1 only).

    A polynomial solution determined by data on the two horizontal sides of
    a rectangle fixes the values on the two vertical sides; this returns
    them as polynomials in y.
    """
    ring = Ring(1)
    if u.nvars != ring.nvars:
        raise ValueError("rectangle traces are defined for n = 1 only")
    b0, b1 = (Fraction(b) for b in x_edges)
    return (
        lift(u.subs(0, b0), 1, (None, 0)),
        lift(u.subs(0, b1), 1, (None, 0)),
    )
