"""Exact polynomial solutions of the Poisson equation in a layer.

The layer is the slab x in R^n, 0 < y < a.  For a polynomial right-hand
side and polynomial Dirichlet or mixed Dirichlet-Neumann boundary data the
problem has a unique polynomial solution; this package constructs it in
exact rational arithmetic and certifies it symbolically.
"""

from .polyring import Poly, Ring, lift, to_latex, to_text
from .parsing import PolyParseError, parse_expr, parse_poly
from .particular import inv_laplacian, inv_laplacian_monomial, inv_laplacian_monomial_alt
from .dirichlet import basis_u, basis_v, c_coeffs, f_poly, multiindex_f, multiindex_factor
from .mixed import mixed_basis_u, mixed_basis_v, p_poly, q_poly
from .solver import LayerProblem, SolutionReport, rectangle_trace, solve, verify

__all__ = [
    "Poly",
    "Ring",
    "lift",
    "to_latex",
    "to_text",
    "PolyParseError",
    "parse_expr",
    "parse_poly",
    "inv_laplacian",
    "inv_laplacian_monomial",
    "inv_laplacian_monomial_alt",
    "basis_u",
    "basis_v",
    "c_coeffs",
    "f_poly",
    "multiindex_f",
    "multiindex_factor",
    "mixed_basis_u",
    "mixed_basis_v",
    "p_poly",
    "q_poly",
    "LayerProblem",
    "SolutionReport",
    "rectangle_trace",
    "solve",
    "verify",
]

__version__ = "0.1.0"
