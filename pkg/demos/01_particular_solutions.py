"""Particular polynomial solutions of the Poisson equation in a layer.

For a monomial right-hand side x^k y^m there is a simple closed formula
for a polynomial u with laplacian(u) = x^k y^m: integrate twice in y and
correct with iterated spatial Laplacians.  This script walks through the
one- and three-dimensional worked cases and checks them symbolically.
"""

from layerpoisson import (
    Ring,
    inv_laplacian,
    inv_laplacian_monomial,
    inv_laplacian_monomial_alt,
    parse_poly,
    to_text,
)

ring1 = Ring(1)
ring3 = Ring(3)

# --- one dimension, right-hand side x^4 y^3 -------------------------------

u = inv_laplacian_monomial(4, 3, 1)
print("rhs = x^4*y^3")
print("u   =", to_text(u, ring1.names))
print("check: laplacian(u) =", to_text(u.laplacian(1), ring1.names))
print()

# the same monomial admits a second particular solution, integrated in x
u1 = inv_laplacian_monomial_alt(4, 3)
print("u1  =", to_text(u1, ring1.names))
diff = (u - u1).laplacian(1)
print("the two differ by a harmonic polynomial: laplacian(u - u1) =",
      to_text(diff, ring1.names))
print()

# --- three dimensions, right-hand side x1^3 x2^2 x3 y^3 -------------------

u3 = inv_laplacian_monomial((3, 2, 1), 3, 3)
print("rhs =", "x1^3*x2^2*x3*y^3")
print("u   =", to_text(u3, ring3.names))
print("check: laplacian(u) =", to_text(u3.laplacian(3), ring3.names))
print()

# --- linearity: any polynomial right-hand side ----------------------------

P = parse_poly("x^4*y^3 + 2", 1)
up = inv_laplacian(P, 1)
print("rhs = x^4*y^3 + 2")
print("u   =", to_text(up, ring1.names))
assert up.laplacian(1) == P
print("degree grows by exactly two:", P.total_degree(), "->", up.total_degree())
