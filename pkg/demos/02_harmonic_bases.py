"""The harmonic polynomial bases behind the layer solver.

Each boundary monomial x^k has a unique polynomial-growth harmonic
extension into the layer with zero data on the opposite boundary.  These
extensions are assembled from one-variable families generated by exact
power-series division, with the layer width a kept symbolic.
"""

from fractions import Fraction

from layerpoisson import (
    Ring,
    basis_u,
    basis_v,
    f_poly,
    mixed_basis_u,
    mixed_basis_v,
    multiindex_f,
    p_poly,
    q_poly,
    to_text,
)

YA = ("y", "a")
ring = Ring(1, formal_a=True)

# --- the Dirichlet moment family f_{2m} -----------------------------------

print("Dirichlet family (odd polynomials in y, one overall 1/a):")
for m in range(4):
    print(f"  f{2 * m}(y) =", to_text(f_poly(m), YA))
print()

# --- Dirichlet basis members, symbolic width ------------------------------

for k in (0, 3, 5):
    u = basis_u(k, 1)
    print(f"u{k}(x,y) =", to_text(u, ring.names))
    assert u.laplacian(1).is_zero()
print()

# v_k carries the monomial on the lower boundary instead
v2 = basis_v(2, 1, a=Fraction(1))
print("v2 at width 1:", to_text(v2, Ring(1).names))
print("  trace at y=0:", to_text(v2.subs(1, 0), Ring(1).names))
print("  trace at y=1:", to_text(v2.subs(1, 1), Ring(1).names))
print()

# --- mixed Dirichlet-Neumann families -------------------------------------

print("mixed families:")
for m in range(3):
    print(f"  p{2 * m}(y) =", to_text(p_poly(m), YA))
    print(f"  q{2 * m}(y) =", to_text(q_poly(m), YA))
print()

u4 = mixed_basis_u(4, 1)
print("mixed u4:", to_text(u4, ring.names))
print("  value at y=0:", to_text(u4.subs(ring.y, 0), ring.names))
print("  dy at y=a:", to_text(u4.diff(ring.y).subs(ring.y, ring.a_var()), ring.names))
v3 = mixed_basis_v(3, 1)
print("mixed v3:", to_text(v3, ring.names))
print()

# --- multi-index members reduce to scaled 1-D polynomials -----------------

f211 = multiindex_f((2, 1, 1))
print("f for the multi-index (2,1,1):", to_text(f211, YA))
print("equals f8/35:", f211 == f_poly(4) * Fraction(1, 35))
