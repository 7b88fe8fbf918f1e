"""Particular polynomial solutions of the layer Poisson equation.

Given a polynomial right-hand side P(x, y), builds a polynomial u with
laplacian(u) = P, monomial by monomial.  The construction integrates each
monomial x^k y^m twice in y and corrects with iterated spatial Laplacians,
so the result has total degree deg(P) + 2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polyring import Poly, Ring


def _normalize_index(k, n: int) -> tuple[int, ...]:
    if isinstance(k, int):
        if n != 1:
            raise ValueError("integer exponent only valid for n = 1")
        k = (k,)
    k = tuple(k)
    if len(k) != n:
        raise ValueError(f"multi-index length {len(k)} does not match n={n}")
    if any(e < 0 for e in k):
        raise ValueError("multi-index entries must be non-negative")
    return k


def inv_laplacian_monomial(k, m: int, n: int) -> Poly:
    """Polynomial u with laplacian(u, n) = x^k y^m, via the y-integrated form.

    u = sum_{j=0}^{floor(|k|/2)} (-1)^j m!/(m+2j+2)! y^(m+2j+2) lap_x^j x^k
    """
    if n < 1:
        raise ValueError("spatial dimension must be at least 1")
    if m < 0:
        raise ValueError("y-exponent must be non-negative")
    k = _normalize_index(k, n)
    ring = Ring(n)
    xk = ring.x_monomial(k)
    total = sum(k)
    result = ring.zero()
    sign = 1
    # m!/(m+2j+2)! built up as a running product of reciprocals
    ratio = Fraction(1)
    lap_term = xk
    for j in range(total // 2 + 1):
        ratio *= Fraction(1, (m + 2 * j + 1) * (m + 2 * j + 2))
        if lap_term.is_zero():
            break
        y_power = Poly.monomial(ring.nvars, [0] * n + [m + 2 * j + 2])
        result = result + sign * ratio * (y_power * lap_term)
        # spatial Laplacian only (no y derivative)
        lap_term = sum(
            (lap_term.diff(i, 2) for i in range(n)), start=ring.zero()
        )
        sign = -sign
    return result


def inv_laplacian_monomial_alt(k: int, m: int) -> Poly:
    """The x-integrated particular solution for n = 1.

    u1 = sum_{j=0}^{floor(m/2)} (-1)^j k!m!/((k+2j+2)!(m-2j)!) x^(k+2j+2) y^(m-2j)
    """
    if k < 0 or m < 0:
        raise ValueError("exponents must be non-negative")
    ring = Ring(1)
    result = ring.zero()
    sign = 1
    ratio = Fraction(1)   # k!/(k+2j+2)!
    fall = Fraction(1)    # m!/(m-2j)! = m(m-1)...(m-2j+1)
    for j in range(m // 2 + 1):
        ratio *= Fraction(1, (k + 2 * j + 1) * (k + 2 * j + 2))
        result = result + Poly.monomial(
            ring.nvars, (k + 2 * j + 2, m - 2 * j), sign * ratio * fall
        )
        fall *= (m - 2 * j) * (m - 2 * j - 1)
        sign = -sign
    return result


def inv_laplacian(P: Poly, n: int) -> Poly:
    """Linear extension of the monomial formula to a full polynomial."""
    ring = Ring(n)
    if P.nvars != ring.nvars:
        raise ValueError(
            f"right-hand side must live in the {ring.nvars}-variable ring x1..x{n}, y"
        )
    result = ring.zero()
    for exp, coeff in P.terms.items():
        k, m = exp[:n], exp[n]
        result = result + coeff * inv_laplacian_monomial(k, m, n)
    return result
