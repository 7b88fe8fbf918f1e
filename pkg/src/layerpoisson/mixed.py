"""Harmonic basis for the mixed Dirichlet-Neumann problem in a layer.

Two polynomial families in y drive the construction, both obtained by
exact power-series division against the even series of cosh(ta):

  * p_{2m}(y), from expanding cosh(t(a-y))/cosh(ta): the basis member
    u_k = sum binom(k,2m) x^(k-2m) p_{2m}(y) takes the value x^k at y=0
    and has vanishing y-derivative at y=a.
  * q_{2m}(y), from expanding sinh(ty)/(t cosh(ta)): the basis member
    v_l = sum binom(l,2m) x^(l-2m) q_{2m}(y) vanishes at y=0 and has
    y-derivative x^l at y=a.

The division recurrences are validated by the exact generating-function
ring identities in the test suite.  The multi-index scaling for n > 1 is
the same as in the Dirichlet case (both kernels have even radial symbols)
and is covered by the harmonicity/trace oracles rather than assumed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polyring import Poly, Ring, lift
from .dirichlet import (
    AMode,
    _assemble,
    _normalize_index,
    _specialize,
    _specialize_f,
    multiindex_factor,
)

# coefficient ring (y, a); these families are honest polynomials in a
_FR = Ring(0, formal_a=True)


@lru_cache(maxsize=None)
def _d(m: int) -> Poly:
    """Division coefficient of cosh(t(a-y))/cosh(ta) at t^{2m}, ring (y, a)."""
    if m < 0:
        raise ValueError("order must be non-negative")
    a_minus_y = _FR.a_var() - _FR.y_var()
    acc = (a_minus_y ** (2 * m)) * Fraction(1, math.factorial(2 * m))
    for i in range(1, m + 1):
        apow = Poly.monomial(_FR.nvars, (0, 2 * i), Fraction(1, math.factorial(2 * i)))
        acc = acc - apow * _d(m - i)
    return acc


@lru_cache(maxsize=None)
def _e(m: int) -> Poly:
    """Division coefficient of sinh(ty)/(t cosh(ta)) at t^{2m}, ring (y, a)."""
    if m < 0:
        raise ValueError("order must be non-negative")
    acc = Poly.monomial(
        _FR.nvars, (2 * m + 1, 0), Fraction(1, math.factorial(2 * m + 1))
    )
    for i in range(1, m + 1):
        apow = Poly.monomial(_FR.nvars, (0, 2 * i), Fraction(1, math.factorial(2 * i)))
        acc = acc - apow * _e(m - i)
    return acc


@lru_cache(maxsize=None)
def _p(m: int) -> Poly:
    sign = -1 if m % 2 else 1
    return sign * math.factorial(2 * m) * _d(m)


@lru_cache(maxsize=None)
def _q(m: int) -> Poly:
    sign = -1 if m % 2 else 1
    return sign * math.factorial(2 * m) * _e(m)


def p_poly(m: int, a: AMode = None) -> Poly:
    """Value-trace family p_{2m}(y); p_0 = 1, degree 2m in y."""
    if m < 0:
        raise ValueError("order must be non-negative")
    return _specialize_f(_p(m), a)


def q_poly(m: int, a: AMode = None) -> Poly:
    """Derivative-trace family q_{2m}(y); q_0 = y, degree 2m+1 in y."""
    if m < 0:
        raise ValueError("order must be non-negative")
    return _specialize_f(_q(m), a)


def mixed_multiindex_factor(m: Sequence[int]) -> Fraction:
    """Multi-index scaling factor; identical to the Dirichlet-family factor."""
    return multiindex_factor(m)


@lru_cache(maxsize=None)
def _mixed_u_formal(k: tuple[int, ...], n: int) -> Poly:
    return _assemble(k, n, lambda m: multiindex_factor(m) * _p(sum(m)))


def mixed_basis_u(k, n: int, a: AMode = None) -> Poly:
    """Harmonic polynomial: value x^k at y=0, zero y-derivative at y=a."""
    k = _normalize_index(k, n)
    return _specialize(_mixed_u_formal(k, n), n, a)


@lru_cache(maxsize=None)
def _mixed_v_formal(l: tuple[int, ...], n: int) -> Poly:
    return _assemble(l, n, lambda m: multiindex_factor(m) * _q(sum(m)))


def mixed_basis_v(l, n: int, a: AMode = None) -> Poly:
    """Harmonic polynomial: value 0 at y=0, y-derivative x^l at y=a."""
    l = _normalize_index(l, n)
    return _specialize(_mixed_v_formal(l, n), n, a)
