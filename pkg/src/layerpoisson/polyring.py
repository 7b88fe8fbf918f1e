"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a map from exponent tuples to ``Fraction`` coefficients.
Zero coefficients are never stored, so equality of polynomials is equality
of term maps.  All values are immutable and every operation is a pure
function; instances can be shared freely between threads.

Variable convention used throughout the package: the first ``n`` slots are
the spatial variables x1..xn, the next slot is the vertical variable y,
and an optional last slot holds the formal layer-width symbol ``a``.  The
``a`` slot is the only one allowed to carry a negative exponent (the
harmonic-basis families carry a single overall 1/a factor); the spatial
and vertical exponents are always non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | Iterable = ()):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        canon: dict[Exponent, Fraction] = {}
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            coeff = Fraction(coeff)
            if coeff:
                c = canon.get(exp, 0) + coeff
                if c:
                    canon[exp] = c
                else:
                    canon.pop(exp, None)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars)

    @staticmethod
    def const(nvars: int, value: Scalar) -> "Poly":
        return Poly(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def variable(nvars: int, index: int) -> "Poly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[index] = 1
        return Poly(nvars, {tuple(exp): Fraction(1)})

    @staticmethod
    def monomial(nvars: int, exp: Sequence[int], coeff: Scalar = 1) -> "Poly":
        return Poly(nvars, {tuple(exp): Fraction(coeff)})

    # -- basic predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises if non-constant)."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Max total degree over all terms; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return 0
        return max(exp[var] for exp in self.terms)

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            c = out.get(exp, 0) + coeff
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
        return _raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return _raw(self.nvars, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return Poly(self.nvars)
            return _raw(self.nvars, {exp: c * other for exp, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(i + j for i, j in zip(ea, eb))
                c = out.get(exp, 0) + ca * cb
                if c:
                    out[exp] = c
                else:
                    out.pop(exp, None)
        return _raw(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and other != 0:
            return self * (Fraction(1) / Fraction(other))
        raise TypeError("can only divide a Poly by a nonzero scalar")

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus ----------------------------------------------------------

    def diff(self, var: int, order: int = 1) -> "Poly":
        """Partial derivative of the given order with respect to one variable."""
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        if order < 0:
            raise ValueError("order must be non-negative")
        if order == 0:
            return self
        out: dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            e = exp[var]
            if e < order:
                continue
            # falling factorial e*(e-1)*...*(e-order+1)
            fall = 1
            for i in range(order):
                fall *= e - i
            new = list(exp)
            new[var] = e - order
            out[tuple(new)] = coeff * fall
        return _raw(self.nvars, out)

    def laplacian(self, n: int) -> "Poly":
        """Sum of second partials in x1..xn and y (variables 0..n)."""
        if n + 1 > self.nvars:
            raise ValueError(f"spatial dimension {n} exceeds available variables")
        out = Poly(self.nvars)
        for var in range(n + 1):
            out = out + self.diff(var, 2)
        return out

    # -- substitution / evaluation ----------------------------------------

    def subs(self, var: int, value) -> "Poly":
        """Substitute a polynomial or scalar for one variable, exactly.

        A negative exponent on the substituted variable is only allowed for
        a nonzero scalar value (the Laurent slot for the width symbol).
        """
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        if isinstance(value, (int, Fraction)):
            r = Fraction(value)
            out: dict[Exponent, Fraction] = {}
            for exp, coeff in self.terms.items():
                e = exp[var]
                if e < 0 and r == 0:
                    raise ZeroDivisionError("substituting 0 into a negative power")
                c = coeff * r ** e
                if not c:
                    continue
                new = list(exp)
                new[var] = 0
                key = tuple(new)
                c = out.get(key, 0) + c
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
            return _raw(self.nvars, out)
        value = self._coerce(value)
        if value.is_constant():
            return self.subs(var, value.constant_value())
        # group terms by the exponent of var, then expand value^e once per group
        groups: dict[int, dict[Exponent, Fraction]] = {}
        for exp, coeff in self.terms.items():
            e = exp[var]
            if e < 0:
                raise ValueError("cannot substitute a non-constant into a negative power")
            new = list(exp)
            new[var] = 0
            groups.setdefault(e, {})[tuple(new)] = coeff
        out_poly = Poly(self.nvars)
        power = Poly.const(self.nvars, 1)
        for e in range(max(groups, default=0) + 1):
            if e in groups:
                out_poly = out_poly + _raw(self.nvars, groups[e]) * power
            power = power * value
        return out_poly

    def eval(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            val = coeff
            for v, e in zip(pt, exp):
                if e:
                    val *= v ** e
            total += val
        return total

    def eval_float(self, point: Sequence[float]) -> float:
        """Floating-point value, for the numeric cross-check module only."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        total = 0.0
        for exp, coeff in self.terms.items():
            val = float(coeff)
            for v, e in zip(point, exp):
                if e:
                    val *= float(v) ** e
            total += val
        return total

    # -- canonical ordering / serialization --------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical order: graded lexicographic, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(exp), "coeff": str(coeff)}
                for exp, coeff in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Poly":
        return Poly(
            data["nvars"],
            {tuple(t["exp"]): Fraction(t["coeff"]) for t in data["terms"]},
        )

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {dict(self.sorted_terms())!r})"


def _raw(nvars: int, terms: dict[Exponent, Fraction]) -> Poly:
    """Internal constructor for already-canonical term maps."""
    p = object.__new__(Poly)
    object.__setattr__(p, "nvars", nvars)
    object.__setattr__(p, "terms", terms)
    object.__setattr__(p, "_hash", None)
    return p


def lift(p: Poly, nvars: int, positions: Sequence[int | None]) -> Poly:
    """Re-embed a polynomial into a ring with a different variable layout.

    ``positions[i]`` is the index of old variable i in the new ring, or None
    if the variable is dropped (every term must then have exponent 0 there).
    """
    if len(positions) != p.nvars:
        raise ValueError("positions must list every old variable")
    out: dict[Exponent, Fraction] = {}
    for exp, coeff in p.terms.items():
        new = [0] * nvars
        for e, pos in zip(exp, positions):
            if pos is None:
                if e != 0:
                    raise ValueError("cannot drop a variable that occurs in a term")
            else:
                new[pos] = e
        out[tuple(new)] = coeff
    return Poly(nvars, out)


@dataclass(frozen=True)
class Ring:
    """Variable layout for a layer of spatial dimension ``n``.

    Variables are x1..xn (indices 0..n-1), then y (index n), then the
    formal width symbol a (index n+1) when ``formal_a`` is set.
    """

    n: int
    formal_a: bool = False

    @property
    def nvars(self) -> int:
        return self.n + 1 + (1 if self.formal_a else 0)

    @property
    def y(self) -> int:
        return self.n

    @property
    def a(self) -> int:
        if not self.formal_a:
            raise ValueError("ring has no formal width symbol")
        return self.n + 1

    @cached_property
    def names(self) -> tuple[str, ...]:
        names = [f"x{i + 1}" for i in range(self.n)] + ["y"]
        if self.formal_a:
            names.append("a")
        return tuple(names)

    def zero(self) -> Poly:
        return Poly(self.nvars)

    def const(self, value: Scalar) -> Poly:
        return Poly.const(self.nvars, value)

    def x(self, i: int) -> Poly:
        if not 0 <= i < self.n:
            raise ValueError(f"spatial index {i} out of range for n={self.n}")
        return Poly.variable(self.nvars, i)

    def y_var(self) -> Poly:
        return Poly.variable(self.nvars, self.y)

    def a_var(self) -> Poly:
        return Poly.variable(self.nvars, self.a)

    def x_monomial(self, k: Sequence[int], coeff: Scalar = 1) -> Poly:
        """The monomial x1^k1 * ... * xn^kn."""
        if len(k) != self.n:
            raise ValueError("multi-index length must equal the spatial dimension")
        exp = list(k) + [0] * (self.nvars - self.n)
        return Poly.monomial(self.nvars, exp, coeff)


def to_text(p: Poly, names: Sequence[str]) -> str:
    """Canonical text form, e.g. ``1/20*x1^4*y^5 - 1/70*x1^2*y^7``."""
    if len(names) != p.nvars:
        raise ValueError("one name per variable required")
    if not p.terms:
        return "0"
    pieces: list[str] = []
    for i, (exp, coeff) in enumerate(p.sorted_terms()):
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exp)
            if e != 0
        )
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)


def _latex_name(name: str) -> str:
    if len(name) > 1 and name[1:].isdigit():
        return f"{name[0]}_{{{name[1:]}}}"
    return name


def to_latex(p: Poly, names: Sequence[str]) -> str:
    """LaTeX form in canonical order, nothing factored."""
    if len(names) != p.nvars:
        raise ValueError("one name per variable required")
    if not p.terms:
        return "0"
    pieces: list[str] = []
    for i, (exp, coeff) in enumerate(p.sorted_terms()):
        mono = "".join(
            _latex_name(name) if e == 1 else f"{_latex_name(name)}^{{{e}}}"
            for name, e in zip(names, exp)
            if e != 0
        )
        mag = abs(coeff)
        if mag.denominator == 1:
            coeff_tex = str(mag.numerator)
        else:
            coeff_tex = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        if not mono:
            body = coeff_tex
        elif mag == 1:
            body = mono
        else:
            body = f"{coeff_tex}{mono}"
        if i == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)
