"""Exact Laurent polynomial arithmetic in one variable.

A Laurent polynomial is stored as a dict mapping integer exponents (possibly
negative) to nonzero Fraction coefficients; the zero polynomial is the empty
dict.  All arithmetic is exact: coefficients are arbitrary-precision
rationals, so identity tests are fully reliable.

The module also provides classes truncated at u^2 = 0 (`SurfaceClass`), which
model restrictions to a 2-dimensional fixed component: every such class is
P(t) + Q(t) u with u the positive degree-2 generator of the surface, and the
relation u^2 = 0 makes the product rule

    (P1 + Q1 u)(P2 + Q2 u) = P1 P2 + (P1 Q2 + P2 Q1) u.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]


class LaurentPoly:
    """Laurent polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Rational] | None = None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    clean[int(exp)] = c
        object.__setattr__(self, "_coeffs", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def term(coeff: Rational, exp: int = 0) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    # -- inspection --------------------------------------------------------

    def items(self):
        return self._coeffs.items()

    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Largest exponent; undefined on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("the zero Laurent polynomial has no degree")
        return max(self._coeffs)

    @property
    def valuation(self) -> int:
        """Smallest exponent; undefined on the zero polynomial."""
        if not self._coeffs:
            raise ValueError("the zero Laurent polynomial has no valuation")
        return min(self._coeffs)

    def is_polynomial(self) -> bool:
        """True when no negative exponent occurs."""
        return all(e >= 0 for e in self._coeffs)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def is_integral(self) -> bool:
        """True for elements of Z[t]: integer coefficients, no negative powers."""
        return self.is_polynomial() and self.has_integer_coefficients()

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, Fraction(0)) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other: "LaurentPoly | Rational") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    def __rmul__(self, other: Rational) -> "LaurentPoly":
        return self.scale(other)

    def scale(self, factor: Rational) -> "LaurentPoly":
        factor = Fraction(factor)
        return LaurentPoly({e: c * factor for e, c in self._coeffs.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers: invert a monomial explicitly")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_by_monomial(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division by a monomial c*t^k, c != 0."""
        if divisor.is_zero() or not divisor.is_monomial():
            raise ZeroDivisionError("divisor must be a nonzero monomial c*t^k")
        ((exp, coeff),) = divisor._coeffs.items()
        return LaurentPoly({e - exp: c / coeff for e, c in self._coeffs.items()})

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    # -- rendering -----------------------------------------------------------

    def render(self, var: str = "t") -> str:
        """Human-readable form, exponents ascending, e.g. '1 + 6t + 11t^2'."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for exp in sorted(self._coeffs):
            c = self._coeffs[exp]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                power = var if exp == 1 else f"{var}^{exp}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._coeffs.items()))!r})"


T = LaurentPoly.term(1, 1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


def t_power(exp: int, coeff: Rational = 1) -> LaurentPoly:
    return LaurentPoly.term(coeff, exp)


@dataclass(frozen=True)
class SurfaceClass:
    """Class P + Q*u on a surface, truncated at u^2 = 0."""

    p_part: LaurentPoly
    q_part: LaurentPoly

    @staticmethod
    def constant(value: Rational) -> "SurfaceClass":
        return SurfaceClass(LaurentPoly.term(value), ZERO)

    def __add__(self, other: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(self.p_part + other.p_part, self.q_part + other.q_part)

    def __sub__(self, other: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(self.p_part - other.p_part, self.q_part - other.q_part)

    def __mul__(self, other: "SurfaceClass | LaurentPoly | Rational") -> "SurfaceClass":
        if isinstance(other, (int, Fraction)):
            return SurfaceClass(self.p_part.scale(other), self.q_part.scale(other))
        if isinstance(other, LaurentPoly):
            return SurfaceClass(self.p_part * other, self.q_part * other)
        # u^2 = 0 kills the q*q cross term
        return SurfaceClass(
            self.p_part * other.p_part,
            self.p_part * other.q_part + other.p_part * self.q_part,
        )

    def __rmul__(self, other: Rational) -> "SurfaceClass":
        return self * other

    def __pow__(self, n: int) -> "SurfaceClass":
        result = SurfaceClass.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return self.p_part.is_zero() and self.q_part.is_zero()

    def render(self, var: str = "t") -> str:
        if self.q_part.is_zero():
            return self.p_part.render(var)
        q = self.q_part.render(var)
        if self.p_part.is_zero():
            return f"({q})u"
        return f"{self.p_part.render(var)} + ({q})u"

    def __str__(self) -> str:
        return self.render()


def elementary_symmetric(k: int, values: Iterable[int]) -> int:
    """k-th elementary symmetric polynomial of an integer multiset.

    Computed by the standard one-pass recurrence e_j <- e_j + v * e_{j-1}.
    """
    vals = list(values)
    if k < 0 or k > len(vals):
        raise ValueError(f"sigma_{k} undefined on a multiset of size {len(vals)}")
    e = [0] * (k + 1)
    e[0] = 1
    for v in vals:
        for j in range(min(k, len(e) - 1), 0, -1):
            e[j] += v * e[j - 1]
    return e[k]


def euler_class(normal: Iterable[tuple[int, int]]) -> SurfaceClass:
    """Equivariant Euler class of a surface normal bundle.

    The bundle splits into line bundles with classes xi_j*t + a_j*u, so the
    Euler class is their product, truncated at u^2 = 0.
    """
    result = SurfaceClass.constant(1)
    for xi, a in normal:
        if xi == 0:
            raise ValueError("normal bundle weights must be nonzero")
        result = result * SurfaceClass(LaurentPoly.term(xi, 1), LaurentPoly.term(a))
    return result


def surface_inverse_euler(normal: Iterable[tuple[int, int]]) -> SurfaceClass:
    """Inverse of the equivariant Euler class of a surface normal bundle.

    With xi_j the nonzero weights and a_j the degrees of the line-bundle
    summands, the Euler class is (prod xi_j t) * (1 + (u/t) sum a_j/xi_j);
    inverting the second factor with u^2 = 0 gives

        1/e = (1 - (u/t) sum a_j/xi_j) / (prod xi_j * t^m),   m = #weights.
    """
    pairs = list(normal)
    if not pairs:
        raise ValueError("surface normal bundle needs at least one weight")
    prod = 1
    ratio_sum = Fraction(0)
    for xi, a in pairs:
        if xi == 0:
            raise ValueError("normal bundle weights must be nonzero")
        prod *= xi
        ratio_sum += Fraction(a, xi)
    m = len(pairs)
    return SurfaceClass(
        LaurentPoly.term(Fraction(1, prod), -m),
        LaurentPoly.term(-ratio_sum / prod, -m - 1),
    )
