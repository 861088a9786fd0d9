"""Exact evaluation of circle-equivariant localization integrals.

A cohomology class is represented by its restrictions to the fixed
components: a Laurent polynomial in t at an isolated point, a `SurfaceClass`
P + Q*u at a fixed surface.  The push-forward of a class to a point (the
localization integral) is the exact sum

    point p:    restriction / (Lambda_p * t^n)
    surface S:  u-coefficient of restriction * (1 / euler class of N_S)

and is returned as a Laurent polynomial, never numerically approximated.
For realizable data the sum of a class of degree < 2n is exactly zero;
non-vanishing is how candidate data gets rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .fixeddata import FixedPointData, IsolatedFixedPoint, SurfaceFixedComponent
from .laurent import (
    ONE,
    LaurentPoly,
    SurfaceClass,
    elementary_symmetric,
    surface_inverse_euler,
)

Restriction = Union[LaurentPoly, SurfaceClass]


@dataclass(frozen=True)
class EquivariantClass:
    """A class known through its restrictions to the fixed components."""

    restrictions: dict[str, Restriction]
    degree: int

    def at(self, comp_id: str) -> Restriction:
        return self.restrictions[comp_id]

    def _combine(self, other: "EquivariantClass", op) -> "EquivariantClass":
        if set(self.restrictions) != set(other.restrictions):
            raise ValueError("classes restrict to different fixed sets")
        return EquivariantClass(
            {cid: op(r, other.restrictions[cid]) for cid, r in self.restrictions.items()},
            self.degree,
        )

    def __add__(self, other: "EquivariantClass") -> "EquivariantClass":
        if self.degree != other.degree:
            raise ValueError("cannot add classes of different degree")
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "EquivariantClass") -> "EquivariantClass":
        if self.degree != other.degree:
            raise ValueError("cannot subtract classes of different degree")
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other: "EquivariantClass | int | Fraction") -> "EquivariantClass":
        if isinstance(other, (int, Fraction)):
            return EquivariantClass(
                {cid: r * other for cid, r in self.restrictions.items()}, self.degree
            )
        combined = self._combine(other, lambda a, b: a * b)
        return EquivariantClass(combined.restrictions, self.degree + other.degree)

    def __rmul__(self, other):
        return self * other


def unit_class(data: FixedPointData) -> EquivariantClass:
    restr: dict[str, Restriction] = {}
    for comp in data:
        if isinstance(comp, IsolatedFixedPoint):
            restr[comp.id] = ONE
        else:
            restr[comp.id] = SurfaceClass.constant(1)
    return EquivariantClass(restr, 0)


def restrict_chern(data: FixedPointData, k: int) -> EquivariantClass:
    """k-th equivariant Chern class, restricted componentwise.

    At a point with weights xi_1..xi_n this is sigma_k(xi) t^k.  At a surface
    with normal weights xi_j and degrees a_j it is the degree-2k part of
    (1 + c_1(S) u) * prod_j (1 + xi_j t + a_j u) with u^2 = 0, namely

        sigma_k(xi) t^k  +  [c_1(S) sigma_{k-1}(xi)
                             + sum_j a_j sigma_{k-1}(xi without xi_j)] t^{k-1} u.
    """
    n = data.half_dim
    if k < 1 or k > n:
        raise ValueError(f"Chern index {k} out of range 1..{n}")
    restr: dict[str, Restriction] = {}
    for comp in data:
        if isinstance(comp, IsolatedFixedPoint):
            restr[comp.id] = LaurentPoly.term(elementary_symmetric(k, comp.weights), k)
        else:
            xis = [x for x, _ in comp.normal]
            p_part = LaurentPoly.term(elementary_symmetric(k, xis), k)
            q_coeff = comp.chern_sigma * elementary_symmetric(k - 1, xis)
            for j, (_, a) in enumerate(comp.normal):
                others = xis[:j] + xis[j + 1 :]
                q_coeff += a * elementary_symmetric(k - 1, others)
            restr[comp.id] = SurfaceClass(p_part, LaurentPoly.term(q_coeff, k - 1))
    return EquivariantClass(restr, 2 * k)


def total_chern_restrictions(data: FixedPointData) -> dict[str, Restriction]:
    """Total equivariant Chern class 1 + c_1 + ... + c_n at every component."""
    total: dict[str, Restriction] = dict(unit_class(data).restrictions)
    for k in range(1, data.half_dim + 1):
        ck = restrict_chern(data, k)
        for cid in total:
            total[cid] = total[cid] + ck.restrictions[cid]
    return total


def restrict_omega(
    data: FixedPointData, areas: Mapping[str, Fraction] | None = None
) -> EquivariantClass:
    """Equivariant extension of the symplectic class, w = [omega - phi t].

    At a point the restriction is -phi(p) t.  At a surface it is
    -phi(S) t + area * u, the area coefficient coming from `areas` or from
    the component's own stored area.
    """
    areas = dict(areas or {})
    restr: dict[str, Restriction] = {}
    for comp in data:
        lead = LaurentPoly.term(-comp.phi, 1)
        if isinstance(comp, IsolatedFixedPoint):
            restr[comp.id] = lead
        else:
            area = areas.get(comp.id, comp.area)
            if area is None:
                raise KeyError(f"surface {comp.id}: no symplectic area supplied")
            restr[comp.id] = SurfaceClass(lead, LaurentPoly.term(Fraction(area)))
    return EquivariantClass(restr, 2)


@dataclass(frozen=True)
class ChernWord:
    """Product of equivariant Chern classes and powers of the symplectic class.

    factors is a tuple of (kind, exponent) with kind "c1", "c2", ... or
    "omega"; the empty word is the unit class.
    """

    factors: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for kind, exp in self.factors:
            if exp <= 0:
                raise ValueError("factor exponents must be positive")
            if kind != "omega" and not (kind.startswith("c") and kind[1:].isdigit()):
                raise ValueError(f"unknown factor kind {kind!r}")

    @staticmethod
    def chern(k: int, exponent: int = 1) -> "ChernWord":
        return ChernWord(((f"c{k}", exponent),))

    @staticmethod
    def omega(exponent: int = 1) -> "ChernWord":
        return ChernWord((("omega", exponent),))

    @staticmethod
    def unit() -> "ChernWord":
        return ChernWord()

    def __mul__(self, other: "ChernWord") -> "ChernWord":
        return ChernWord(self.factors + other.factors)

    @property
    def degree(self) -> int:
        total = 0
        for kind, exp in self.factors:
            total += 2 * exp if kind == "omega" else 2 * int(kind[1:]) * exp
        return total

    def label(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for kind, exp in self.factors:
            parts.append(kind if exp == 1 else f"{kind}^{exp}")
        return " ".join(parts)


def word_class(
    data: FixedPointData,
    word: ChernWord,
    areas: Mapping[str, Fraction] | None = None,
) -> EquivariantClass:
    """Restriction map of a Chern word, computed factor by factor."""
    result = unit_class(data)
    for kind, exp in word.factors:
        base = (
            restrict_omega(data, areas)
            if kind == "omega"
            else restrict_chern(data, int(kind[1:]))
        )
        for _ in range(exp):
            result = result * base
    return result


def integrate_class(data: FixedPointData, cls: EquivariantClass) -> LaurentPoly:
    """Localization sum of a restriction class, as an exact Laurent polynomial."""
    n = data.half_dim
    total = LaurentPoly.zero()
    for comp in data:
        restriction = cls.restrictions[comp.id]
        if isinstance(comp, IsolatedFixedPoint):
            if not isinstance(restriction, LaurentPoly):
                raise TypeError(f"point {comp.id} carries a surface-type restriction")
            total = total + restriction.divide_by_monomial(
                LaurentPoly.term(comp.lambda_total, n)
            )
        else:
            if not isinstance(restriction, SurfaceClass):
                raise TypeError(f"surface {comp.id} carries a point-type restriction")
            # Integration over the surface extracts the u-coefficient.
            total = total + (restriction * surface_inverse_euler(comp.normal)).q_part
    return total


def abbv_integrate(
    data: FixedPointData,
    word: ChernWord,
    areas: Mapping[str, Fraction] | None = None,
) -> LaurentPoly:
    """Exact integral of a Chern word over the manifold, by localization."""
    return integrate_class(data, word_class(data, word, areas))


def chern_number(data: FixedPointData, word: ChernWord) -> Fraction:
    """Integral of a top-degree word, as a rational number.

    Raises if the localization sum is not a constant, which signals
    non-realizable data (lower-degree vanishing failed).
    """
    if word.degree != 2 * data.half_dim:
        raise ValueError("word degree must equal the manifold dimension")
    value = abbv_integrate(data, word)
    if value.is_zero():
        return Fraction(0)
    if not value.is_monomial() or value.degree != 0:
        raise ValueError(
            f"integral of {word.label()} is {value}, not a constant; "
            "data violates lower-degree vanishing"
        )
    return value.coefficient(0)


def words_below_degree(n: int, max_degree: int) -> list[ChernWord]:
    """All monomials in c_1..c_n of degree < max_degree, unit word first."""
    words: list[tuple[int, ChernWord]] = []

    def extend(prefix: tuple[tuple[str, int], ...], start_k: int, degree: int):
        words.append((degree, ChernWord(prefix)))
        for k in range(start_k, n + 1):
            for exp in range(1, (max_degree - 1 - degree) // (2 * k) + 1):
                extend(prefix + ((f"c{k}", exp),), k + 1, degree + 2 * k * exp)

    extend((), 1, 0)
    words.sort(key=lambda pair: (pair[0], pair[1].label()))
    return [w for _, w in words]


@dataclass(frozen=True)
class VanishingReport:
    violations: tuple[tuple[ChernWord, LaurentPoly], ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def vanishing_suite(data: FixedPointData) -> VanishingReport:
    """Integrate every Chern word of degree below 2n; collect nonzero sums."""
    bad: list[tuple[ChernWord, LaurentPoly]] = []
    for word in words_below_degree(data.half_dim, 2 * data.half_dim):
        value = abbv_integrate(data, word)
        if not value.is_zero():
            bad.append((word, value))
    return VanishingReport(tuple(bad))


def chi_y_fixed(data: FixedPointData) -> LaurentPoly:
    """Hirzebruch genus from the fixed components, as a polynomial in y.

    A point of index count lam contributes (-y)^lam; a genus-g surface
    contributes (-y)^lam (1-g)(1-y), pinned by the Euler characteristic at
    y = -1 and the Todd genus at y = 0.
    """
    total = LaurentPoly.zero()
    one_minus_y = LaurentPoly({0: 1, 1: -1})
    for comp in data:
        sign_term = LaurentPoly.term((-1) ** comp.lam, comp.lam)
        if isinstance(comp, IsolatedFixedPoint):
            total = total + sign_term
        else:
            total = total + sign_term * one_minus_y.scale(1 - comp.genus)
    return total


def chi_y_chern(data: FixedPointData) -> LaurentPoly:
    """Hirzebruch genus of a 6-manifold from its Chern numbers.

    chi_y = (1 + y - y^2 - y^3)/24 * int c1 c2 + (-y + y^2)/2 * int c3.
    The second integral is the top Chern number (the Euler characteristic
    pairing); see the package documentation for the sign conventions.
    """
    if data.half_dim != 3:
        raise ValueError("Chern-number formula for the genus is 6-dimensional only")
    c1c2 = chern_number(data, ChernWord.chern(1) * ChernWord.chern(2))
    c3 = chern_number(data, ChernWord.chern(3))
    first = LaurentPoly({0: 1, 1: 1, 2: -1, 3: -1}).scale(Fraction(c1c2, 24))
    second = LaurentPoly({1: -1, 2: 1}).scale(Fraction(c3, 2))
    return first + second
