"""Canonical equivariant basis, ring presentation, and Chern data.

For an action whose fixed set is one isolated point per index count
0..n with pairwise distinct weight sums Gamma, equivariant cohomology is a
free module over Z[t] on classes alpha_0..alpha_n built from powers of
c_1 - Gamma t:

    alpha_i|_{p_k} = N_i * prod_{j<i} (Gamma_k - Gamma_j)/(Gamma_i - Gamma_j) * t^i.

Two sign conventions for N_i are in use.  The construction itself produces
N_i = Lambda^-_{p_i}, the product of negative weights at p_i (convention
"chern": it feeds the Chern-class formulas and the duality pairing).  The
published restriction tables instead normalize the diagonal entries to be
positive, N_i = |Lambda^-_{p_i}| (convention "table", the default here).
The two differ only by per-class signs, so integrality verdicts agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fixeddata import FixedPointData, IsolatedFixedPoint, Violation, CheckReport
from .laurent import LaurentPoly, elementary_symmetric
from .localization import EquivariantClass


@dataclass(frozen=True)
class BasisClass:
    index: int
    restrictions: dict[str, LaurentPoly]

    def at(self, comp_id: str) -> LaurentPoly:
        return self.restrictions[comp_id]

    def as_class(self) -> EquivariantClass:
        return EquivariantClass(dict(self.restrictions), 2 * self.index)


def _points_by_index(data: FixedPointData) -> list[IsolatedFixedPoint]:
    if not data.all_isolated:
        raise ValueError("canonical basis requires isolated fixed points only")
    pts = sorted(data.points, key=lambda p: p.lam)
    expected = list(range(data.half_dim + 1))
    if [p.lam for p in pts] != expected:
        raise ValueError(
            "canonical basis requires exactly one fixed point per index count "
            f"0..{data.half_dim}; got {[p.lam for p in pts]}"
        )
    gammas = [p.gamma for p in pts]
    if len(set(gammas)) != len(gammas):
        raise ValueError(f"weight sums must be pairwise distinct; got {gammas}")
    return pts


def canonical_basis(data: FixedPointData, convention: str = "table") -> list[BasisClass]:
    """Basis classes alpha_0..alpha_n with triangular restrictions.

    alpha_i vanishes at p_j for j < i and restricts to N_i t^i at p_i, with
    N_i fixed by `convention` ("table": positive diagonal; "chern": product
    of negative weights).
    """
    if convention not in ("table", "chern"):
        raise ValueError(f"unknown sign convention {convention!r}")
    pts = _points_by_index(data)
    gammas = [p.gamma for p in pts]
    basis: list[BasisClass] = []
    for i, p_i in enumerate(pts):
        norm = Fraction(p_i.lambda_minus)
        if convention == "table":
            norm = abs(norm)
        restr: dict[str, LaurentPoly] = {}
        for k, p_k in enumerate(pts):
            value = norm
            for j in range(i):
                value *= Fraction(gammas[k] - gammas[j], gammas[i] - gammas[j])
            restr[p_k.id] = LaurentPoly.term(value, i)
        basis.append(BasisClass(i, restr))
    return basis


def dual_basis(data: FixedPointData) -> list[BasisClass]:
    """Classes beta_{n-i} built from the reversed action, indexed so that
    entry i is the partner of alpha_i under the pairing int alpha_i beta_{n-i} = 1
    (with alpha in the "chern" convention).

    beta_{n-i} restricts to Lambda^+_{p_i} t^{n-i} * prod_{j>i}
    (Gamma_k - Gamma_j)/(Gamma_i - Gamma_j) at p_k for k <= i, and to 0 above.
    """
    pts = _points_by_index(data)
    n = data.half_dim
    gammas = [p.gamma for p in pts]
    duals: list[BasisClass] = []
    for i, p_i in enumerate(pts):
        restr: dict[str, LaurentPoly] = {}
        for k, p_k in enumerate(pts):
            value = Fraction(p_i.lambda_plus)
            for j in range(i + 1, n + 1):
                value *= Fraction(gammas[k] - gammas[j], gammas[i] - gammas[j])
            restr[p_k.id] = LaurentPoly.term(value, n - i)
        duals.append(BasisClass(n - i, restr))
    return duals


def integrality_check(basis: list[BasisClass]) -> CheckReport:
    """Every basis restriction must lie in Z[t]."""
    bad: list[Violation] = []
    for cls in basis:
        for comp_id in sorted(cls.restrictions):
            poly = cls.restrictions[comp_id]
            if not poly.is_integral():
                bad.append(
                    Violation(
                        "basis-integrality",
                        f"alpha_{cls.index}|{comp_id}",
                        f"restriction {poly} is not integral",
                    )
                )
    return CheckReport("basis-integrality", tuple(bad))


def express_in_basis(cls: EquivariantClass, basis: list[BasisClass]) -> list[LaurentPoly]:
    """Coefficients x_i in Z[t, 1/t]-span with cls = sum x_i alpha_i.

    The restriction matrix is triangular with monomial diagonal, so forward
    substitution in index order solves the system exactly; the result is
    checked against every restriction.
    """
    order = sorted(basis, key=lambda b: b.index)
    point_ids: list[str] = []
    for b in order:
        diag_candidates = [
            cid
            for cid in b.restrictions
            if cid not in point_ids and not b.restrictions[cid].is_zero()
        ]
        pivots = [
            cid
            for cid in diag_candidates
            if all(other.restrictions[cid].is_zero() for other in order if other.index > b.index)
        ]
        if not pivots:
            raise ValueError(f"no pivot component for basis index {b.index}")
        point_ids.append(sorted(pivots)[0])

    coeffs: list[LaurentPoly] = []
    for i, b in enumerate(order):
        pid = point_ids[i]
        residual = cls.restrictions[pid]
        if not isinstance(residual, LaurentPoly):
            raise TypeError("basis expansion needs point-type restrictions")
        for j in range(i):
            residual = residual - coeffs[j] * order[j].restrictions[pid]
        coeffs.append(residual.divide_by_monomial(b.restrictions[pid]))

    for cid in cls.restrictions:
        combo = LaurentPoly.zero()
        for x, b in zip(coeffs, order):
            combo = combo + x * b.restrictions[cid]
        if combo != cls.restrictions[cid]:
            raise ValueError(f"class is not in the basis span at component {cid}")
    return coeffs


def sphere_pushforward(data: FixedPointData, p_id: str, q_id: str, length: int) -> EquivariantClass:
    """Push-forward of the unit class of an isotropy sphere joining two points.

    The sphere carries weight `length` at its minimum p and -`length` at its
    maximum q; the restriction at either endpoint is the product of the
    remaining weights there times t^{n-1}, and zero elsewhere.
    """
    if length < 1:
        raise ValueError("sphere length must be positive")
    if not data.all_isolated:
        raise ValueError("sphere push-forward implemented for isolated fixed sets")
    n = data.half_dim
    restr: dict[str, LaurentPoly] = {comp.id: LaurentPoly.zero() for comp in data}
    for cid, needed in ((p_id, length), (q_id, -length)):
        point = data.component(cid)
        if not isinstance(point, IsolatedFixedPoint):
            raise ValueError(f"component {cid} is not an isolated point")
        remaining = list(point.weights)
        if needed not in remaining:
            raise ValueError(f"weight {needed} absent at {cid}")
        remaining.remove(needed)
        prod = 1
        for w in remaining:
            prod *= w
        restr[cid] = LaurentPoly.term(prod, n - 1)
    return EquivariantClass(restr, 2 * (n - 1))


@dataclass(frozen=True)
class RingPresentation:
    """Integral cohomology ring of a 6-manifold with one point per index.

    kind "truncated_power" is Z[x]/(x^4); kind "two_generator" is
    Z[x,y]/(x^2 - c y, y^2) with the listed coefficient.  For realizable
    data c is a positive integer; non-integral c is reported, not raised.
    """

    kind: str
    c: Fraction
    cube_coeff: Fraction

    @property
    def is_integral(self) -> bool:
        return self.c.denominator == 1

    def describe(self) -> str:
        if self.kind == "truncated_power":
            return "Z[x]/(x^4)"
        c = self.c
        c_str = str(c.numerator) if c.denominator == 1 else f"({c})"
        return f"Z[x,y]/(x^2 - {c_str}y, y^2)"


@dataclass(frozen=True)
class ChernVector:
    """Total Chern class coefficients: c = 1 + c1*x + c2*y + c3*xy."""

    c1_coeff: Fraction
    c2_coeff: Fraction
    c3_coeff: Fraction

    @property
    def is_integral(self) -> bool:
        return all(
            c.denominator == 1 for c in (self.c1_coeff, self.c2_coeff, self.c3_coeff)
        )

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c1_coeff, self.c2_coeff, self.c3_coeff)

    def describe(self, ring: RingPresentation | None = None) -> str:
        names = ("x", "y", "xy")
        if ring is not None and ring.kind == "truncated_power":
            names = ("x", "x^2", "x^3")
        parts = ["1"]
        for coeff, name in zip(self.coefficients(), names):
            if coeff == 0:
                continue
            if coeff == 1:
                parts.append(name)
            elif coeff == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{coeff}{name}")
        return " + ".join(parts).replace("+ -", "- ")


def ring_presentation(data: FixedPointData) -> RingPresentation:
    """Ring of the underlying manifold from the generator relations.

    With x, y, z the images of alpha_1, alpha_2, alpha_3 in ordinary
    cohomology, x^2 = c y where

        c = (Lambda^-_1)^2 (G2 - G0)(G2 - G1) / (Lambda^-_2 (G1 - G0)^2),

    and x^3 = (1/cube_coeff) z.  The ring is the truncated power ring
    exactly when c = 1 and cube_coeff = 1; otherwise y^2 = 0 presents it.
    """
    if data.half_dim != 3:
        raise ValueError("ring presentation implemented for half_dim 3 only")
    pts = _points_by_index(data)
    g = [p.gamma for p in pts]
    lm = [p.lambda_minus for p in pts]
    c = Fraction(lm[1] ** 2 * (g[2] - g[0]) * (g[2] - g[1]), lm[2] * (g[1] - g[0]) ** 2)
    cube = Fraction(lm[3], lm[1] ** 3) * Fraction(
        (g[1] - g[0]) ** 3, (g[3] - g[0]) * (g[3] - g[1]) * (g[3] - g[2])
    )
    kind = "truncated_power" if (c == 1 and cube == 1) else "two_generator"
    return RingPresentation(kind, c, cube)


def total_chern(data: FixedPointData) -> ChernVector:
    """Total Chern class in the x, y, xy generators.

    c1 = (G1 - G0)/Lambda^-_1; c2 comes from the three-term localization of
    the second equivariant Chern class; the top coefficient is n + 1 = 4.
    """
    if data.half_dim != 3:
        raise ValueError("Chern vector implemented for half_dim 3 only")
    pts = _points_by_index(data)
    g = [p.gamma for p in pts]
    lm = [p.lambda_minus for p in pts]
    s2 = [elementary_symmetric(2, p.weights) for p in pts]
    c1 = Fraction(g[1] - g[0], lm[1])
    c2 = Fraction(
        s2[0] * (g[2] - g[1]) - s2[1] * (g[2] - g[0]) + s2[2] * (g[1] - g[0]),
        (g[1] - g[0]) * lm[2],
    )
    return ChernVector(c1, c2, Fraction(4))
