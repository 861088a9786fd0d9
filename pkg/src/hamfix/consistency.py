"""Independent cross-checks: mod-2 characteristic classes and volume ratios.

The mod-2 check reduces the total Chern class to the total Stiefel-Whitney
class and tests it against the values allowed by the squaring operation on
the two possible mod-2 rings of a 6-manifold with unit Betti numbers.  The
volume computations back the ellipsoid-embedding discussion: a 4-dimensional
ellipsoid's volume is proportional to the product of its two parameters, so
the constant cancels from every ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cohomology import ChernVector, RingPresentation


@dataclass(frozen=True)
class Mod2Class:
    """Total class over the field with two elements: 1 + x + y + xy bits."""

    x: int
    y: int
    xy: int

    def __post_init__(self):
        for bit in (self.x, self.y, self.xy):
            if bit not in (0, 1):
                raise ValueError("mod-2 coefficients must be 0 or 1")

    def describe(self) -> str:
        parts = ["1"]
        for bit, name in ((self.x, "x"), (self.y, "y"), (self.xy, "xy")):
            if bit:
                parts.append(name)
        return " + ".join(parts)


@dataclass(frozen=True)
class WuResult:
    passed: bool
    w_class: Mod2Class
    ring_mod2: str
    reason: str = ""


def stiefel_whitney(chern: ChernVector) -> Mod2Class:
    if not chern.is_integral:
        raise ValueError("total Chern class must be integral before reducing mod 2")
    return Mod2Class(
        int(chern.c1_coeff) % 2, int(chern.c2_coeff) % 2, int(chern.c3_coeff) % 2
    )


def wu_check(ring: RingPresentation, chern: ChernVector) -> WuResult:
    """Mod-2 consistency of the total Chern class with the squaring operation.

    When the ring coefficient c in x^2 = c y is odd, the mod-2 ring is
    Z2[x]/(x^4); Sq(x^2) has no room in degree 6 and the reduced total class
    must be trivial.  When c is even, the mod-2 ring is Z2[x,y]/(x^2, y^2)
    and Sq(y) is 0 or xy, so the reduced class must be 1 or 1 + x.
    """
    if not ring.is_integral:
        raise ValueError("ring coefficient must be integral before reducing mod 2")
    w = stiefel_whitney(chern)
    c_odd = ring.kind == "truncated_power" or int(ring.c) % 2 == 1
    if c_odd:
        ring_mod2 = "Z2[x]/(x^4)"
        allowed = (Mod2Class(0, 0, 0),)
    else:
        ring_mod2 = "Z2[x,y]/(x^2, y^2)"
        allowed = (Mod2Class(0, 0, 0), Mod2Class(1, 0, 0))
    if w in allowed:
        return WuResult(True, w, ring_mod2)
    options = " or ".join(a.describe() for a in allowed)
    return WuResult(False, w, ring_mod2, f"w = {w.describe()} not among {options}")


def ellipsoid_volume_ratio(l: int) -> Fraction:
    """Volume of E(2, 2l) over volume of E((6+l)/3, (6+l)/2).

    With volume proportional to the parameter product this is
    4l / ((6+l)^2 / 6) = 24 l / (6+l)^2.
    """
    if l < 1:
        raise ValueError("parameter must be a positive integer")
    return Fraction(24 * l, (6 + l) ** 2)


def reduced_space_classes(l: int, kappa: Fraction) -> tuple[Fraction, Fraction]:
    """Coefficients of the reduced symplectic class on the two exceptional lines.

    For a regular level kappa strictly between -l and l, the reduced class
    restricts to (6 + kappa) on one weighted line and -(l + kappa) on the
    other.
    """
    if l < 1:
        raise ValueError("parameter must be a positive integer")
    kappa = Fraction(kappa)
    if not (-l < kappa < l):
        raise ValueError(f"level {kappa} outside the open interval (-{l}, {l})")
    return (Fraction(6) + kappa, -(Fraction(l) + kappa))
