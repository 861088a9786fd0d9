"""Fixed-point data of a Hamiltonian circle action and its validity checks.

The atomic objects are fixed components: isolated points carrying a weight
multiset, and surfaces carrying a genus plus the (weight, degree) pairs of
their normal line bundles.  A `FixedPointData` bundles the components of one
action together with the half-dimension n of the ambient manifold.

Checks return structured `CheckReport` values rather than raising: the
classification pipeline consumes violations as filters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union


@dataclass(frozen=True)
class IsolatedFixedPoint:
    id: str
    phi: Fraction
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "phi", Fraction(self.phi))
        object.__setattr__(self, "weights", tuple(sorted(self.weights)))
        if any(w == 0 for w in self.weights):
            raise ValueError(f"component {self.id}: zero weight")

    @property
    def dim(self) -> int:
        return 0

    @property
    def index(self) -> int:
        """Morse index of the moment map, twice the number of negative weights."""
        return 2 * self.lam

    @property
    def lam(self) -> int:
        return sum(1 for w in self.weights if w < 0)

    @property
    def lambda_minus(self) -> int:
        """Product of the negative weights (1 when there are none)."""
        prod = 1
        for w in self.weights:
            if w < 0:
                prod *= w
        return prod

    @property
    def lambda_plus(self) -> int:
        prod = 1
        for w in self.weights:
            if w > 0:
                prod *= w
        return prod

    @property
    def lambda_total(self) -> int:
        prod = 1
        for w in self.weights:
            prod *= w
        return prod

    @property
    def gamma(self) -> int:
        return sum(self.weights)


@dataclass(frozen=True)
class SurfaceFixedComponent:
    id: str
    phi: Fraction
    genus: int
    normal: tuple[tuple[int, int], ...]
    # Optional symplectic area coefficient [omega|_Sigma] . u; only needed
    # when integrating words that involve the extended symplectic class.
    area: Fraction | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "phi", Fraction(self.phi))
        object.__setattr__(self, "normal", tuple((int(x), int(a)) for x, a in self.normal))
        if self.genus < 0:
            raise ValueError(f"component {self.id}: negative genus")
        if any(x == 0 for x, _ in self.normal):
            raise ValueError(f"component {self.id}: zero normal weight")
        if self.area is not None:
            object.__setattr__(self, "area", Fraction(self.area))

    @property
    def dim(self) -> int:
        return 2

    @property
    def index(self) -> int:
        return 2 * self.lam

    @property
    def lam(self) -> int:
        return sum(1 for x, _ in self.normal if x < 0)

    @property
    def gamma(self) -> int:
        return sum(x for x, _ in self.normal)

    @property
    def chern_sigma(self) -> int:
        """Degree of c_1 of the surface itself, 2 - 2*genus."""
        return 2 - 2 * self.genus


FixedComponent = Union[IsolatedFixedPoint, SurfaceFixedComponent]


@dataclass(frozen=True)
class FixedPointData:
    half_dim: int
    components: tuple[FixedComponent, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        n = self.half_dim
        if n < 0:
            raise ValueError("half_dim must be nonnegative")
        if not self.components:
            raise ValueError("fixed-point data needs at least one component")
        seen: set[str] = set()
        for comp in self.components:
            if comp.id in seen:
                raise ValueError(f"duplicate component id {comp.id!r}")
            seen.add(comp.id)
            expected = n if isinstance(comp, IsolatedFixedPoint) else n - 1
            got = len(comp.weights) if isinstance(comp, IsolatedFixedPoint) else len(comp.normal)
            if got != expected:
                raise ValueError(
                    f"component {comp.id}: {got} weights, expected {expected} in half_dim {n}"
                )
        # A moment map attains its extremes on fixed components.
        if not any(c.lam == 0 for c in self.components):
            raise ValueError("no minimum: every component has a negative weight")
        if not any(c.lam + c.dim // 2 == n for c in self.components):
            raise ValueError("no maximum: every component has a positive weight")

    def __iter__(self):
        return iter(self.components)

    def component(self, comp_id: str) -> FixedComponent:
        for comp in self.components:
            if comp.id == comp_id:
                return comp
        raise KeyError(comp_id)

    @property
    def points(self) -> tuple[IsolatedFixedPoint, ...]:
        return tuple(c for c in self.components if isinstance(c, IsolatedFixedPoint))

    @property
    def all_isolated(self) -> bool:
        return all(isinstance(c, IsolatedFixedPoint) for c in self.components)

    def by_phi(self) -> tuple[FixedComponent, ...]:
        return tuple(sorted(self.components, key=lambda c: (c.phi, c.id)))


def derive_invariants(p: IsolatedFixedPoint) -> tuple[int, int, int, int]:
    """(index count, negative product, positive product, weight sum) at a point."""
    return (p.lam, p.lambda_minus, p.lambda_plus, p.gamma)


def reverse_action(data: FixedPointData) -> FixedPointData:
    """Data of the reversed circle action: weights and moment values negate.

    Line-bundle degrees and genera are unchanged; a point of index count
    lam becomes one of index count n - lam.
    """
    flipped: list[FixedComponent] = []
    for comp in data.components:
        if isinstance(comp, IsolatedFixedPoint):
            flipped.append(
                IsolatedFixedPoint(comp.id, -comp.phi, tuple(-w for w in comp.weights))
            )
        else:
            flipped.append(
                SurfaceFixedComponent(
                    comp.id,
                    -comp.phi,
                    comp.genus,
                    tuple((-x, a) for x, a in comp.normal),
                    comp.area,
                )
            )
    return FixedPointData(data.half_dim, tuple(flipped))


@dataclass(frozen=True)
class Violation:
    check: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"[{self.check}] {self.subject}: {self.message}"


@dataclass(frozen=True)
class CheckReport:
    check: str
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def check_index_order(data: FixedPointData) -> CheckReport:
    """Moment order must match index order: phi(F') < phi(F) iff lam' < lam."""
    bad: list[Violation] = []
    comps = data.components
    for i, a in enumerate(comps):
        for b in comps[i + 1 :]:
            if (a.phi < b.phi) != (a.lam < b.lam) or (b.phi < a.phi) != (b.lam < a.lam):
                bad.append(
                    Violation(
                        "index-order",
                        f"{a.id},{b.id}",
                        f"phi=({a.phi},{b.phi}) but index counts ({a.lam},{b.lam})",
                    )
                )
    return CheckReport("index-order", tuple(bad))


def check_index_bound(data: FixedPointData) -> CheckReport:
    """Each index count is at most sum(dim/2 + 1) over lower components."""
    bad: list[Violation] = []
    for comp in data.components:
        bound = sum(c.dim // 2 + 1 for c in data.components if c.phi < comp.phi)
        if comp.lam > bound:
            bad.append(
                Violation(
                    "index-bound",
                    comp.id,
                    f"index count {comp.lam} exceeds bound {bound}",
                )
            )
    return CheckReport("index-bound", tuple(bad))


def check_gamma_order(data: FixedPointData) -> CheckReport:
    """Weight sums must strictly decrease along the moment map.

    Valid only when the second real cohomology has rank one; the classifier
    applies it as a realizability filter.
    """
    bad: list[Violation] = []
    comps = data.components
    for i, a in enumerate(comps):
        for b in comps[i + 1 :]:
            if (a.gamma > b.gamma) != (a.phi < b.phi) or (b.gamma > a.gamma) != (b.phi < a.phi):
                bad.append(
                    Violation(
                        "gamma-order",
                        f"{a.id},{b.id}",
                        f"weight sums ({a.gamma},{b.gamma}) vs phi ({a.phi},{b.phi})",
                    )
                )
    return CheckReport("gamma-order", tuple(bad))


def betti_numbers(data: FixedPointData) -> tuple[int, ...]:
    """Betti numbers b_0..b_2n via the Morse-Bott splitting over components.

    A point contributes 1 in degree 2*lam; a genus-g surface contributes
    1, 2g, 1 in degrees 2*lam, 2*lam+1, 2*lam+2.
    """
    b = [0] * (2 * data.half_dim + 1)
    for comp in data.components:
        base = comp.index
        if isinstance(comp, IsolatedFixedPoint):
            b[base] += 1
        else:
            b[base] += 1
            b[base + 1] += 2 * comp.genus
            b[base + 2] += 1
    return tuple(b)
