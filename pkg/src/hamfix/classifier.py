"""End-to-end classification of 6-dimensional isolated fixed-point data.

Given four fixed points, one per index count, the pipeline runs the order
checks, the modular compatibility of the induced isotropy multigraph, the
full vanishing suite, the basis / sphere-class / ring integrality filters,
the genus consistency and the mod-2 check, then matches the surviving
weight system against the standard families:

    A: circle subgroups acting on complex projective 3-space,
    B: circle subgroups acting on the oriented 2-plane Grassmannian of R^5,
    C/D: the two exceptional four-point systems with weight lists
         {1,2,3}, {1,-1,l}, {1,-1,-l}, {-1,-2,-3} at l = 4 and 5.

A structured Verdict records every check outcome, so exclusions are
machine-checkable and survivors carry their full passing evidence chain.
The module also evaluates the localization identities for the fixed-set
shapes that contain surfaces, and the 4-dimensional Euler-number solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cohomology import (
    ChernVector,
    RingPresentation,
    canonical_basis,
    express_in_basis,
    integrality_check,
    ring_presentation,
    sphere_pushforward,
    total_chern,
)
from .consistency import wu_check
from .fixeddata import (
    CheckReport,
    FixedPointData,
    IsolatedFixedPoint,
    SurfaceFixedComponent,
    betti_numbers,
    check_gamma_order,
    check_index_bound,
    check_index_order,
)
from .laurent import LaurentPoly
from .localization import (
    ChernWord,
    abbv_integrate,
    chern_number,
    chi_y_chern,
    chi_y_fixed,
    vanishing_suite,
)
from .multigraph import (
    GraphEdge,
    GraphVertex,
    LabeledMultigraph,
    check_compatibility,
    check_pairprime,
    weights_from_graph,
    enumerate_graphs,
)
from ._parallel import parallel_map


# ---------------------------------------------------------------------------
# Built-in fixed-point data
# ---------------------------------------------------------------------------


def cp3_weights(m: int, n: int, k: int) -> list[tuple[int, ...]]:
    """Fixed-point weights of the projective-space action with exponents
    0, m, m+n, m+n+k, listed by index count."""
    return [
        tuple(sorted((m, m + n, m + n + k))),
        tuple(sorted((-m, n, n + k))),
        tuple(sorted((-m - n, -n, k))),
        tuple(sorted((-m - n - k, -n - k, -k))),
    ]


def gras_weights(m: int, n: int) -> list[tuple[int, ...]]:
    """Fixed-point weights of the Grassmannian action with parameters m < n."""
    return [
        tuple(sorted((n - m, n, n + m))),
        tuple(sorted((m, m + n, m - n))),
        tuple(sorted((-m, n - m, -m - n))),
        tuple(sorted((-n, m - n, -m - n))),
    ]


def _point_data(weights: Sequence[tuple[int, ...]], phis: Sequence[Fraction]) -> FixedPointData:
    points = tuple(
        IsolatedFixedPoint(f"p{i}", Fraction(phi), w)
        for i, (w, phi) in enumerate(zip(weights, phis))
    )
    return FixedPointData(3, points)


def cp3_data(m: int, n: int, k: int) -> FixedPointData:
    if min(m, n, k) < 1:
        raise ValueError("exponent gaps must be positive")
    return _point_data(cp3_weights(m, n, k), (0, m, m + n, m + n + k))


def gras_data(m: int, n: int) -> FixedPointData:
    if not (1 <= m < n):
        raise ValueError("parameters must satisfy 1 <= m < n")
    return _point_data(gras_weights(m, n), (-n, -m, m, n))


def multiedge_family_data(l: int) -> FixedPointData:
    """The four-point family {1,2,3}, {1,-1,l}, {1,-1,-l}, {-1,-2,-3}.

    For l < 6 the moment values -6, -l, l, 6 of the normalized picture are
    used; for l >= 6 those collide or invert, so plain increasing values
    stand in (the checks only consume the order).
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    weights = [
        (1, 2, 3),
        tuple(sorted((1, -1, l))),
        tuple(sorted((1, -1, -l))),
        (-3, -2, -1),
    ]
    phis = (-6, -l, l, 6) if l < 6 else (0, 1, 2, 3)
    return _point_data(weights, phis)


def case_c_data() -> FixedPointData:
    return multiedge_family_data(4)


def case_d_data() -> FixedPointData:
    return multiedge_family_data(5)


# ---------------------------------------------------------------------------
# Family templates
# ---------------------------------------------------------------------------


def _weights_by_index(data: FixedPointData) -> list[tuple[int, ...]]:
    pts = sorted(data.points, key=lambda p: p.lam)
    if not data.all_isolated or [p.lam for p in pts] != [0, 1, 2, 3]:
        raise ValueError(
            "classification needs four isolated fixed points, one per index count"
        )
    return [tuple(sorted(p.weights)) for p in pts]


def match_family(weights: Sequence[tuple[int, ...]]) -> tuple[str, dict[str, int]] | None:
    """Match a weight system against the standard families, or return None."""
    w0 = weights[0]
    # A family: bottom weights are m, m+n, m+n+k.
    m, n, k = w0[0], w0[1] - w0[0], w0[2] - w0[1]
    if m >= 1 and n >= 1 and k >= 1 and list(weights) == cp3_weights(m, n, k):
        return ("A", {"m": m, "n": n, "k": k})
    # B family: bottom weights are n-m, n, n+m.
    bn = w0[1]
    bm = w0[2] - w0[1]
    if bm >= 1 and bn > bm and list(weights) == gras_weights(bm, bn):
        return ("B", {"m": bm, "n": bn})
    if weights[0] == (1, 2, 3) and weights[3] == (-3, -2, -1):
        for l, outcome in ((4, "C"), (5, "D")):
            if (
                weights[1] == tuple(sorted((1, -1, l)))
                and weights[2] == tuple(sorted((1, -1, -l)))
            ):
                return (outcome, {"l": l})
    return None


# ---------------------------------------------------------------------------
# Induced isotropy multigraphs
# ---------------------------------------------------------------------------


def induced_multigraphs(data: FixedPointData) -> list[LabeledMultigraph]:
    """All isotropy-sphere edge sets consistent with the weights.

    Each weight k >= 2 at a point must pair with a weight -k at a point of
    larger moment value; the pairing is a perfect matching for every length.
    Matchings that would put two parallel edges of equal length on one pair
    are discarded (their lengths could not be coprime).
    """
    pts = sorted(data.points, key=lambda p: p.lam)
    by_length: dict[int, tuple[list[int], list[int]]] = {}
    for idx, p in enumerate(pts):
        for w in p.weights:
            if abs(w) >= 2:
                slot = by_length.setdefault(abs(w), ([], []))
                slot[0 if w > 0 else 1].append(idx)
    per_length: dict[int, list[tuple[tuple[int, int], ...]]] = {}
    for length, (sources, sinks) in sorted(by_length.items()):
        if len(sources) != len(sinks):
            return []
        seen: set[tuple[tuple[int, int], ...]] = set()
        for perm in itertools.permutations(sinks):
            if any(s >= t for s, t in zip(sources, perm)):
                continue
            pairing = tuple(sorted(zip(sources, perm)))
            if len(set(pairing)) != len(pairing):
                continue  # equal-length parallel edges can never be coprime
            seen.add(pairing)
        if not seen:
            return []
        per_length[length] = sorted(seen)

    graphs: list[LabeledMultigraph] = []
    seen_graphs: set[tuple] = set()
    lengths = sorted(per_length)
    for combo in itertools.product(*(per_length[l] for l in lengths)):
        pair_map: dict[tuple[int, int], list[int]] = {}
        for length, pairing in zip(lengths, combo):
            for i, j in pairing:
                pair_map.setdefault((i, j), []).append(length)
        key = tuple(sorted((k, tuple(sorted(v))) for k, v in pair_map.items()))
        if key in seen_graphs:
            continue
        seen_graphs.add(key)
        vertices = tuple(
            GraphVertex(f"p{i}", pts[i].phi, 2 * i) for i in range(4)
        )
        edges = tuple(
            GraphEdge(f"p{i}", f"p{j}", l)
            for (i, j), ls in sorted(pair_map.items())
            for l in sorted(ls, reverse=True)
        )
        graphs.append(LabeledMultigraph(vertices, edges))
    return graphs


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvidenceEntry:
    check: str
    status: str  # "pass", "violation", or "error"
    details: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "A", "B", "C", "D", or "inconsistent"
    family_params: dict[str, int] | None
    evidence: tuple[EvidenceEntry, ...]
    invariants: dict[str, object] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.outcome != "inconsistent"

    def entry(self, check: str) -> EvidenceEntry | None:
        for e in self.evidence:
            if e.check == check:
                return e
        return None


def _report_entry(report: CheckReport) -> EvidenceEntry:
    if report.passed:
        return EvidenceEntry(report.check, "pass")
    return EvidenceEntry(
        report.check, "violation", tuple(str(v) for v in report.violations)
    )


def _graph_summary(g: LabeledMultigraph) -> str:
    parts = [f"{e.min_vertex}-{e.max_vertex}:{e.length}" for e in g.edges if e.length > 1]
    return "{" + ", ".join(parts) + "}"


def classify(
    data: FixedPointData,
    graph: LabeledMultigraph | None = None,
    collect_all: bool = False,
) -> Verdict:
    """Full verdict for four isolated fixed points, one per index count.

    When `graph` is supplied (for example by the enumerator) its edge set is
    taken as the isotropy multigraph; otherwise every pairing consistent
    with the weights is considered and the data passes if some pairing does.
    With collect_all the pipeline keeps evaluating after a failure so that
    every exclusion witness is recorded.
    """
    weights = _weights_by_index(data)
    evidence: list[EvidenceEntry] = []
    invariants: dict[str, object] = {"betti": betti_numbers(data)}
    failed = False

    def push(entry: EvidenceEntry) -> bool:
        nonlocal failed
        evidence.append(entry)
        if not entry.passed:
            failed = True
        return not failed or collect_all

    for report in (check_index_order(data), check_index_bound(data), check_gamma_order(data)):
        if not push(_report_entry(report)):
            return Verdict("inconsistent", None, tuple(evidence), invariants)

    graphs = [graph] if graph is not None else induced_multigraphs(data)
    if not graphs:
        push(EvidenceEntry("isotropy-matching", "violation",
                           ("no pairing of weights k with -k respects the moment order",)))
        if not collect_all:
            return Verdict("inconsistent", None, tuple(evidence), invariants)
    compatible_graphs: list[LabeledMultigraph] = []
    compat_details: list[str] = []
    for g in graphs:
        prime = check_pairprime(g)
        try:
            compat = check_compatibility(g, data.half_dim)
        except ValueError as err:
            compat_details.append(f"{_graph_summary(g)}: {err}")
            continue
        if prime.passed and compat.passed:
            compatible_graphs.append(g)
        else:
            bad = list(prime.violations) + list(compat.violations)
            compat_details.append(f"{_graph_summary(g)}: {bad[0]}")
    if graphs:
        if compatible_graphs:
            push(EvidenceEntry("edge-compatibility", "pass",
                               (f"matching {_graph_summary(compatible_graphs[0])}",)))
        else:
            if not push(EvidenceEntry("edge-compatibility", "violation", tuple(compat_details))):
                return Verdict("inconsistent", None, tuple(evidence), invariants)

    vanishing = vanishing_suite(data)
    if vanishing.passed:
        push(EvidenceEntry("vanishing", "pass"))
    else:
        details = tuple(
            f"integral of {w.label()} = {value}" for w, value in vanishing.violations
        )
        if not push(EvidenceEntry("vanishing", "violation", details)):
            return Verdict("inconsistent", None, tuple(evidence), invariants)

    basis = None
    try:
        basis = canonical_basis(data)
        report = integrality_check(basis)
        entry = _report_entry(report)
        invariants["alpha_table"] = basis
    except ValueError as err:
        entry = EvidenceEntry("basis-integrality", "error", (str(err),))
    if not push(entry):
        return Verdict("inconsistent", None, tuple(evidence), invariants)

    if basis is not None and compatible_graphs:
        sphere_entry = _sphere_check(data, basis, compatible_graphs)
        if not push(sphere_entry):
            return Verdict("inconsistent", None, tuple(evidence), invariants)
    elif basis is not None and graph is not None:
        # A pinned graph that failed compatibility still gets its sphere verdict.
        sphere_entry = _sphere_check(data, basis, [graph])
        if not push(sphere_entry):
            return Verdict("inconsistent", None, tuple(evidence), invariants)

    ring = chern = None
    try:
        ring = ring_presentation(data)
        chern = total_chern(data)
        invariants["ring"] = ring
        invariants["chern"] = chern
        if ring.is_integral and chern.is_integral:
            entry = EvidenceEntry("ring-integrality", "pass")
        else:
            entry = EvidenceEntry(
                "ring-integrality",
                "violation",
                (f"ring coefficient {ring.c}, chern {chern.coefficients()}",),
            )
    except ValueError as err:
        entry = EvidenceEntry("ring-integrality", "error", (str(err),))
    if not push(entry):
        return Verdict("inconsistent", None, tuple(evidence), invariants)

    try:
        fixed_side = chi_y_fixed(data)
        chern_side = chi_y_chern(data)
        invariants["chi_y"] = fixed_side
        if fixed_side == chern_side:
            entry = EvidenceEntry("genus-consistency", "pass")
        else:
            entry = EvidenceEntry(
                "genus-consistency",
                "violation",
                (f"fixed-point side {fixed_side.render('y')}, "
                 f"Chern side {chern_side.render('y')}",),
            )
    except ValueError as err:
        entry = EvidenceEntry("genus-consistency", "error", (str(err),))
    if not push(entry):
        return Verdict("inconsistent", None, tuple(evidence), invariants)

    if ring is not None and chern is not None and ring.is_integral and chern.is_integral:
        wu = wu_check(ring, chern)
        entry = EvidenceEntry(
            "mod2-consistency",
            "pass" if wu.passed else "violation",
            () if wu.passed else (wu.reason,),
        )
    else:
        entry = EvidenceEntry("mod2-consistency", "error", ("ring or Chern data not integral",))
    if not push(entry):
        return Verdict("inconsistent", None, tuple(evidence), invariants)

    if failed:
        return Verdict("inconsistent", None, tuple(evidence), invariants)

    match = match_family(weights)
    if match is None:
        evidence.append(
            EvidenceEntry("family-match", "violation",
                          ("passes all filters but matches no standard family",))
        )
        return Verdict("inconsistent", None, tuple(evidence), invariants)
    outcome, params = match
    evidence.append(EvidenceEntry("family-match", "pass", (f"case {outcome} {params}",)))
    try:
        invariants["integrals"] = {
            "c1c2": chern_number(data, ChernWord.chern(1) * ChernWord.chern(2)),
            "c3": chern_number(data, ChernWord.chern(3)),
            "c1^3": chern_number(data, ChernWord.chern(1, 3)),
        }
    except ValueError:
        pass
    return Verdict(outcome, params, tuple(evidence), invariants)


def _sphere_check(
    data: FixedPointData,
    basis,
    graphs: Sequence[LabeledMultigraph],
) -> EvidenceEntry:
    """Sphere push-forward classes must be integral combinations of the basis
    for at least one admissible edge set."""
    failures: list[str] = []
    for g in graphs:
        bad: str | None = None
        for e in g.edges:
            if e.length < 2:
                continue
            gamma = sphere_pushforward(data, e.min_vertex, e.max_vertex, e.length)
            coeffs = express_in_basis(gamma, basis)
            if not all(c.is_integral() for c in coeffs):
                rendered = ", ".join(str(c) for c in coeffs)
                bad = (
                    f"{_graph_summary(g)}: sphere {e.min_vertex}-{e.max_vertex} "
                    f"(length {e.length}) has coefficients [{rendered}]"
                )
                break
        if bad is None:
            return EvidenceEntry("sphere-class", "pass", (f"matching {_graph_summary(g)}",))
        failures.append(bad)
    return EvidenceEntry("sphere-class", "violation", tuple(failures))


def verify_data(
    data: FixedPointData, graph: LabeledMultigraph | None = None
) -> tuple[tuple[EvidenceEntry, ...], dict[str, object]]:
    """Every check applicable to the given data, with no family matching.

    Four isolated points (one per index count) go through the full pipeline;
    surface-bearing or other shapes get the order checks, the vanishing
    suite, and the genus consistency when the dimension allows it.
    """
    try:
        verdict = classify(data, graph=graph, collect_all=True)
        evidence = tuple(e for e in verdict.evidence if e.check != "family-match")
        return evidence, dict(verdict.invariants)
    except ValueError:
        pass
    evidence: list[EvidenceEntry] = []
    invariants: dict[str, object] = {"betti": betti_numbers(data)}
    for report in (check_index_order(data), check_index_bound(data), check_gamma_order(data)):
        evidence.append(_report_entry(report))
    vanishing = vanishing_suite(data)
    if vanishing.passed:
        evidence.append(EvidenceEntry("vanishing", "pass"))
    else:
        evidence.append(
            EvidenceEntry(
                "vanishing",
                "violation",
                tuple(f"integral of {w.label()} = {v}" for w, v in vanishing.violations),
            )
        )
    if data.half_dim == 3:
        try:
            fixed_side = chi_y_fixed(data)
            chern_side = chi_y_chern(data)
            invariants["chi_y"] = fixed_side
            if fixed_side == chern_side:
                evidence.append(EvidenceEntry("genus-consistency", "pass"))
            else:
                evidence.append(
                    EvidenceEntry(
                        "genus-consistency",
                        "violation",
                        (f"fixed-point side {fixed_side.render('y')}, "
                         f"Chern side {chern_side.render('y')}",),
                    )
                )
        except ValueError as err:
            evidence.append(EvidenceEntry("genus-consistency", "error", (str(err),)))
    return tuple(evidence), invariants


# ---------------------------------------------------------------------------
# Bounded enumeration + classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CandidateResult:
    weights: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int, int], ...]
    verdict: Verdict


def _classify_graph(g: LabeledMultigraph) -> CandidateResult:
    weight_map = weights_from_graph(g, 3)
    weights = tuple(weight_map[f"p{i}"] for i in range(4))
    data = _point_data(weights, (0, 1, 2, 3))
    verdict = classify(data, graph=g)
    edges = tuple(
        (int(e.min_vertex[1]), int(e.max_vertex[1]), e.length) for e in g.edges
    )
    return CandidateResult(weights, edges, verdict)


def enumerate_and_classify(max_weight: int, mode: str = "multi") -> list[CandidateResult]:
    """Classify every candidate multigraph within the length bound.

    Candidates are judged with their own edge set: the same weight system
    can be admissible with one isotropy pattern and excluded with another.
    """
    graphs = list(enumerate_graphs(3, max_weight, mode))
    return parallel_map(_classify_graph, graphs)


def survivors(results: Sequence[CandidateResult]) -> list[CandidateResult]:
    return [r for r in results if r.verdict.consistent]


# ---------------------------------------------------------------------------
# Surface-bearing fixed sets: localization identities
# ---------------------------------------------------------------------------


def _require(params: Mapping[str, int], *names: str) -> list[int]:
    missing = [name for name in names if name not in params]
    if missing:
        raise KeyError(f"missing parameters: {', '.join(missing)}")
    return [int(params[name]) for name in names]


def _single_residual(data: FixedPointData, word: ChernWord) -> Fraction:
    value = abbv_integrate(data, word)
    if value.is_zero():
        return Fraction(0)
    if not value.is_monomial():
        raise AssertionError(f"unexpected multi-term integral {value}")
    return value.coefficient(value.degree)


def _residual_pair(data: FixedPointData) -> list[tuple[str, Fraction]]:
    return [
        ("int_1", _single_residual(data, ChernWord.unit())),
        ("int_c1", _single_residual(data, ChernWord.chern(1))),
    ]


def verify_surface_equations(case_id: str, params: Mapping[str, int]) -> list[tuple[str, Fraction]]:
    """Exact residuals of the localization identities for one surface case.

    Case "I": minimal sphere with normal weights (m, n) and degrees (a, b),
    plus points of weights {-m,-m,l} and {-n,-n,-l}.  Case "I-common" is the
    variant where one 4-dimensional isotropy manifold contains both points:
    m = 2, n = 1, degrees (0, b), point weights {-2,-1,l} and {-2,-1,-l}.
    Case "II": point {n,n,l}, middle sphere with normal (m, a), (-n, b) and
    genus g (default 0), point {-m,-m,-l}.  Case "III": spheres at both ends
    with normals (m,a),(n,b) and (-m,c),(-n,d).

    Each equation is the localization sum of a class of degree below six,
    so a zero residual is necessary for realizability.
    """
    if case_id == "I":
        m, n, l, a, b = _require(params, "m", "n", "l", "a", "b")
        data = FixedPointData(
            3,
            (
                SurfaceFixedComponent("S0", Fraction(0), 0, ((m, a), (n, b))),
                IsolatedFixedPoint("p2", Fraction(1), tuple(sorted((-m, -m, l)))),
                IsolatedFixedPoint("p3", Fraction(2), tuple(sorted((-n, -n, -l)))),
            ),
        )
        return _residual_pair(data)
    if case_id == "I-common":
        l, b = _require(params, "l", "b")
        a = int(params.get("a", 0))
        data = FixedPointData(
            3,
            (
                SurfaceFixedComponent("S0", Fraction(0), 0, ((2, a), (1, b))),
                IsolatedFixedPoint("p2", Fraction(1), tuple(sorted((-2, -1, l)))),
                IsolatedFixedPoint("p3", Fraction(2), tuple(sorted((-2, -1, -l)))),
            ),
        )
        return _residual_pair(data)
    if case_id == "II":
        m, n, l, a, b = _require(params, "m", "n", "l", "a", "b")
        genus = int(params.get("genus", 0))
        data = FixedPointData(
            3,
            (
                IsolatedFixedPoint("p0", Fraction(0), tuple(sorted((n, n, l)))),
                SurfaceFixedComponent("S1", Fraction(1), genus, ((m, a), (-n, b))),
                IsolatedFixedPoint("p3", Fraction(2), tuple(sorted((-m, -m, -l)))),
            ),
        )
        return _residual_pair(data)
    if case_id == "III":
        m, n, a, b, c, d = _require(params, "m", "n", "a", "b", "c", "d")
        data = FixedPointData(
            3,
            (
                SurfaceFixedComponent("S0", Fraction(0), 0, ((m, a), (n, b))),
                SurfaceFixedComponent("S2", Fraction(1), 0, ((-m, c), (-n, d))),
            ),
        )
        c1 = ChernWord.chern(1)
        sq_minus = abbv_integrate(data, c1 * c1) - abbv_integrate(data, ChernWord.chern(2)) * 2
        if sq_minus.is_zero():
            third = Fraction(0)
        elif sq_minus.is_monomial():
            third = sq_minus.coefficient(sq_minus.degree)
        else:
            raise AssertionError(f"unexpected multi-term integral {sq_minus}")
        return _residual_pair(data) + [("int_c1sq_minus_2c2", third)]
    raise ValueError(f"unknown surface case {case_id!r}")


# ---------------------------------------------------------------------------
# 4-dimensional Euler-number solver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EulerSolution:
    config: str
    solved: dict[str, Fraction]
    relation: str | None = None


def _fourdim_integral_one(config: str, a: Fraction, b: Fraction, l: int) -> Fraction:
    if config == "surface+1pt":
        comps = (
            SurfaceFixedComponent("S", Fraction(0), 0, ((1, int(a)),)),
            IsolatedFixedPoint("q", Fraction(1), (-1, -1)),
        )
    elif config == "surface+2pts":
        comps = (
            SurfaceFixedComponent("S", Fraction(0), 0, ((1, int(a)),)),
            IsolatedFixedPoint("q1", Fraction(1), tuple(sorted((-1, l)))),
            IsolatedFixedPoint("q2", Fraction(2), (-l, -1)),
        )
    elif config == "surface+surface":
        comps = (
            SurfaceFixedComponent("S", Fraction(0), 0, ((1, int(a)),)),
            SurfaceFixedComponent("Sp", Fraction(1), 0, ((-1, int(b)),)),
        )
    else:
        raise ValueError(f"unknown configuration {config!r}")
    data = FixedPointData(2, comps)
    return _single_residual(data, ChernWord.unit())


def fourdim_euler_check(config: str, params: Mapping[str, int] | None = None) -> EulerSolution:
    """Solve the degree-0 localization identity for the normal Euler number.

    The integral of 1 over a 4-manifold vanishes, and it is affine in the
    unknown degrees, so two evaluations determine each coefficient exactly:
    the minimal-surface-and-one-point shape forces a = 1, the two-point
    shape forces a = 0, and two surfaces force a = -b.
    """
    params = dict(params or {})
    l = int(params.get("l", 2))
    base = _fourdim_integral_one(config, Fraction(0), Fraction(0), l)
    slope_a = _fourdim_integral_one(config, Fraction(1), Fraction(0), l) - base
    if config in ("surface+1pt", "surface+2pts"):
        if slope_a == 0:
            raise ValueError("degenerate configuration: integral independent of a")
        return EulerSolution(config, {"a": -base / slope_a})
    slope_b = _fourdim_integral_one(config, Fraction(0), Fraction(1), l) - base
    if slope_a == 0 or slope_b == 0:
        raise ValueError("degenerate configuration: integral independent of a or b")
    if base != 0:
        raise ValueError("configuration over-determined: nonzero constant term")
    ratio = -slope_b / slope_a
    label = "a = -b" if ratio == -1 else f"a = {ratio}*b"
    return EulerSolution(config, {}, relation=label)
