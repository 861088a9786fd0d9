"""Labeled multigraphs of isolated fixed sets and their decision procedures.

Vertices are fixed points labeled by moment value and (even) Morse index;
an edge of length k records an isotropy sphere joining its endpoints, the
minimum carrying weight k and the maximum weight -k.  The weights at a
vertex are the signed incident edge lengths padded with +1 and -1 up to the
counts forced by the index.

The module also houses the brute-force verifiers for the three structural
lemmas used by the 6-dimensional classification (edge-length triangle
relations on simple graphs, the two-parallel-edges facts, and the shape list
for non-simple graphs), plus a bounded enumerator with symmetry pruning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence

from .fixeddata import CheckReport, Violation

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
# Exchanging p0 with p3 and p1 with p2 maps pair (i, j) to (3-j, 3-i).
FLIP = {(i, j): (3 - j, 3 - i) for i, j in PAIRS}


@dataclass(frozen=True)
class GraphVertex:
    id: str
    phi: Fraction
    index: int

    def __post_init__(self):
        object.__setattr__(self, "phi", Fraction(self.phi))
        if self.index < 0 or self.index % 2:
            raise ValueError(f"vertex {self.id}: index must be even and nonnegative")


@dataclass(frozen=True)
class GraphEdge:
    min_vertex: str
    max_vertex: str
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("edge length must be a positive integer")


@dataclass(frozen=True)
class LabeledMultigraph:
    vertices: tuple[GraphVertex, ...]
    edges: tuple[GraphEdge, ...]

    def __post_init__(self):
        phi = {v.id: v.phi for v in self.vertices}
        if len(phi) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        for e in self.edges:
            if e.min_vertex not in phi or e.max_vertex not in phi:
                raise ValueError(f"edge {e} references unknown vertex")
            if not phi[e.min_vertex] < phi[e.max_vertex]:
                raise ValueError(
                    f"edge {e.min_vertex}-{e.max_vertex}: minimum must have smaller phi"
                )

    def vertex(self, vid: str) -> GraphVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def edges_between(self, a: str, b: str) -> tuple[GraphEdge, ...]:
        return tuple(
            e
            for e in self.edges
            if {e.min_vertex, e.max_vertex} == {a, b}
        )


def standard_vertices(n: int = 3) -> tuple[GraphVertex, ...]:
    """Index-ordered vertices p0..pn with phi 0..n (only the order matters)."""
    return tuple(GraphVertex(f"p{i}", Fraction(i), 2 * i) for i in range(n + 1))


def graph_from_lengths(
    lengths: Mapping[tuple[int, int], Sequence[int]], n: int = 3
) -> LabeledMultigraph:
    """Build a 4-vertex multigraph from {(i, j): [lengths]} with i < j."""
    verts = standard_vertices(n)
    edges = []
    for (i, j), ls in sorted(lengths.items()):
        for l in sorted(ls, reverse=True):
            edges.append(GraphEdge(f"p{i}", f"p{j}", l))
    return LabeledMultigraph(verts, tuple(edges))


def _pair_lengths(g: LabeledMultigraph) -> dict[tuple[int, int], tuple[int, ...]]:
    pos = {v.id: k for k, v in enumerate(sorted(g.vertices, key=lambda v: v.phi))}
    out: dict[tuple[int, int], list[int]] = {}
    for e in g.edges:
        key = (pos[e.min_vertex], pos[e.max_vertex])
        out.setdefault(key, []).append(e.length)
    return {k: tuple(sorted(v, reverse=True)) for k, v in out.items()}


def weights_from_graph(g: LabeledMultigraph, n: int) -> dict[str, tuple[int, ...]]:
    """Weight multisets at every vertex: signed edge lengths plus padding.

    A vertex of index 2*lam takes -l for each incident edge below it and +l
    for each edge above it, then -1 and +1 entries fill up to lam negative
    and n - lam positive weights.  Raises when the edge counts exceed those
    bounds.
    """
    weights: dict[str, list[int]] = {v.id: [] for v in g.vertices}
    for e in g.edges:
        weights[e.min_vertex].append(e.length)
        weights[e.max_vertex].append(-e.length)
    out: dict[str, tuple[int, ...]] = {}
    for v in g.vertices:
        lam = v.index // 2
        negs = [w for w in weights[v.id] if w < 0]
        poss = [w for w in weights[v.id] if w > 0]
        if len(negs) > lam:
            raise ValueError(f"vertex {v.id}: {len(negs)} downward edges exceed index count {lam}")
        if len(poss) > n - lam:
            raise ValueError(
                f"vertex {v.id}: {len(poss)} upward edges exceed bound {n - lam}"
            )
        padded = negs + [-1] * (lam - len(negs)) + poss + [1] * (n - lam - len(poss))
        out[v.id] = tuple(sorted(padded))
    return out


def _mod_multiset(values: Iterable[int], modulus: int) -> tuple[int, ...]:
    return tuple(sorted(v % modulus for v in values))


def check_compatibility(g: LabeledMultigraph, n: int = 3) -> CheckReport:
    """Endpoint weights of every edge must agree modulo its length."""
    weights = weights_from_graph(g, n)
    bad: list[Violation] = []
    for e in g.edges:
        if e.length == 1:
            continue
        w_min = _mod_multiset(weights[e.min_vertex], e.length)
        w_max = _mod_multiset(weights[e.max_vertex], e.length)
        if w_min != w_max:
            bad.append(
                Violation(
                    "edge-compatibility",
                    f"{e.min_vertex}-{e.max_vertex} (length {e.length})",
                    f"weights {weights[e.min_vertex]} vs {weights[e.max_vertex]} "
                    f"differ mod {e.length}",
                )
            )
    return CheckReport("edge-compatibility", tuple(bad))


def check_pairprime(g: LabeledMultigraph) -> CheckReport:
    """Edges sharing both endpoints must have pairwise coprime lengths."""
    bad: list[Violation] = []
    for (i, j), lengths in sorted(_pair_lengths(g).items()):
        for a, b in itertools.combinations(lengths, 2):
            if gcd(a, b) != 1:
                bad.append(
                    Violation(
                        "pairwise-coprime",
                        f"p{i}-p{j}",
                        f"parallel edges of lengths {a} and {b} share a factor",
                    )
                )
    return CheckReport("pairwise-coprime", tuple(bad))


# ---------------------------------------------------------------------------
# Two parallel edges: the modular facts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoEdgesResult:
    hypothesis_holds: bool
    applicable: tuple[str, ...]
    violated: tuple[str, ...]


def _two_edges_hypothesis(l: int, lp: int, x: int, y: int) -> bool:
    top = (l, lp, x)
    bottom = (-l, -lp, y)
    return all(
        _mod_multiset(top, m) == _mod_multiset(bottom, m) for m in (l, lp) if m > 1
    )


def twoedges_facts(l: int, lp: int, x: int, y: int) -> TwoEdgesResult:
    """Check the facts forced on a vertex pair joined by two parallel edges.

    The endpoints carry weights {l, lp, x} and {-l, -lp, y}; when these agree
    modulo both lengths, each of the following must hold:

      (i)   for lp != 1: 2*lp != 0, x != y, x = -lp, and y = lp, all mod l;
      (ii)  for l >= x > 0: lp = 2 = l - x with x, y odd, or lp = 1 = l - x,
            or lp = 1 and x = l  (mirror: the same with x, y replaced by
            -y, -x);
      (iii) for l >= y > 0: lp = 2 = y with l odd, or lp = 1 = y, or lp = 1
            and l = 2 = y  (mirror likewise).

    Returns which facts applied and which failed; a failure would be a
    counterexample to the lemma, so `violated` must come back empty.
    """
    if gcd(l, lp) != 1:
        raise ValueError("edge lengths must be relatively prime")
    if not l >= lp >= 1:
        raise ValueError("expected l >= lp >= 1")
    if not _two_edges_hypothesis(l, lp, x, y):
        return TwoEdgesResult(False, (), ())

    applicable: list[str] = []
    violated: list[str] = []

    def record(name: str, ok: bool):
        applicable.append(name)
        if not ok:
            violated.append(name)

    if lp != 1:
        ok = (
            (2 * lp) % l != 0
            and x % l != y % l
            and (x + lp) % l == 0
            and (y - lp) % l == 0
        )
        record("i", ok)

    def fact_ii(xx: int, yy: int) -> bool:
        return (
            (lp == 2 and l - xx == 2 and xx % 2 == 1 and yy % 2 == 1)
            or (lp == 1 and l - xx == 1)
            or (lp == 1 and xx == l)
        )

    def fact_iii(yy: int) -> bool:
        return (
            (lp == 2 and yy == 2 and l % 2 == 1)
            or (lp == 1 and yy == 1)
            or (lp == 1 and l == 2 and yy == 2)
        )

    if l >= x > 0:
        record("ii", fact_ii(x, y))
    if l >= -y > 0:
        record("ii-mirror", fact_ii(-y, -x))
    if l >= y > 0:
        record("iii", fact_iii(y))
    if l >= -x > 0:
        record("iii-mirror", fact_iii(-x))

    return TwoEdgesResult(True, tuple(applicable), tuple(violated))


# ---------------------------------------------------------------------------
# Simple complete graphs: length relations
# ---------------------------------------------------------------------------

SIMPLE_ORDER = ((0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3))


def complete_graph_weights(lengths: Mapping[tuple[int, int], int]) -> list[tuple[int, ...]]:
    """Weights at the four vertices of a fully labeled complete graph."""
    out = []
    for i in range(4):
        row = []
        for k in range(4):
            if k == i:
                continue
            key = (min(i, k), max(i, k))
            row.append(lengths[key] if k > i else -lengths[key])
        out.append(tuple(sorted(row)))
    return out


def simple_hypothesis_holds(lengths: Mapping[tuple[int, int], int]) -> bool:
    weights = complete_graph_weights(lengths)
    for i, j in PAIRS:
        l = lengths[(i, j)]
        if l == 1:
            continue
        if _mod_multiset(weights[i], l) != _mod_multiset(weights[j], l):
            return False
    return True


@dataclass(frozen=True)
class SimpleGraphResult:
    hypothesis_holds: bool
    cases: tuple[str, ...]

    @property
    def case(self) -> str | None:
        return self.cases[0] if self.cases else None


def classify_simple(lengths: Mapping[tuple[int, int], int]) -> SimpleGraphResult:
    """Which of the three length-relation shapes a complete labeling satisfies.

    (a) l02 <= l01 + l12, l13 <= l12 + l23, l03 <= l01 + l13, l03 <= l02 + l23;
    (b) l01 = l23, l02 <= l12 + l03, l13 <= l12 + l03, l03 <= l01 + l12;
    (c) l02 = l13 and l03 <= l12.

    When the modular hypothesis holds, at least one shape must; cases are
    reported in (a), (b), (c) order.
    """
    L = {key: int(lengths[key]) for key in PAIRS}
    if any(v < 1 for v in L.values()):
        raise ValueError("edge lengths must be positive")
    if not simple_hypothesis_holds(L):
        return SimpleGraphResult(False, ())
    cases = []
    if (
        L[(0, 2)] <= L[(0, 1)] + L[(1, 2)]
        and L[(1, 3)] <= L[(1, 2)] + L[(2, 3)]
        and L[(0, 3)] <= L[(0, 1)] + L[(1, 3)]
        and L[(0, 3)] <= L[(0, 2)] + L[(2, 3)]
    ):
        cases.append("a")
    if (
        L[(0, 1)] == L[(2, 3)]
        and L[(0, 2)] <= L[(1, 2)] + L[(0, 3)]
        and L[(1, 3)] <= L[(1, 2)] + L[(0, 3)]
        and L[(0, 3)] <= L[(0, 1)] + L[(1, 2)]
    ):
        cases.append("b")
    if L[(0, 2)] == L[(1, 3)] and L[(0, 3)] <= L[(1, 2)]:
        cases.append("c")
    return SimpleGraphResult(True, tuple(cases))


def lengths_from_tuple(values: Sequence[int]) -> dict[tuple[int, int], int]:
    """Six lengths in the order l01, l12, l23, l02, l13, l03."""
    if len(values) != 6:
        raise ValueError("expected six edge lengths")
    return dict(zip(SIMPLE_ORDER, values))


# ---------------------------------------------------------------------------
# Non-simple multigraphs: shape classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultigraphResult:
    status: str  # "x", "y", "z", "assumption-violation", or "counterexample"
    flipped: bool = False
    detail: str = ""


def _flip_pair_lengths(
    pairs: Mapping[tuple[int, int], tuple[int, ...]]
) -> dict[tuple[int, int], tuple[int, ...]]:
    return {FLIP[key]: value for key, value in pairs.items()}


def _match_shape(pairs: Mapping[tuple[int, int], tuple[int, ...]]) -> str | None:
    cleaned = {k: tuple(sorted(v, reverse=True)) for k, v in pairs.items() if v}
    keys = set(cleaned)
    if keys == {(0, 3)} and cleaned[(0, 3)] == (3, 2):
        return "x"
    if (
        keys == {(0, 3), (1, 2)}
        and cleaned[(0, 3)] == (3, 2)
        and len(cleaned[(1, 2)]) == 1
    ):
        return "x"
    if (
        keys == {(1, 2), (0, 1), (2, 3), (0, 3)}
        and len(cleaned[(1, 2)]) == 2
        and cleaned[(1, 2)][1] == 2
        and cleaned[(1, 2)][0] % 2 == 1
        and cleaned[(0, 1)] == (2,)
        and cleaned[(2, 3)] == (2,)
        and cleaned[(0, 3)] == (2,)
    ):
        return "y"
    if (
        keys == {(0, 3), (0, 2), (2, 3)}
        and cleaned[(0, 3)] == (4,)
        and cleaned[(0, 2)] == (3, 2)
        and cleaned[(2, 3)] == (2,)
    ):
        return "z"
    return None


def classify_multigraph(g: LabeledMultigraph, n: int = 3) -> MultigraphResult:
    """Match a non-simple multigraph against the three admissible shapes.

    The assumptions checked first: the graph is non-simple with no length-1
    edge, the per-vertex edge counts respect the index bounds, endpoint
    weights agree modulo every edge length, and parallel edges are coprime.
    A graph passing all of them must match shape (x), (y) or (z), up to the
    p0<->p3, p1<->p2 exchange.
    """
    pairs = _pair_lengths(g)
    if all(len(v) < 2 for v in pairs.values()):
        return MultigraphResult("assumption-violation", detail="graph is simple")
    if any(l == 1 for v in pairs.values() for l in v):
        return MultigraphResult("assumption-violation", detail="length-1 edge present")
    prime = check_pairprime(g)
    if not prime:
        return MultigraphResult("assumption-violation", detail=str(prime.violations[0]))
    try:
        compat = check_compatibility(g, n)
    except ValueError as err:
        return MultigraphResult("assumption-violation", detail=str(err))
    if not compat:
        return MultigraphResult("assumption-violation", detail=str(compat.violations[0]))

    direct = _match_shape(pairs)
    if direct:
        return MultigraphResult(direct)
    flipped = _match_shape(_flip_pair_lengths(pairs))
    if flipped:
        return MultigraphResult(flipped, flipped=True)
    return MultigraphResult("counterexample", detail=f"unmatched shape {sorted(pairs.items())}")


# ---------------------------------------------------------------------------
# Bounded enumeration with symmetry pruning
# ---------------------------------------------------------------------------


def _canonical_key(counts: Mapping[tuple[int, int], tuple[int, ...]]) -> tuple:
    return tuple(sorted((k, v) for k, v in counts.items() if v))


def _is_canonical(pairs: dict[tuple[int, int], tuple[int, ...]]) -> bool:
    return _canonical_key(pairs) <= _canonical_key(_flip_pair_lengths(pairs))


def _edge_count_vectors(n: int = 3) -> Iterator[dict[tuple[int, int], int]]:
    caps = {(i, j): min(j, n - i) for i, j in PAIRS}
    ranges = [range(caps[p] + 1) for p in PAIRS]
    for combo in itertools.product(*ranges):
        counts = dict(zip(PAIRS, combo))
        ok = True
        for v in range(4):
            down = sum(c for (i, j), c in counts.items() if j == v)
            up = sum(c for (i, j), c in counts.items() if i == v)
            if down > v or up > n - v:
                ok = False
                break
        if ok:
            yield counts


def _coprime_tuples(count: int, max_length: int) -> list[tuple[int, ...]]:
    """Strictly decreasing pairwise-coprime length tuples drawn from [2, max]."""
    if count == 0:
        return [()]
    out = []
    for combo in itertools.combinations(range(max_length, 1, -1), count):
        if all(gcd(a, b) == 1 for a, b in itertools.combinations(combo, 2)):
            out.append(combo)
    return out


def enumerate_graphs(
    n: int, max_length: int, mode: str
) -> Iterator[LabeledMultigraph]:
    """Stream the candidate multigraphs on 4 index-ordered vertices.

    mode "simple": complete-graph labelings with all six lengths in
    [1, max_length] (length-1 edges standing in for absent ones).
    mode "multi": graphs with at least one parallel pair, all lengths in
    [2, max_length], index-bounded edge counts and coprime parallel edges.
    Both streams are deduplicated up to the p0<->p3, p1<->p2 exchange.
    """
    if n != 3:
        raise ValueError("enumeration is specific to half_dim 3")
    if mode == "simple":
        if max_length < 1:
            raise ValueError("max_length must be at least 1")
        for values in itertools.product(range(1, max_length + 1), repeat=6):
            lengths = lengths_from_tuple(values)
            pairs = {k: (v,) for k, v in lengths.items()}
            if _is_canonical(pairs):
                yield graph_from_lengths(pairs)
        return
    if mode != "multi":
        raise ValueError(f"unknown mode {mode!r}")
    if max_length < 2:
        return
    tuples_cache: dict[int, list[tuple[int, ...]]] = {}
    for counts in _edge_count_vectors(n):
        if max(counts.values()) < 2:
            continue
        per_pair = []
        for pair in PAIRS:
            c = counts[pair]
            if c not in tuples_cache:
                tuples_cache[c] = _coprime_tuples(c, max_length)
            per_pair.append(tuples_cache[c])
        yield from _assign_lengths(counts, per_pair, n)


def _assign_lengths(
    counts: Mapping[tuple[int, int], int],
    per_pair: Sequence[list[tuple[int, ...]]],
    n: int,
) -> Iterator[LabeledMultigraph]:
    """Depth-first length assignment with early modular pruning.

    After each pair is filled, every edge whose two endpoints have all their
    incident pairs decided is checked for modular compatibility, so dead
    branches are cut before the full product is expanded.
    """
    active = [pair for pair in PAIRS if counts[pair]]
    incident = {
        v: [pair for pair in active if v in pair] for v in range(4)
    }
    # Pairs checkable after step k: both endpoints' incident pairs all assigned.
    assigned_after: dict[tuple[int, int], int] = {}
    for pair in active:
        last = max(active.index(q) for v in pair for q in incident[v])
        assigned_after[pair] = last
    check_at: dict[int, list[tuple[int, int]]] = {}
    for pair, step in assigned_after.items():
        check_at.setdefault(step, []).append(pair)

    choices: dict[tuple[int, int], tuple[int, ...]] = {}

    def weights_at(v: int) -> list[int]:
        lam = v
        signed: list[int] = []
        for i, j in incident[v]:
            for l in choices[(i, j)]:
                signed.append(l if v == i else -l)
        negs = [w for w in signed if w < 0]
        poss = [w for w in signed if w > 0]
        return negs + [-1] * (lam - len(negs)) + poss + [1] * (n - lam - len(poss))

    def descend(step: int) -> Iterator[LabeledMultigraph]:
        if step == len(active):
            pairs = {pair: choices[pair] for pair in active}
            if _is_canonical(pairs):
                yield graph_from_lengths(pairs)
            return
        pair = active[step]
        options = per_pair[PAIRS.index(pair)]
        for lengths in options:
            choices[pair] = lengths
            ok = True
            for i, j in check_at.get(step, ()):
                wi, wj = weights_at(i), weights_at(j)
                for l in choices[(i, j)]:
                    if _mod_multiset(wi, l) != _mod_multiset(wj, l):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                yield from descend(step + 1)
        del choices[pair]

    yield from descend(0)


# ---------------------------------------------------------------------------
# Brute-force lemma verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaSweep:
    checked: int
    hypothesis_count: int
    counterexamples: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_simple_lemma(bound: int) -> LemmaSweep:
    """Every hypothesis-satisfying 6-tuple in [1, bound]^6 matches a shape."""
    checked = 0
    satisfied = 0
    bad: list[str] = []
    for values in itertools.product(range(1, bound + 1), repeat=6):
        checked += 1
        result = classify_simple(lengths_from_tuple(values))
        if not result.hypothesis_holds:
            continue
        satisfied += 1
        if not result.cases:
            bad.append(f"lengths {values}")
    return LemmaSweep(checked, satisfied, tuple(bad))


def verify_multigraph_lemma(bound: int) -> LemmaSweep:
    """Every admissible non-simple multigraph matches shape (x), (y) or (z)."""
    checked = 0
    satisfied = 0
    bad: list[str] = []
    for g in enumerate_graphs(3, bound, "multi"):
        checked += 1
        result = classify_multigraph(g)
        if result.status == "assumption-violation":
            continue
        satisfied += 1
        if result.status == "counterexample":
            bad.append(result.detail)
    return LemmaSweep(checked, satisfied, tuple(bad))


def verify_twoedges_lemma(bound: int) -> LemmaSweep:
    """All modular-hypothesis quadruples within the bound satisfy the facts."""
    checked = 0
    satisfied = 0
    bad: list[str] = []
    for l in range(1, bound + 1):
        for lp in range(1, l + 1):
            if gcd(l, lp) != 1:
                continue
            for x in range(-bound, bound + 1):
                for y in range(-bound, bound + 1):
                    checked += 1
                    result = twoedges_facts(l, lp, x, y)
                    if not result.hypothesis_holds:
                        continue
                    satisfied += 1
                    if result.violated:
                        bad.append(f"(l={l}, l'={lp}, x={x}, y={y}): {result.violated}")
    return LemmaSweep(checked, satisfied, tuple(bad))
