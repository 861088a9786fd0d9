"""Input documents: JSON ingestion and serialization of fixed-point data.

Exact rationals travel as strings ("p/q") or integers; floating-point
literals are rejected outright so no input can silently lose exactness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .fixeddata import (
    FixedPointData,
    IsolatedFixedPoint,
    SurfaceFixedComponent,
)
from .multigraph import GraphEdge, GraphVertex, LabeledMultigraph

FORMAT_VERSION = "1"

_COMPONENT_FIELDS = {
    "point": {"kind", "id", "phi", "weights"},
    "surface": {"kind", "id", "phi", "genus", "normal", "area"},
}
_TOP_FIELDS = {"version", "half_dim", "components", "edges"}


class InputError(ValueError):
    """Malformed input document; message carries location or component id."""


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: expected exact rational, got boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InputError(f"{where}: floating-point literals are not exact; use \"p/q\"")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise InputError(f"{where}: cannot parse rational {value!r}") from err
    raise InputError(f"{where}: expected exact rational, got {type(value).__name__}")


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected integer, got {value!r}")
    return value


@dataclass(frozen=True)
class InputDocument:
    version: str
    data: FixedPointData
    edges: tuple[tuple[str, str, int], ...] = ()

    def multigraph(self) -> LabeledMultigraph | None:
        if not self.edges:
            return None
        by_phi = sorted(self.data.components, key=lambda c: (c.phi, c.id))
        vertices = tuple(
            GraphVertex(c.id, c.phi, c.index) for c in by_phi
        )
        graph_edges = tuple(GraphEdge(a, b, l) for a, b, l in self.edges)
        return LabeledMultigraph(vertices, graph_edges)


def parse_input(text: str, strict: bool = False) -> InputDocument:
    """Parse a JSON document into fixed-point data.

    Syntax errors surface with line and column; semantic errors name the
    offending component.  Strict mode rejects unknown fields.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(
            f"syntax error at line {err.lineno}, column {err.colno}: {err.msg}"
        ) from err
    if not isinstance(raw, Mapping):
        raise InputError("top level must be an object")
    if strict:
        unknown = set(raw) - _TOP_FIELDS
        if unknown:
            raise InputError(f"unknown top-level fields: {', '.join(sorted(unknown))}")
    version = str(raw.get("version", FORMAT_VERSION))
    half_dim = _int(raw.get("half_dim"), "half_dim")
    comps_raw = raw.get("components")
    if not isinstance(comps_raw, list) or not comps_raw:
        raise InputError("components must be a nonempty list")

    components = []
    for record in comps_raw:
        if not isinstance(record, Mapping):
            raise InputError("each component must be an object")
        cid = record.get("id")
        if not isinstance(cid, str) or not cid:
            raise InputError("component without a string id")
        kind = record.get("kind", "point")
        if kind not in _COMPONENT_FIELDS:
            raise InputError(f"component {cid}: unknown kind {kind!r}")
        if strict:
            unknown = set(record) - _COMPONENT_FIELDS[kind]
            if unknown:
                raise InputError(
                    f"component {cid}: unknown fields {', '.join(sorted(unknown))}"
                )
        phi = _rational(record.get("phi"), f"component {cid}: phi")
        try:
            if kind == "point":
                weights = record.get("weights")
                if not isinstance(weights, list):
                    raise InputError(f"component {cid}: weights must be a list")
                components.append(
                    IsolatedFixedPoint(
                        cid, phi, tuple(_int(w, f"component {cid}: weight") for w in weights)
                    )
                )
            else:
                normal_raw = record.get("normal")
                if not isinstance(normal_raw, list):
                    raise InputError(f"component {cid}: normal must be a list of pairs")
                normal = []
                for pair in normal_raw:
                    if not isinstance(pair, list) or len(pair) != 2:
                        raise InputError(
                            f"component {cid}: normal entries must be [weight, degree]"
                        )
                    normal.append(
                        (
                            _int(pair[0], f"component {cid}: normal weight"),
                            _int(pair[1], f"component {cid}: normal degree"),
                        )
                    )
                area = record.get("area")
                components.append(
                    SurfaceFixedComponent(
                        cid,
                        phi,
                        _int(record.get("genus", 0), f"component {cid}: genus"),
                        tuple(normal),
                        None if area is None else _rational(area, f"component {cid}: area"),
                    )
                )
        except ValueError as err:
            if isinstance(err, InputError):
                raise
            raise InputError(str(err)) from err

    try:
        data = FixedPointData(half_dim, tuple(components))
    except ValueError as err:
        raise InputError(str(err)) from err

    edges: list[tuple[str, str, int]] = []
    for edge in raw.get("edges", []) or []:
        if not isinstance(edge, list) or len(edge) != 3:
            raise InputError("edges must be [min_id, max_id, length] triples")
        a, b, l = edge
        if not isinstance(a, str) or not isinstance(b, str):
            raise InputError("edge endpoints must be component ids")
        edges.append((a, b, _int(l, "edge length")))
    doc = InputDocument(version, data, tuple(edges))
    if edges:
        graph = doc.multigraph()
        assert graph is not None
    return doc


def _fraction_json(value: Fraction) -> Any:
    return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def serialize_input(doc: InputDocument) -> str:
    """Inverse of parse_input on valid documents (stable key order)."""
    components = []
    for comp in doc.data.components:
        if isinstance(comp, IsolatedFixedPoint):
            components.append(
                {
                    "kind": "point",
                    "id": comp.id,
                    "phi": _fraction_json(comp.phi),
                    "weights": list(comp.weights),
                }
            )
        else:
            record = {
                "kind": "surface",
                "id": comp.id,
                "phi": _fraction_json(comp.phi),
                "genus": comp.genus,
                "normal": [[x, a] for x, a in comp.normal],
            }
            if comp.area is not None:
                record["area"] = _fraction_json(comp.area)
            components.append(record)
    payload: dict[str, Any] = {
        "version": doc.version,
        "half_dim": doc.data.half_dim,
        "components": components,
    }
    if doc.edges:
        payload["edges"] = [[a, b, l] for a, b, l in doc.edges]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
