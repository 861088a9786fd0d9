"""Report assembly: one structure, rendered as text or machine JSON.

All exact values are serialized as strings (never floats), keys are emitted
in sorted order, and every collection is built by deterministic iteration,
so byte-identical reports come out of repeated runs regardless of the
thread count used to produce them.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .classifier import CandidateResult, EvidenceEntry, Verdict
from .cohomology import BasisClass, ChernVector, RingPresentation
from .fixeddata import FixedPointData, IsolatedFixedPoint
from .laurent import LaurentPoly, SurfaceClass
from .localization import total_chern_restrictions


def frac_str(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def data_payload(data: FixedPointData) -> dict[str, Any]:
    components = []
    for comp in data.components:
        if isinstance(comp, IsolatedFixedPoint):
            components.append(
                {
                    "kind": "point",
                    "id": comp.id,
                    "phi": frac_str(comp.phi),
                    "weights": list(comp.weights),
                    "index": comp.index,
                    "weight_sum": comp.gamma,
                }
            )
        else:
            components.append(
                {
                    "kind": "surface",
                    "id": comp.id,
                    "phi": frac_str(comp.phi),
                    "genus": comp.genus,
                    "normal": [[x, a] for x, a in comp.normal],
                    "index": comp.index,
                    "weight_sum": comp.gamma,
                }
            )
    return {"half_dim": data.half_dim, "components": components}


def evidence_payload(evidence: Sequence[EvidenceEntry]) -> list[dict[str, Any]]:
    return [
        {"check": e.check, "status": e.status, "details": list(e.details)}
        for e in evidence
    ]


def _alpha_table_payload(basis: Sequence[BasisClass]) -> dict[str, dict[str, str]]:
    table: dict[str, dict[str, str]] = {}
    for cls in basis:
        if cls.index == 0:
            continue
        row = {
            cid: poly.render()
            for cid, poly in sorted(cls.restrictions.items())
            if not poly.is_zero()
        }
        table[f"alpha_{cls.index}"] = row
    return table


def invariants_payload(data: FixedPointData, invariants: dict[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if "betti" in invariants:
        out["betti"] = list(invariants["betti"])
    ring: RingPresentation | None = invariants.get("ring")
    if ring is not None:
        out["ring"] = ring.describe()
        out["ring_coefficient"] = frac_str(ring.c)
    chern: ChernVector | None = invariants.get("chern")
    if chern is not None:
        out["chern"] = chern.describe(ring)
        out["chern_coefficients"] = [frac_str(c) for c in chern.coefficients()]
    basis = invariants.get("alpha_table")
    if basis is not None:
        out["alpha_table"] = _alpha_table_payload(basis)
    chi = invariants.get("chi_y")
    if isinstance(chi, LaurentPoly):
        out["chi_y"] = chi.render("y")
    integrals = invariants.get("integrals")
    if integrals:
        out["integrals"] = {k: frac_str(v) for k, v in sorted(integrals.items())}
    if data.all_isolated:
        out["equivariant_chern_table"] = {
            cid: restr.render()
            for cid, restr in sorted(total_chern_restrictions(data).items())
            if isinstance(restr, LaurentPoly)
        }
    return out


def verdict_report(data: FixedPointData, verdict: Verdict) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "input": data_payload(data),
        "verdict": {
            "outcome": verdict.outcome,
            "family_params": dict(sorted(verdict.family_params.items()))
            if verdict.family_params
            else None,
        },
        "evidence": evidence_payload(verdict.evidence),
        "invariants": invariants_payload(data, verdict.invariants),
    }
    return payload


def verify_report(data: FixedPointData, evidence: Sequence[EvidenceEntry],
                  invariants: dict[str, Any]) -> dict[str, Any]:
    return {
        "input": data_payload(data),
        "passed": all(e.passed for e in evidence),
        "evidence": evidence_payload(evidence),
        "invariants": invariants_payload(data, invariants),
    }


def enumeration_report(results: Sequence[CandidateResult], max_weight: int, mode: str) -> dict[str, Any]:
    rows = []
    for r in results:
        rows.append(
            {
                "weights": [list(w) for w in r.weights],
                "edges": [list(e) for e in r.edges],
                "outcome": r.verdict.outcome,
                "first_failure": next(
                    (
                        {"check": e.check, "details": list(e.details)}
                        for e in r.verdict.evidence
                        if not e.passed
                    ),
                    None,
                ),
            }
        )
    outcome_counts: dict[str, int] = {}
    for r in results:
        outcome_counts[r.verdict.outcome] = outcome_counts.get(r.verdict.outcome, 0) + 1
    return {
        "mode": mode,
        "max_weight": max_weight,
        "candidates": len(results),
        "outcomes": dict(sorted(outcome_counts.items())),
        "survivors": [row for row in rows if row["outcome"] != "inconsistent"],
        "excluded": [row for row in rows if row["outcome"] == "inconsistent"],
    }


def to_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _text_lines(payload: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(payload, dict):
        for key in payload:
            value = payload[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(value, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(value)}")
    else:
        lines.append(f"{pad}{_scalar(payload)}")
    return lines


def _scalar(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, dict)):
        return "(empty)"
    return str(value)


def to_text(payload: dict[str, Any]) -> str:
    return "\n".join(_text_lines(payload)) + "\n"


def render(payload: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return to_json(payload)
    if fmt == "text":
        return to_text(payload)
    raise ValueError(f"unknown format {fmt!r}")
