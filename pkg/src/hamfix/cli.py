"""Command-line interface.

Subcommands:
  verify     run every applicable check on an input file; exit 0 iff all pass
  classify   full classification verdict for a four-point input file
  enumerate  classify all candidate multigraphs within a length bound
  builtin    emit input documents for the built-in standard actions
  lemmas     brute-force verification of the structural lemmas up to a bound
  ellipsoid  the exact volume ratio from the embedding question

Exit codes: 0 on success/pass, 1 on check failure or bad input data,
2 on usage errors.  Reports go to standard output (or --out) as text,
or JSON with --format json.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import IO

from . import classifier, report
from .consistency import ellipsoid_volume_ratio
from .io import InputError, parse_input, serialize_input, InputDocument
from .multigraph import (
    verify_multigraph_lemma,
    verify_simple_lemma,
    verify_twoedges_lemma,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamfix",
        description="Exact fixed-point data toolkit for Hamiltonian circle actions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io_flags(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", type=Path, default=None, help="write the report to a file")

    p_verify = sub.add_parser("verify", help="run all applicable checks on an input file")
    p_verify.add_argument("file", type=Path)
    p_verify.add_argument("--strict", action="store_true", help="reject unknown fields")
    add_io_flags(p_verify)

    p_classify = sub.add_parser("classify", help="classify four-point fixed data")
    p_classify.add_argument("file", type=Path)
    p_classify.add_argument("--strict", action="store_true")
    add_io_flags(p_classify)

    p_enum = sub.add_parser("enumerate", help="classify all candidates within a bound")
    p_enum.add_argument("--max-weight", type=int, required=True)
    p_enum.add_argument("--mode", choices=("simple", "multi"), default="multi")
    add_io_flags(p_enum)

    p_builtin = sub.add_parser("builtin", help="emit a built-in input document")
    builtin_sub = p_builtin.add_subparsers(dest="family", required=True)
    p_cp3 = builtin_sub.add_parser("cp3", help="projective-space circle subgroup")
    p_cp3.add_argument("--m", type=int, required=True)
    p_cp3.add_argument("--n", type=int, required=True)
    p_cp3.add_argument("--k", type=int, required=True)
    p_cp3.add_argument("--out", type=Path, default=None)
    p_gras = builtin_sub.add_parser("gras", help="plane-Grassmannian circle subgroup")
    p_gras.add_argument("--m", type=int, required=True)
    p_gras.add_argument("--n", type=int, required=True)
    p_gras.add_argument("--out", type=Path, default=None)
    p_family = builtin_sub.add_parser(
        "family", help="the four-point family {1,2,3},{1,-1,l},{1,-1,-l},{-1,-2,-3}"
    )
    p_family.add_argument("--l", type=int, required=True)
    p_family.add_argument("--out", type=Path, default=None)

    p_lemmas = sub.add_parser("lemmas", help="brute-force lemma verification")
    group = p_lemmas.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--tech-graph",
        type=int,
        metavar="B",
        help="length relations on simple complete graphs, lengths up to B",
    )
    group.add_argument(
        "--techmult",
        type=int,
        metavar="B",
        help="shape list for non-simple multigraphs, lengths up to B",
    )
    group.add_argument(
        "--twoedges",
        type=int,
        metavar="B",
        help="parallel-edge modular facts, parameters up to B",
    )
    add_io_flags(p_lemmas)

    p_ell = sub.add_parser("ellipsoid", help="volume ratio for the embedding question")
    p_ell.add_argument("--l", type=int, required=True)
    add_io_flags(p_ell)

    return parser


@dataclass
class _Out:
    stream: IO[str]
    path: Path | None

    def emit(self, text: str):
        if self.path is not None:
            self.path.write_text(text, encoding="utf-8")
        else:
            self.stream.write(text)


def _load(path: Path, strict: bool) -> InputDocument:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}") from err
    return parse_input(text, strict=strict)


def _cmd_verify(args, out: _Out) -> int:
    doc = _load(args.file, args.strict)
    evidence, invariants = classifier.verify_data(doc.data, doc.multigraph())
    payload = report.verify_report(doc.data, evidence, invariants)
    out.emit(report.render(payload, args.format))
    return 0 if payload["passed"] else 1


def _cmd_classify(args, out: _Out) -> int:
    doc = _load(args.file, args.strict)
    try:
        verdict = classifier.classify(doc.data, doc.multigraph(), collect_all=True)
    except ValueError as err:
        raise InputError(str(err)) from err
    payload = report.verdict_report(doc.data, verdict)
    out.emit(report.render(payload, args.format))
    return 0 if verdict.consistent else 1


def _cmd_enumerate(args, out: _Out) -> int:
    if args.max_weight < 1:
        raise InputError("--max-weight must be positive")
    results = classifier.enumerate_and_classify(args.max_weight, args.mode)
    payload = report.enumeration_report(results, args.max_weight, args.mode)
    out.emit(report.render(payload, args.format))
    return 0


def _cmd_builtin(args, out: _Out) -> int:
    if args.family == "cp3":
        data = classifier.cp3_data(args.m, args.n, args.k)
    elif args.family == "gras":
        data = classifier.gras_data(args.m, args.n)
    else:
        data = classifier.multiedge_family_data(args.l)
    out.emit(serialize_input(InputDocument("1", data)))
    return 0


def _cmd_lemmas(args, out: _Out) -> int:
    if args.tech_graph is not None:
        name, sweep = "simple-graph relations", verify_simple_lemma(args.tech_graph)
    elif args.techmult is not None:
        name, sweep = "multigraph shapes", verify_multigraph_lemma(args.techmult)
    else:
        name, sweep = "parallel-edge facts", verify_twoedges_lemma(args.twoedges)
    payload = {
        "lemma": name,
        "checked": sweep.checked,
        "hypothesis_satisfying": sweep.hypothesis_count,
        "counterexamples": list(sweep.counterexamples),
        "summary": f"{len(sweep.counterexamples)} counterexamples / "
        f"{sweep.hypothesis_count} hypothesis-satisfying cases",
    }
    out.emit(report.render(payload, args.format))
    return 0 if sweep.passed else 1


def _cmd_ellipsoid(args, out: _Out) -> int:
    try:
        ratio = ellipsoid_volume_ratio(args.l)
    except ValueError as err:
        raise InputError(str(err)) from err
    payload = {"l": args.l, "volume_ratio": report.frac_str(Fraction(ratio))}
    if args.format == "json":
        out.emit(report.render(payload, "json"))
    else:
        out.emit(f"{payload['volume_ratio']}\n")
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "builtin": _cmd_builtin,
    "lemmas": _cmd_lemmas,
    "ellipsoid": _cmd_ellipsoid,
}


def run_command(argv: list[str], stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Parse argv, run the subcommand, and return the exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(stdout, getattr(args, "out", None))
    try:
        return _COMMANDS[args.command](args, out)
    except InputError as err:
        stderr.write(f"error: {err}\n")
        return 1
    except Exception as err:  # never crash on malformed input
        stderr.write(f"internal error: {err}\n")
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
