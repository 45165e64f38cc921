"""Command-line interface: ``nndideals {gamma,covol,mult,nnd,family}``.

Inputs are YAML/JSON documents, a builtin example written ``@name``, or
inline generators given with ``-e "x^4+y^4, xy^2+x^2y"``.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 budget exceeded,
5 disagreement between the face and multiplicity routes.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from . import examples
from .documents import (
    format_rational,
    ideal_from_infix,
    load_family,
    load_ideal,
    polyhedron_to_dict,
)
from .errors import BudgetExceeded, NewtonError, ParseError
from .family import FamilySpec, limiting_body, mult_equals_covol_check, noetherian_report
from .geometry import CompactFace, covolume
from .monomial import MonomialIdeal
from .nnd import closure_if_nnd, compare_multiplicity, face_report
from .oracle import DEFAULT_POWER_BUDGET
from .series import IdealPresentation, format_element, newton_polyhedron
from .svg import staircase_svg

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4
EXIT_DISAGREE = 5

DEFAULT_FAMILY_BUDGET = 20


def _default_names(dim: int) -> list[str]:
    return list("xyz") if dim <= 3 else [f"x{i + 1}" for i in range(dim)]


def _read_ideal(args: argparse.Namespace) -> tuple[list[str], IdealPresentation]:
    if args.expr is not None:
        if args.input is not None:
            raise ParseError("give either an input document or -e, not both")
        return ideal_from_infix(args.expr, list(args.vars) if args.vars else None)
    if args.input is None:
        raise ParseError("no input: pass a document path, @name or -e EXPR")
    if args.input.startswith("@"):
        name = args.input[1:]
        if name not in examples.IDEALS:
            raise ParseError(f"unknown builtin ideal {name!r}; known: {', '.join(examples.IDEALS)}")
        I = examples.IDEALS[name]()
        return _default_names(I.dim), I
    if not Path(args.input).is_file():
        raise ParseError(f"no such file: {args.input}")
    return load_ideal(args.input)


def _read_family(args: argparse.Namespace) -> tuple[list[str], FamilySpec]:
    if args.input.startswith("@"):
        name = args.input[1:]
        if name not in examples.FAMILIES:
            raise ParseError(f"unknown builtin family {name!r}; known: {', '.join(examples.FAMILIES)}")
        F = examples.FAMILIES[name]()
        return _default_names(F.dim), F
    if not Path(args.input).is_file():
        raise ParseError(f"no such file: {args.input}")
    return load_family(args.input)


def _face_text(face: CompactFace) -> str:
    return str(face)


def _empty_report() -> dict[str, Any]:
    return {
        "vertices": None,
        "facets": None,
        "covol": None,
        "d_factorial_covol": None,
        "multiplicity": None,
        "nnd": None,
        "failing_faces": None,
        "family": None,
    }


def _geometry_fields(report: dict, I: IdealPresentation) -> None:
    data = polyhedron_to_dict(newton_polyhedron(I))
    report["vertices"] = data["vertices"]
    report["facets"] = data["facets"]


def _emit(args: argparse.Namespace, report: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_gamma(args: argparse.Namespace) -> int:
    names, I = _read_ideal(args)
    P = newton_polyhedron(I)
    report = _empty_report()
    _geometry_fields(report, I)
    if args.svg:
        Path(args.svg).write_text(staircase_svg(P, title=", ".join(format_element(g, names) for g in I)))
    lines = [f"ideal: ({', '.join(format_element(g, names) for g in I)})", f"Newton polyhedron: {P}", "vertices:"]
    lines += ["  (" + ", ".join(format_rational(c) for c in v) + ")" for v in P.vertices]
    lines.append("facets:")
    lines += [f"  {f}" for f in P.facets]
    if args.svg:
        lines.append(f"plot written to {args.svg}")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_covol(args: argparse.Namespace) -> int:
    names, I = _read_ideal(args)
    P = newton_polyhedron(I)
    vol = covolume(P)
    dvol = math.factorial(I.dim) * vol
    report = _empty_report()
    _geometry_fields(report, I)
    report["covol"] = format_rational(vol)
    report["d_factorial_covol"] = format_rational(dvol)
    lines = [f"Newton polyhedron: {P}", f"co-volume: {format_rational(vol)}", f"{I.dim}! * co-volume: {format_rational(dvol)}"]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_mult(args: argparse.Namespace) -> int:
    names, I = _read_ideal(args)
    cmp = compare_multiplicity(I, budget=args.budget)
    report = _empty_report()
    _geometry_fields(report, I)
    vol = cmp.d_factorial_covolume / math.factorial(I.dim)
    report["covol"] = format_rational(vol)
    report["d_factorial_covol"] = format_rational(cmp.d_factorial_covolume)
    report["multiplicity"] = cmp.multiplicity
    report["nnd"] = cmp.equal
    lines = [
        f"co-volume: {format_rational(vol)}",
        f"{I.dim}! * co-volume: {format_rational(cmp.d_factorial_covolume)}",
        f"multiplicity: {cmp.multiplicity}",
        f"verdict: {'EQUAL' if cmp.equal else 'UNEQUAL'}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_nnd(args: argparse.Namespace) -> int:
    names, I = _read_ideal(args)
    route = args.route
    if route == "auto":
        route = "face" if I.dim == 2 else "mult"
    report = _empty_report()
    _geometry_fields(report, I)
    lines: list[str] = []
    face_ok = mult_ok = None
    failing: list[CompactFace] = []
    if route in ("face", "both"):
        verdicts = face_report(I)
        face_ok = all(v.nondegenerate for v in verdicts)
        failing = [v.face for v in verdicts if not v.nondegenerate]
        lines.append("face route:")
        for v in verdicts:
            lines.append(f"  {_face_text(v.face)}: {'non-degenerate' if v.nondegenerate else 'DEGENERATE'}")
    if route in ("mult", "both"):
        cmp = compare_multiplicity(I, budget=args.budget)
        mult_ok = cmp.equal
        report["multiplicity"] = cmp.multiplicity
        report["d_factorial_covol"] = format_rational(cmp.d_factorial_covolume)
        report["covol"] = format_rational(cmp.d_factorial_covolume / math.factorial(I.dim))
        lines.append(
            f"multiplicity route: e = {cmp.multiplicity}, {I.dim}! * co-volume = "
            f"{format_rational(cmp.d_factorial_covolume)} ({'EQUAL' if cmp.equal else 'UNEQUAL'})"
        )
    if route == "both" and face_ok != mult_ok:
        report["nnd"] = None
        report["failing_faces"] = [_face_text(f) for f in failing]
        lines.append(f"ROUTES DISAGREE: face says {face_ok}, multiplicity says {mult_ok}")
        _emit(args, report, lines)
        return EXIT_DISAGREE
    ok = face_ok if face_ok is not None else mult_ok
    report["nnd"] = ok
    report["failing_faces"] = [_face_text(f) for f in failing]
    lines.append(f"verdict: {'NND' if ok else 'NOT NND'}")
    if ok:
        closure = closure_if_nnd(I, "face" if face_ok is not None else "mult", budget=args.budget)
        assert isinstance(closure, MonomialIdeal)
        report["closure"] = [list(g) for g in closure.generators]
        lines.append(f"integral closure: {closure}")
    elif failing:
        lines.append("failing faces: " + "; ".join(_face_text(f) for f in failing))
    _emit(args, report, lines)
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    names, F = _read_family(args)
    body = limiting_body(F, args.budget)
    rep = noetherian_report(F, args.budget, body)
    report = _empty_report()
    fam: dict[str, Any] = {"c": body.c, "e": None, "verdict": rep.verdict, "status": body.status}
    lines = [f"family: {F.kind}" + (f" ({F.note})" if F.note else ""), f"status: {body.status}"]
    if body.stabilized:
        check = mult_equals_covol_check(F, body.c)
        closure = body.closure
        report["vertices"] = polyhedron_to_dict(closure)["vertices"]
        report["facets"] = polyhedron_to_dict(closure)["facets"]
        report["covol"] = format_rational(check.d_factorial_covolume / math.factorial(F.dim))
        report["d_factorial_covol"] = format_rational(check.d_factorial_covolume)
        report["multiplicity"] = format_rational(check.multiplicity)
        report["nnd"] = check.nnd_certified
        report["failing_faces"] = [_face_text(f) for f in check.failing_faces]
        fam["e"] = format_rational(check.multiplicity)
        lines += [
            f"closure of the limiting body: {closure}",
            f"e = {format_rational(check.multiplicity)}",
            f"{F.dim}! * co-volume = {format_rational(check.d_factorial_covolume)}",
            f"multiplicity vs volume: {'EQUAL' if check.equal else 'UNEQUAL'}",
        ]
    else:
        records = body.record_intercepts()
        fam["intercepts"] = [[n, [None if t is None else format_rational(t) for t in row]] for n, row in records]
        lines.append("axis intercepts of the running union (n: intercepts):")
        lines += [
            f"  {n}: (" + ", ".join("-" if t is None else format_rational(t) for t in row) + ")" for n, row in records
        ]
    lines.append(f"Noetherian report: {rep.verdict} ({rep.basis})")
    report["family"] = fam
    _emit(args, report, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nndideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def ideal_cmd(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", help="ideal document (YAML/JSON) or @builtin")
        p.add_argument("-e", "--expr", help='inline generators, e.g. "x^4+y^4, xy^2+x^2y"')
        p.add_argument("--vars", help="variable letters for -e, e.g. xy (default: inferred)")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        return p

    p = ideal_cmd("gamma", "vertices and facets of the Newton polyhedron")
    p.add_argument("--svg", metavar="PATH", help="write a staircase plot (d = 2)")
    p.set_defaults(func=cmd_gamma)
    p = ideal_cmd("covol", "co-volume of the Newton polyhedron")
    p.set_defaults(func=cmd_covol)
    p = ideal_cmd("mult", "multiplicity against d! times the co-volume")
    p.add_argument("--budget", type=int, default=DEFAULT_POWER_BUDGET, help="largest power used by the oracle")
    p.set_defaults(func=cmd_mult)
    p = ideal_cmd("nnd", "Newton non-degeneracy and the integral closure")
    p.add_argument("--route", choices=["auto", "face", "mult", "both"], default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_POWER_BUDGET, help="largest power used by the oracle")
    p.set_defaults(func=cmd_nnd)
    p = sub.add_parser("family", help="limiting body, stabilization and multiplicity of a graded family")
    p.add_argument("input", help="family document (YAML/JSON) or @builtin")
    p.add_argument("--budget", type=int, default=DEFAULT_FAMILY_BUDGET, help="number of members inspected")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NewtonError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
