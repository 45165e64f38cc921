"""Ideal and family documents, infix parsing and polyhedron serialization.

An ideal document is YAML (JSON is accepted as well)::

    variables: [x, y]
    generators:
      - "x^4 + y^4"                    # infix convenience form
      - - {coeff: "1", exp: [1, 2]}    # canonical term list
        - {coeff: "1", exp: [2, 1]}

A family document is either ``{kind: power, ideal: <ideal document>}`` or
``{kind: prefix, members: [<ideal document>, ...], period: 2, rule: "..."}``.
Rationals are written as ``"p/q"`` strings or integers, never floats.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import yaml

from .errors import ParseError
from .family import FamilySpec
from .geometry import Facet, StaircasePolyhedron, hull_staircase
from .series import IdealPresentation, LocalElement

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(value: Any, where: str = "value") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{where}: {value!r} is not an exact rational (write \"p/q\")")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m:
            num, den = int(m.group(1)), int(m.group(2) or 1)
            if den == 0:
                raise ParseError(f"{where}: zero denominator in {value!r}")
            return Fraction(num, den)
    raise ParseError(f"{where}: cannot read {value!r} as a rational \"p/q\"")


def format_rational(q: Fraction | int) -> str:
    return str(Fraction(q))


_FACTOR = re.compile(r"([a-zA-Z])(?:\^(\d+))?")
_COEFF = re.compile(r"^(\d+(?:/\d+)?)\s*\*?\s*")


def parse_infix(expr: str, variables: Sequence[str], where: str = "expression") -> LocalElement:
    """Read ``"x^4 + y^4 - 3/2*x*y^2"`` with single-letter variables (no parentheses)."""
    dim = len(variables)
    pos = {v: i for i, v in enumerate(variables)}
    text = expr.replace(" ", "")
    if not text:
        raise ParseError(f"{where}: empty expression")
    terms: dict[tuple[int, ...], Fraction] = {}
    i = 0
    while i < len(text):
        sign = 1
        if text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i += 1
        j = i
        while j < len(text) and text[j] not in "+-":
            j += 1
        body = text[i:j]
        if not body:
            raise ParseError(f"{where}: dangling sign at column {i + 1} of {expr!r}")
        coeff = Fraction(1)
        m = _COEFF.match(body)
        if m:
            coeff = Fraction(m.group(1))
            body = body[m.end():]
        exp = [0] * dim
        rest = body
        while rest:
            rest = rest.lstrip("*")
            fm = _FACTOR.match(rest)
            if not fm:
                raise ParseError(f"{where}: cannot parse {rest!r} in {expr!r}")
            name = fm.group(1)
            if name not in pos:
                raise ParseError(f"{where}: unknown variable {name!r} (variables are {list(variables)})")
            exp[pos[name]] += int(fm.group(2) or 1)
            rest = rest[fm.end():]
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
        i = j
    return LocalElement.from_dict(dim, terms)


def _load_yaml(source: str | Path) -> Any:
    path = Path(source)
    try:
        text = path.read_text() if path.exists() else str(source)
    except OSError:
        text = str(source)
    try:
        return yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        line = f"line {mark.line + 1}, column {mark.column + 1}" if mark else "unknown position"
        raise ParseError(f"malformed document at {line}: {exc.problem}") from exc
    except yaml.YAMLError as exc:
        raise ParseError(f"malformed document: {exc}") from exc


def _parse_generator(raw: Any, variables: Sequence[str], where: str) -> LocalElement:
    dim = len(variables)
    if isinstance(raw, str):
        return parse_infix(raw, variables, where)
    if not isinstance(raw, list):
        raise ParseError(f"{where}: a generator is an infix string or a list of terms")
    terms: dict[tuple[int, ...], Fraction] = {}
    for k, term in enumerate(raw):
        here = f"{where}[{k}]"
        if not isinstance(term, dict) or set(term) != {"coeff", "exp"}:
            raise ParseError(f"{here}: a term is {{coeff: \"p/q\", exp: [..]}}")
        coeff = parse_rational(term["coeff"], f"{here}.coeff")
        if coeff == 0:
            raise ParseError(f"{here}.coeff: coefficients must be nonzero")
        exp = term["exp"]
        if not isinstance(exp, list) or len(exp) != dim:
            raise ParseError(f"{here}.exp: expected a list of {dim} nonnegative integers")
        if any(isinstance(e, bool) or not isinstance(e, int) or e < 0 for e in exp):
            raise ParseError(f"{here}.exp: exponents must be nonnegative integers, got {exp}")
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return LocalElement.from_dict(dim, terms)


def ideal_from_document(doc: Any, where: str = "document") -> tuple[list[str], IdealPresentation]:
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a mapping with 'variables' and 'generators'")
    variables = doc.get("variables")
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        raise ParseError(f"{where}.variables: expected a nonempty list of names")
    if len(set(variables)) != len(variables):
        raise ParseError(f"{where}.variables: duplicate names")
    gens = doc.get("generators")
    if not isinstance(gens, list) or not gens:
        raise ParseError(f"{where}.generators: expected a nonempty list")
    elements = [_parse_generator(g, variables, f"{where}.generators[{i}]") for i, g in enumerate(gens)]
    if all(e.is_zero() for e in elements):
        raise ParseError(f"{where}.generators: every generator is zero")
    return list(variables), IdealPresentation(elements, len(variables))


def load_ideal(source: str | Path) -> tuple[list[str], IdealPresentation]:
    return ideal_from_document(_load_yaml(source))


def ideal_from_infix(exprs: str, variables: Sequence[str] | None = None) -> tuple[list[str], IdealPresentation]:
    """Comma-separated generators such as ``"x^4+y^4, xy^2+x^2y"``."""
    parts = [p for p in exprs.split(",") if p.strip()]
    if not parts:
        raise ParseError("no generators given")
    if variables is None:
        letters = sorted(set(re.findall(r"[a-zA-Z]", exprs)))
        order = [v for v in "xyz" if v in letters] + [v for v in letters if v not in "xyz"]
        variables = order or ["x"]
    gens = [parse_infix(p, variables, f"generator {i + 1}") for i, p in enumerate(parts)]
    if all(g.is_zero() for g in gens):
        raise ParseError("every generator is zero")
    return list(variables), IdealPresentation(gens, len(variables))


def family_from_document(doc: Any) -> tuple[list[str], FamilySpec]:
    if not isinstance(doc, dict):
        raise ParseError("family document: expected a mapping")
    kind = doc.get("kind")
    note = doc.get("rule", "") or ""
    if not isinstance(note, str):
        raise ParseError("family document.rule: expected free text")
    if kind == "power":
        variables, base = ideal_from_document(doc.get("ideal"), "ideal")
        return variables, FamilySpec.power(base, note=note)
    if kind == "prefix":
        members = doc.get("members")
        if not isinstance(members, list) or not members:
            raise ParseError("family document.members: expected a nonempty list of ideal documents")
        parsed = [ideal_from_document(m, f"members[{i}]") for i, m in enumerate(members)]
        variables = parsed[0][0]
        for i, (vs, _) in enumerate(parsed):
            if vs != variables:
                raise ParseError(f"members[{i}].variables: {vs} differs from {variables}")
        period = doc.get("period")
        if period is not None:
            if isinstance(period, bool) or not isinstance(period, int) or period < 1:
                raise ParseError("family document.period: expected a positive integer")
            if period > len(parsed):
                raise ParseError(f"family document.period: {period} exceeds the prefix length {len(parsed)}")
        return variables, FamilySpec.from_prefix([I for _, I in parsed], period=period, note=note)
    raise ParseError(f"family document.kind: expected 'power' or 'prefix', got {kind!r}")


def load_family(source: str | Path) -> tuple[list[str], FamilySpec]:
    return family_from_document(_load_yaml(source))


def ideal_to_document(I: IdealPresentation, variables: Sequence[str]) -> dict:
    return {
        "variables": list(variables),
        "generators": [
            [{"coeff": format_rational(c), "exp": list(e)} for e, c in g.terms] for g in I.generators
        ],
    }


def polyhedron_to_dict(P: StaircasePolyhedron) -> dict:
    return {
        "dim": P.dim,
        "vertices": [[format_rational(c) for c in v] for v in P.vertices],
        "facets": [{"normal": list(f.normal), "rhs": format_rational(f.rhs)} for f in P.facets],
    }


def polyhedron_from_dict(data: dict) -> StaircasePolyhedron:
    try:
        dim = data["dim"]
        verts = [tuple(parse_rational(c, "vertex") for c in v) for v in data["vertices"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"polyhedron: missing or malformed field {exc}") from exc
    P = hull_staircase(verts, dim)
    if "facets" in data:
        facets = tuple(sorted(Facet(tuple(f["normal"]), parse_rational(f["rhs"], "rhs")) for f in data["facets"]))
        if facets != P.facets:
            raise ParseError("polyhedron: facets do not match the vertices")
    return P
