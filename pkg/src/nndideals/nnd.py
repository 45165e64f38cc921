"""Newton non-degeneracy: the face criterion (d = 2) and the multiplicity criterion.

Face route.  On each compact face the generators are cut down to their terms
on the supporting hyperplane.  A vertex always carries a monomial.  On an
edge the restricted polynomials become univariate in the edge parameter and
have a common zero on the torus exactly when the gcd of the nonzero ones,
with factors of ``t`` removed, is nonconstant.

Multiplicity route.  An m-primary ideal is non-degenerate exactly when its
multiplicity equals ``d!`` times the co-volume of its Newton polyhedron.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import FaceKindError, UnsupportedDimension
from .geometry import CompactFace, compact_faces, covolume
from .monomial import MonomialIdeal, ideal_I0, monomial_integral_closure
from .oracle import multiplicity
from .series import IdealPresentation, LocalElement, newton_polyhedron

Poly = tuple[Fraction, ...]  # coefficients, constant term first; () is zero


def _trim(p: Sequence[Fraction]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_rem(a: Poly, b: Poly) -> Poly:
    a = list(a)
    lead = b[-1]
    while len(a) >= len(b) and a:
        q = a[-1] / lead
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a = list(_trim(a))
    return tuple(a)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (Euclid); gcd(0, 0) = 0."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_rem(a, b)
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def strip_t(p: Poly) -> Poly:
    """Remove all factors of ``t`` (roots at the origin are off the torus)."""
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return tuple(p[k:])


def face_restrict(g: LocalElement, face: CompactFace) -> LocalElement:
    """Terms of ``g`` lying on the supporting hyperplane of ``face``."""
    return LocalElement(g.dim, tuple((e, c) for e, c in g.terms if face.on_hyperplane(e)))


@dataclass(frozen=True)
class EdgePolynomialSystem:
    """Edge restrictions written as ``x^start * p_i(t)`` with ``t`` the primitive edge step."""

    polys: tuple[Poly, ...]
    start: tuple[int, ...]
    step: tuple[int, ...]


def edge_system(gens: Sequence[LocalElement], edge: CompactFace) -> EdgePolynomialSystem:
    """Univariate edge polynomials, oriented from the endpoint with the larger first coordinate."""
    if len(edge.normal) != 2:
        raise UnsupportedDimension("edge systems are implemented for d = 2")
    if edge.dim != 1 or len(edge.vertices) != 2:
        raise FaceKindError(f"{edge} is not an edge")
    end, start = edge.vertices  # lex order: start has the larger x
    if any(c.denominator != 1 for v in edge.vertices for c in v):
        raise FaceKindError(f"{edge} is not a lattice edge")
    start = tuple(int(c) for c in start)
    end = tuple(int(c) for c in end)
    dx, dy = end[0] - start[0], end[1] - start[1]
    g = math.gcd(dx, dy)
    step = (dx // g, dy // g)
    polys = []
    for gen in gens:
        coeffs = [Fraction(0)] * (g + 1)
        for exp, c in face_restrict(gen, edge).terms:
            k = (exp[0] - start[0]) // step[0]
            coeffs[k] = c
        polys.append(_trim(coeffs))
    return EdgePolynomialSystem(tuple(polys), start, step)


def common_torus_factor(sys: EdgePolynomialSystem) -> Poly | None:
    """The stripped gcd of the nonzero edge polynomials (None when all vanish)."""
    nonzero = [p for p in sys.polys if p]
    if not nonzero:
        return None
    g: Poly = ()
    for p in nonzero:
        g = poly_gcd(g, p)
    return strip_t(g)


def face_nondegenerate(sys: EdgePolynomialSystem) -> bool:
    """False exactly when the edge polynomials share a root in C*."""
    g = common_torus_factor(sys)
    return g is not None and len(g) <= 1


@dataclass(frozen=True)
class FaceVerdict:
    face: CompactFace
    restricted: tuple[LocalElement, ...]
    nondegenerate: bool
    common_factor: Poly | None = None


def face_report(I: IdealPresentation) -> list[FaceVerdict]:
    """Per-face verdicts of the face criterion (d = 2)."""
    if I.dim != 2:
        raise UnsupportedDimension(f"the face criterion is implemented for d = 2, got d = {I.dim}")
    out = []
    for face in compact_faces(newton_polyhedron(I)):
        restricted = tuple(face_restrict(g, face) for g in I.generators)
        if face.dim == 0:
            ok = any(not r.is_zero() for r in restricted)
            out.append(FaceVerdict(face, restricted, ok))
        else:
            sys = edge_system(I.generators, face)
            common = common_torus_factor(sys)
            out.append(FaceVerdict(face, restricted, face_nondegenerate(sys), common))
    return out


def failing_faces(I: IdealPresentation) -> list[CompactFace]:
    return [v.face for v in face_report(I) if not v.nondegenerate]


def is_nnd_face(I: IdealPresentation) -> bool:
    return all(v.nondegenerate for v in face_report(I))


@dataclass(frozen=True)
class MultiplicityComparison:
    multiplicity: int
    d_factorial_covolume: Fraction

    @property
    def equal(self) -> bool:
        return self.multiplicity == self.d_factorial_covolume

    @property
    def gap(self) -> Fraction:
        return self.multiplicity - self.d_factorial_covolume


def compare_multiplicity(I: IdealPresentation, **budget) -> MultiplicityComparison:
    e = multiplicity(I, **budget)
    vol = math.factorial(I.dim) * covolume(newton_polyhedron(I))
    return MultiplicityComparison(e, vol)


def is_nnd_multiplicity(I: IdealPresentation, **budget) -> bool:
    return compare_multiplicity(I, **budget).equal


def is_nnd(I: IdealPresentation, route: str = "auto", **budget) -> bool:
    """NND certification; ``auto`` uses the face route in d = 2 and multiplicities otherwise."""
    if route == "auto":
        route = "face" if I.dim == 2 else "mult"
    if route == "face":
        return is_nnd_face(I)
    if route == "mult":
        return is_nnd_multiplicity(I, **budget)
    raise ValueError(f"unknown route {route!r}")


@dataclass(frozen=True)
class NotNND:
    """Marker returned when an ideal is not Newton non-degenerate."""

    ideal: IdealPresentation
    failing_faces: tuple[CompactFace, ...] = field(default=())

    def __bool__(self) -> bool:
        return False


def closure_if_nnd(I: IdealPresentation, route: str = "auto", **budget) -> MonomialIdeal | NotNND:
    """Integral closure of an NND ideal (a monomial ideal), or :class:`NotNND`."""
    if not is_nnd(I, route, **budget):
        faces = tuple(failing_faces(I)) if I.dim == 2 else ()
        return NotNND(I, faces)
    return monomial_integral_closure(ideal_I0(newton_polyhedron(I)))
