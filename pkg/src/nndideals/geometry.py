"""Exact polyhedral kernel for staircase polyhedra ``conv(S) + R^d_{>=0}``.

Everything is computed with :class:`fractions.Fraction` and Python integers.
A :class:`StaircasePolyhedron` is kept in canonical form (sorted vertices and
sorted primitive facet normals) so that structural equality is geometric
equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionError,
    DomainError,
    EmptyGenerator,
    NotCoFinite,
    UnsupportedDimension,
)

Point = tuple[Fraction, ...]


def _to_point(p: Iterable, dim: int | None = None) -> Point:
    pt = tuple(Fraction(c) for c in p)
    if dim is not None and len(pt) != dim:
        raise DimensionError(f"point {pt} does not have dimension {dim}")
    if any(c < 0 for c in pt):
        raise DomainError(f"point {tuple(str(c) for c in pt)} has a negative coordinate")
    return pt


def _dot(n: Sequence, p: Sequence):
    return sum(a * b for a, b in zip(n, p))


def _lcm_denominator(points: Iterable[Point]) -> int:
    den = 1
    for p in points:
        for c in p:
            den = math.lcm(den, c.denominator)
    return den


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for v in vec:
        g = math.gcd(g, v)
    return tuple(v // g for v in vec) if g else tuple(vec)


def det(rows: Sequence[Sequence]) -> Fraction | int:
    """Determinant by fraction-free Bareiss elimination (exact for int/Fraction)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num / prev if isinstance(num, Fraction) or isinstance(prev, Fraction) else num // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _normal_of(directions: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    """Generalized cross product: an integer vector orthogonal to ``dim - 1`` directions."""
    out = []
    for i in range(dim):
        minor = [[row[j] for j in range(dim) if j != i] for row in directions]
        out.append((-1) ** i * det(minor))
    return tuple(out)


def _rank(vectors: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def affine_dimension(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    base = points[0]
    return _rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


@dataclass(frozen=True, order=True)
class Facet:
    """Inequality ``<normal, x> >= rhs`` with a primitive nonnegative integer normal."""

    normal: tuple[int, ...]
    rhs: Fraction

    def value(self, p: Sequence) -> Fraction:
        return _dot(self.normal, p)

    def satisfied(self, p: Sequence) -> bool:
        return self.value(p) >= self.rhs

    def tight(self, p: Sequence) -> bool:
        return self.value(p) == self.rhs

    def __str__(self) -> str:
        names = "xyz" if len(self.normal) <= 3 else None
        terms = []
        for i, a in enumerate(self.normal):
            if a == 0:
                continue
            var = names[i] if names else f"x{i + 1}"
            terms.append(var if a == 1 else f"{a}{var}")
        return " + ".join(terms) + f" >= {self.rhs}"


@dataclass(frozen=True)
class StaircasePolyhedron:
    """``conv(vertices) + R^d_{>=0}`` in canonical vertex/facet form."""

    dim: int
    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]

    def __contains__(self, point) -> bool:
        return contains_point(self, point)

    def __add__(self, other: "StaircasePolyhedron") -> "StaircasePolyhedron":
        return minkowski_sum(self, other)

    def __mul__(self, r) -> "StaircasePolyhedron":
        return scale(self, r)

    __rmul__ = __mul__

    def is_cofinite(self) -> bool:
        """True when every coordinate axis meets the polyhedron."""
        return all(
            any(all(v[j] == 0 for j in range(self.dim) if j != i) for v in self.vertices)
            for i in range(self.dim)
        )

    def axis_intercepts(self) -> tuple[Fraction | None, ...]:
        """Smallest ``t`` with ``t * e_i`` in the polyhedron, or None if the axis misses it."""
        out = []
        for i in range(self.dim):
            hits = [v[i] for v in self.vertices if all(v[j] == 0 for j in range(self.dim) if j != i)]
            out.append(min(hits) if hits else None)
        return tuple(out)

    def __str__(self) -> str:
        verts = ", ".join("(" + ",".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"conv{{{verts}}} + R^{self.dim}_>=0"


def _minimal_points(points: Iterable[Point]) -> list[Point]:
    pts = sorted(set(points), key=lambda p: (sum(p), p))
    kept: list[Point] = []
    for p in pts:
        if not any(all(a >= b for a, b in zip(p, q)) for q in kept):
            kept.append(p)
    return kept


def _facets_2d(points: list[Point]) -> tuple[list[Point], list[Facet]]:
    # minimal points sorted by x have strictly decreasing y
    pts = sorted(points)
    chain: list[Point] = []
    for p in pts:
        while len(chain) >= 2:
            o, a = chain[-2], chain[-1]
            cross = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
            if cross <= 0:
                chain.pop()
            else:
                break
        chain.append(p)
    facets = [Facet((1, 0), chain[0][0]), Facet((0, 1), chain[-1][1])]
    den = _lcm_denominator(chain)
    for p, q in zip(chain, chain[1:]):
        dx, dy = (q[0] - p[0]) * den, (q[1] - p[1]) * den
        normal = _primitive((int(-dy), int(dx)))
        facets.append(Facet(normal, _dot(normal, p)))
    return chain, facets


def _facets_general(points: list[Point], dim: int) -> list[Facet]:
    den = _lcm_denominator(points)
    ipts = [tuple(int(c * den) for c in p) for p in points]
    units = [tuple(int(i == k) for i in range(dim)) for k in range(dim)]
    found: set[Facet] = set()
    for idx, p0 in enumerate(ipts):
        dirs = [tuple(a - b for a, b in zip(q, p0)) for q in ipts[idx + 1:]] + units
        for combo in itertools.combinations(dirs, dim - 1):
            normal = _normal_of(combo, dim)
            if all(a <= 0 for a in normal):
                normal = tuple(-a for a in normal)
            if any(a < 0 for a in normal) or not any(normal):
                continue
            normal = _primitive(normal)
            level = _dot(normal, p0)
            if all(_dot(normal, q) >= level for q in ipts):
                found.add(Facet(normal, Fraction(level, den)))
    return list(found)


def _vertices_from_facets(points: list[Point], facets: Sequence[Facet], dim: int) -> list[Point]:
    verts = []
    for p in points:
        tight = [f.normal for f in facets if f.tight(p)]
        if _rank(tight) == dim:
            verts.append(p)
    return verts


def hull_staircase(points: Iterable[Sequence], dim: int | None = None) -> StaircasePolyhedron:
    """Canonical staircase polyhedron ``conv(points) + R^d_{>=0}``.

    Points dominated by convex combinations of the others are dropped.
    """
    raw = list(points)
    if not raw:
        raise EmptyGenerator("cannot take the hull of no points")
    if dim is None:
        dim = len(raw[0])
    if dim < 1:
        raise DomainError("dimension must be positive")
    pts = _minimal_points(_to_point(p, dim) for p in raw)
    if dim == 1:
        v = pts[0]
        return StaircasePolyhedron(1, (v,), (Facet((1,), v[0]),))
    if dim == 2:
        verts, facets = _facets_2d(pts)
    else:
        facets = _facets_general(pts, dim)
        verts = _vertices_from_facets(pts, facets, dim)
    return StaircasePolyhedron(dim, tuple(sorted(verts)), tuple(sorted(set(facets))))


def _hull_general(points: Iterable[Sequence], dim: int) -> StaircasePolyhedron:
    """Dimension-agnostic hull (used to cross-check the planar fast path)."""
    pts = _minimal_points(_to_point(p, dim) for p in points)
    facets = _facets_general(pts, dim)
    verts = _vertices_from_facets(pts, facets, dim)
    return StaircasePolyhedron(dim, tuple(sorted(verts)), tuple(sorted(set(facets))))


def _same_dim(P: StaircasePolyhedron, Q: StaircasePolyhedron) -> None:
    if P.dim != Q.dim:
        raise DimensionError(f"dimension mismatch: {P.dim} vs {Q.dim}")


def minkowski_sum(P: StaircasePolyhedron, Q: StaircasePolyhedron) -> StaircasePolyhedron:
    _same_dim(P, Q)
    sums = {tuple(a + b for a, b in zip(u, v)) for u in P.vertices for v in Q.vertices}
    return hull_staircase(sums, P.dim)


def scale(P: StaircasePolyhedron, r) -> StaircasePolyhedron:
    r = Fraction(r)
    if r <= 0:
        raise DomainError(f"scale factor must be positive, got {r}")
    return StaircasePolyhedron(
        P.dim,
        tuple(tuple(c * r for c in v) for v in P.vertices),
        tuple(Facet(f.normal, f.rhs * r) for f in P.facets),
    )


def contains_point(P: StaircasePolyhedron, a: Sequence) -> bool:
    pt = tuple(Fraction(c) for c in a)
    if len(pt) != P.dim:
        raise DimensionError(f"point of dimension {len(pt)} tested against dimension {P.dim}")
    return all(f.satisfied(pt) for f in P.facets)


def equals(P: StaircasePolyhedron, Q: StaircasePolyhedron) -> bool:
    _same_dim(P, Q)
    return P.vertices == Q.vertices and P.facets == Q.facets


def subset(P: StaircasePolyhedron, Q: StaircasePolyhedron) -> bool:
    """``P`` is contained in ``Q`` (both share the orthant as recession cone)."""
    _same_dim(P, Q)
    return all(contains_point(Q, v) for v in P.vertices)


@dataclass(frozen=True)
class CompactFace:
    """A bounded face, cut out by ``<normal, x> = level`` with a strictly positive normal."""

    vertices: tuple[Point, ...]
    dim: int
    normal: tuple[int, ...]
    level: Fraction
    _facets: tuple[Facet, ...] = field(default=(), repr=False, compare=False)

    def on_hyperplane(self, a: Sequence) -> bool:
        return _dot(self.normal, a) == self.level

    def contains(self, a: Sequence) -> bool:
        pt = tuple(Fraction(c) for c in a)
        return self.on_hyperplane(pt) and all(f.satisfied(pt) for f in self._facets)

    def is_edge(self) -> bool:
        return self.dim == 1

    def __str__(self) -> str:
        verts = ", ".join("(" + ",".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"conv{{{verts}}}"


def compact_faces(P: StaircasePolyhedron) -> list[CompactFace]:
    """All bounded faces of ``P`` (vertices, edges and, for d = 3, bounded 2-faces)."""
    if P.dim > 3:
        raise UnsupportedDimension(f"face enumeration is implemented for d <= 3, got {P.dim}")
    d = P.dim
    verts = P.vertices
    tight = [frozenset(i for i, v in enumerate(verts) if f.tight(v)) for f in P.facets]
    flat = [frozenset(k for k in range(d) if f.normal[k] == 0) for f in P.facets]
    all_facets = frozenset(range(len(P.facets)))

    def close(T: frozenset) -> tuple[frozenset, frozenset, frozenset] | None:
        vs = frozenset(range(len(verts)))
        rays = frozenset(range(d))
        for j in T:
            vs &= tight[j]
            rays &= flat[j]
        if not vs:
            return None
        eq = frozenset(j for j in all_facets if vs <= tight[j] and rays <= flat[j])
        return eq, vs, rays

    faces: dict[frozenset, tuple[frozenset, frozenset]] = {}
    frontier = []
    for j in all_facets:
        c = close(frozenset([j]))
        if c and c[0] not in faces:
            faces[c[0]] = (c[1], c[2])
            frontier.append(c[0])
    while frontier:
        nxt = []
        for eq in frontier:
            for j in all_facets - eq:
                c = close(eq | {j})
                if c and c[0] not in faces:
                    faces[c[0]] = (c[1], c[2])
                    nxt.append(c[0])
        frontier = nxt

    out = []
    for eq, (vs, rays) in faces.items():
        if rays:
            continue
        normal = [0] * d
        for j in eq:
            for k in range(d):
                normal[k] += P.facets[j].normal[k]
        if not all(n > 0 for n in normal):
            continue
        normal = _primitive(normal)
        fverts = tuple(sorted(verts[i] for i in vs))
        out.append(
            CompactFace(
                vertices=fverts,
                dim=affine_dimension(fverts),
                normal=normal,
                level=_dot(normal, fverts[0]),
                _facets=P.facets,
            )
        )
    out.sort(key=lambda f: (f.dim, f.vertices))
    return out


def _solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Point | None:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col] / aug[col][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(aug[i][n] / aug[i][i] for i in range(n))


def _polytope_volume(constraints: list[tuple[tuple, Fraction]], dim: int) -> Fraction:
    """Volume of the bounded region ``{x : <a, x> >= b}`` by recursive pyramid triangulation."""
    verts: set[Point] = set()
    for combo in itertools.combinations(constraints, dim):
        sol = _solve([c[0] for c in combo], [c[1] for c in combo])
        if sol is not None and all(_dot(a, sol) >= b for a, b in constraints):
            verts.add(sol)
    vlist = sorted(verts)
    if affine_dimension(vlist) < dim:
        return Fraction(0)
    tight = {frozenset(i for i, v in enumerate(vlist) if _dot(a, v) == b) for a, b in constraints}

    def simplices(face: frozenset, k: int) -> list[list[int]]:
        if k == 0:
            return [[next(iter(face))]]
        apex = min(face)
        out, seen = [], set()
        for t in tight:
            sub = face & t
            if apex in sub or sub in seen or len(sub) < k:
                continue
            if affine_dimension([vlist[i] for i in sorted(sub)]) != k - 1:
                continue
            seen.add(sub)
            out.extend([apex] + s for s in simplices(sub, k - 1))
        return out

    total = Fraction(0)
    for s in simplices(frozenset(range(len(vlist))), dim):
        base = vlist[s[0]]
        rows = [[a - b for a, b in zip(vlist[i], base)] for i in s[1:]]
        total += abs(Fraction(det(rows)))
    return total / math.factorial(dim)


def covolume(P: StaircasePolyhedron, box: int | None = None) -> Fraction:
    """Exact volume of ``R^d_{>=0} minus P``.

    Computed as ``M^d - vol(P ∩ [0, M]^d)`` for an integer ``M`` at least the
    largest vertex coordinate; the answer does not depend on ``M``.
    """
    if not P.is_cofinite():
        raise NotCoFinite(f"{P} misses a coordinate axis; its complement is unbounded")
    top = max((c for v in P.vertices for c in v), default=Fraction(0))
    M = max(1, math.ceil(top)) if box is None else box
    if M < top:
        raise DomainError(f"box size {M} is smaller than a vertex coordinate {top}")
    d = P.dim
    if d == 1:
        return P.vertices[0][0]
    if d == 2:
        # P ∩ box, counterclockwise from the top of the y-axis
        poly = [(Fraction(0), Fraction(M))] + list(P.vertices) + [
            (Fraction(M), Fraction(0)),
            (Fraction(M), Fraction(M)),
        ]
        area2 = sum(
            a[0] * b[1] - a[1] * b[0] for a, b in zip(poly, poly[1:] + poly[:1])
        )
        return Fraction(M) ** 2 - abs(area2) / 2
    constraints = [(f.normal, f.rhs) for f in P.facets]
    for k in range(d):
        e = tuple(-int(i == k) for i in range(d))
        constraints.append((e, Fraction(-M)))
        constraints.append((tuple(-x for x in e), Fraction(0)))
    return Fraction(M) ** d - _polytope_volume(constraints, d)
