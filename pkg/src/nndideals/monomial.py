"""Monomial (staircase) ideals: I_0 extraction, integral closure, colength."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, EmptyGenerator, NotPrimary
from .geometry import StaircasePolyhedron, hull_staircase
from .series import Exponent, IdealPresentation, LocalElement, dominates, minimal_elements


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored as the antichain of its minimal generator exponents."""

    dim: int
    generators: tuple[Exponent, ...]

    def __init__(self, generators: Iterable[Sequence[int]], dim: int | None = None):
        gens = [tuple(int(c) for c in g) for g in generators]
        if not gens:
            raise EmptyGenerator("a monomial ideal needs at least one generator")
        if dim is None:
            dim = len(gens[0])
        if any(len(g) != dim for g in gens):
            raise DimensionError(f"generator exponents must have length {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", tuple(minimal_elements(gens)))

    def __contains__(self, exp: Sequence[int]) -> bool:
        return any(dominates(exp, g) for g in self.generators)

    def newton_polyhedron(self) -> StaircasePolyhedron:
        return hull_staircase(self.generators, self.dim)

    def as_presentation(self) -> IdealPresentation:
        return IdealPresentation([LocalElement.monomial(g) for g in self.generators], self.dim)

    def __str__(self) -> str:
        return "<" + ", ".join("(" + ",".join(map(str, g)) + ")" for g in self.generators) + ">"


def maximal_ideal_power(dim: int, m: int) -> MonomialIdeal:
    """``(x_1, ..., x_d)^m``."""
    return MonomialIdeal(
        [e for e in itertools.product(range(m + 1), repeat=dim) if sum(e) == m], dim
    )


def ideal_I0(P: StaircasePolyhedron) -> MonomialIdeal:
    """Monomial ideal generated by all lattice points of ``P``.

    Minimal lattice points lie in ``[0, M]^d`` with ``M`` the ceiling of the
    largest vertex coordinate.  For each prefix of the first ``d - 1``
    coordinates the smallest feasible last coordinate is read off the facets.
    """
    d = P.dim
    M = max(1, math.ceil(max(c for v in P.vertices for c in v)))
    candidates = []
    for prefix in itertools.product(range(M + 1), repeat=d - 1):
        low = 0
        feasible = True
        for f in P.facets:
            rest = f.rhs - sum(a * b for a, b in zip(f.normal, prefix))
            last = f.normal[-1]
            if last == 0:
                if rest > 0:
                    feasible = False
                    break
            else:
                low = max(low, math.ceil(Fraction(rest, last)))
        if feasible and low <= M:
            candidates.append(prefix + (low,))
    return MonomialIdeal(candidates, d)


def monomial_integral_closure(M: MonomialIdeal) -> MonomialIdeal:
    """Integral closure: monomials whose exponents lie in the Newton polyhedron."""
    return ideal_I0(M.newton_polyhedron())


def pure_powers(M: MonomialIdeal) -> list[int | None]:
    """Smallest ``b`` with ``x_i^b`` in ``M`` for each variable (None when absent)."""
    out = []
    for i in range(M.dim):
        hits = [g[i] for g in M.generators if all(g[j] == 0 for j in range(M.dim) if j != i)]
        out.append(min(hits) if hits else None)
    return out


def is_m_primary(M: MonomialIdeal) -> bool:
    return all(b is not None for b in pure_powers(M))


def colength(M: MonomialIdeal) -> int:
    """Number of standard monomials, i.e. lattice points below the staircase."""
    bounds = pure_powers(M)
    if any(b is None for b in bounds):
        raise NotPrimary(f"{M} contains no pure power of some variable")
    d = M.dim
    if d == 1:
        return bounds[0]
    total = 0
    for prefix in itertools.product(*(range(b) for b in bounds[:-1])):
        total += min(g[-1] for g in M.generators if dominates(prefix, g[:-1]))
    return total
