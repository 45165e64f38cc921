"""Ring elements and ideals of a regular local ring, modelled by finite term lists.

An element is a finite sum ``sum c_a * x^a`` over the regular parameters
``x_1, ..., x_d`` with nonzero rational coefficients.  Every nonzero scalar is a
unit of the local ring, so a term whose exponent dominates another one folds
into it; :func:`support` therefore keeps only the componentwise-minimal
exponents.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DimensionError, DomainError, EmptyGenerator
from .geometry import StaircasePolyhedron, hull_staircase

Exponent = tuple[int, ...]
Coefficient = Union[int, Fraction]


def dominates(a: Sequence, b: Sequence) -> bool:
    """Componentwise ``a >= b``."""
    return all(x >= y for x, y in zip(a, b))


def minimal_elements(points: Iterable[Exponent]) -> list[Exponent]:
    """Componentwise-minimal elements of a finite set, sorted lexicographically."""
    pts = sorted(set(points), key=sum)
    kept: list[Exponent] = []
    for p in pts:
        if not any(dominates(p, q) for q in kept):
            kept.append(p)
    return sorted(kept)


@dataclass(frozen=True)
class LocalElement:
    """A finite term list ``{exponent: coefficient}`` in ``dim`` parameters.

    Zero coefficients are never stored; the zero element has no terms.
    Terms are kept sorted so that equality is structural.
    """

    dim: int
    terms: tuple[tuple[Exponent, Fraction], ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dimension must be positive")
        for exp, coeff in self.terms:
            if len(exp) != self.dim:
                raise DimensionError(f"exponent {exp} does not have length {self.dim}")
            if any(e < 0 for e in exp):
                raise DomainError(f"negative exponent {exp}")
            if coeff == 0:
                raise DomainError("zero coefficient stored")

    @classmethod
    def from_dict(cls, dim: int, terms: Mapping[Exponent, Coefficient]) -> "LocalElement":
        clean = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            c = Fraction(c)
            if c != 0:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if clean[exp] == 0:
                    del clean[exp]
        return cls(dim, tuple(sorted(clean.items())))

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Coefficient = 1) -> "LocalElement":
        return cls.from_dict(len(exp), {tuple(exp): coeff})

    @classmethod
    def zero(cls, dim: int) -> "LocalElement":
        return cls(dim, ())

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def exponents(self) -> list[Exponent]:
        return [e for e, _ in self.terms]

    def order(self) -> int:
        """Lowest total degree of a term (the m-adic order)."""
        if not self.terms:
            raise DomainError("the zero element has no order")
        return min(sum(e) for e, _ in self.terms)

    def _check(self, other: "LocalElement"):
        if not isinstance(other, LocalElement):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return None

    def __add__(self, other: "LocalElement") -> "LocalElement":
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = self.as_dict()
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return LocalElement.from_dict(self.dim, acc)

    def __neg__(self) -> "LocalElement":
        return LocalElement(self.dim, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LocalElement") -> "LocalElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LocalElement.from_dict(self.dim, {e: c * other for e, c in self.terms})
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return LocalElement.from_dict(self.dim, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LocalElement":
        if n < 0:
            raise DomainError("negative power")
        out = LocalElement.monomial((0,) * self.dim)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self) -> str:
        return format_element(self)


def format_element(f: LocalElement, names: Sequence[str] | None = None) -> str:
    if f.is_zero():
        return "0"
    if names is None:
        names = ["x", "y", "z"] if f.dim <= 3 else [f"x{i + 1}" for i in range(f.dim)]
    parts = []
    for exp, c in sorted(f.terms, key=lambda t: (sum(t[0]), tuple(-e for e in t[0]))):
        mono = "*".join(
            n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def support(f: LocalElement) -> set[Exponent]:
    """Exponents of the irredundant monomial representation of ``f``."""
    return set(minimal_elements(f.exponents()))


def add(f: LocalElement, g: LocalElement) -> LocalElement:
    return f + g


def multiply(f: LocalElement, g: LocalElement) -> LocalElement:
    return f * g


@dataclass(frozen=True)
class IdealPresentation:
    """An ideal given by a finite list of generators (zero generators are dropped)."""

    generators: tuple[LocalElement, ...]
    dim: int

    def __init__(self, generators: Iterable[LocalElement], dim: int | None = None):
        gens = list(generators)
        if dim is None:
            if not gens:
                raise EmptyGenerator("an ideal presentation needs generators")
            dim = gens[0].dim
        for g in gens:
            if g.dim != dim:
                raise DimensionError(f"generator of dimension {g.dim} in a dimension-{dim} ideal")
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise EmptyGenerator("all generators are zero")
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "dim", dim)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def newton_polyhedron(ideal: IdealPresentation | Iterable[LocalElement]) -> StaircasePolyhedron:
    """Newton polyhedron: staircase hull of the union of generator supports."""
    gens = list(ideal.generators if isinstance(ideal, IdealPresentation) else ideal)
    points: set[Exponent] = set()
    for g in gens:
        points |= support(g)
    if not points:
        raise EmptyGenerator("all generators are zero")
    return hull_staircase(points, gens[0].dim)


def product_ideal(I: IdealPresentation, J: IdealPresentation) -> IdealPresentation:
    if I.dim != J.dim:
        raise DimensionError(f"dimension mismatch: {I.dim} vs {J.dim}")
    return IdealPresentation([g * h for g in I for h in J], I.dim)


def power_ideal(I: IdealPresentation, n: int) -> IdealPresentation:
    """``I^n`` generated by the degree-``n`` monomials in the generators of ``I``."""
    if n < 1:
        raise DomainError(f"power must be positive, got {n}")
    if n == 1:
        return I
    gens = []
    seen = set()
    for combo in itertools.combinations_with_replacement(I.generators, n):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        if prod not in seen:
            seen.add(prod)
            gens.append(prod)
    return IdealPresentation(gens, I.dim)
