"""Graded families of ideals: limiting bodies, stabilization and Multiplicity = Volume.

A family is known only through finitely many members, so every verdict that
quantifies over all ``n`` is reported "up to N" unless the family's rule
(a power family, or a declared period ``c`` with ``I_{kc} = I_c^k``)
settles it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import DomainError, GradednessViolation
from .geometry import CompactFace, StaircasePolyhedron, covolume, equals, minkowski_sum, scale, subset
from .monomial import MonomialIdeal
from .nnd import failing_faces, is_nnd_face
from .oracle import multiplicity
from .series import IdealPresentation, newton_polyhedron

CERTIFIED = "noetherian-certified"
CONSISTENT = "noetherian-consistent-up-to-N"
NON_POLYHEDRAL = "non-polyhedral-up-to-N"


@dataclass(frozen=True)
class FamilySpec:
    """A graded family ``{I_n}``.

    ``kind`` is ``"power"`` (``I_n = base^n``), ``"prefix"`` (explicit members
    ``I_1 .. I_N``) or ``"rule"`` (``rule(n)`` builds ``I_n`` on demand).
    """

    kind: str
    dim: int
    base: Optional[IdealPresentation] = None
    prefix: tuple[IdealPresentation, ...] = ()
    rule: Optional[Callable[[int], IdealPresentation]] = field(default=None, compare=False)
    period: Optional[int] = None
    note: str = ""

    def __post_init__(self):
        if self.kind == "power":
            if self.base is None:
                raise DomainError("a power family needs a base ideal")
        elif self.kind == "prefix":
            if not self.prefix:
                raise DomainError("a prefix family needs at least one member")
            if any(I.dim != self.dim for I in self.prefix):
                raise DomainError("prefix members must share the family dimension")
        elif self.kind == "rule":
            if self.rule is None:
                raise DomainError("a rule family needs a rule")
        else:
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.period is not None and self.period < 1:
            raise DomainError("a declared period must be positive")

    @classmethod
    def power(cls, base: IdealPresentation, note: str = "") -> "FamilySpec":
        return cls("power", base.dim, base=base, note=note)

    @classmethod
    def from_prefix(cls, members: Sequence[IdealPresentation], period: int | None = None, note: str = "") -> "FamilySpec":
        members = tuple(members)
        if not members:
            raise DomainError("a prefix family needs at least one member")
        return cls("prefix", members[0].dim, prefix=members, period=period, note=note)

    @classmethod
    def from_rule(cls, dim: int, rule: Callable[[int], IdealPresentation], period: int | None = None, note: str = "") -> "FamilySpec":
        return cls("rule", dim, rule=rule, period=period, note=note)

    def available(self, budget: int) -> int:
        if budget < 1:
            raise DomainError("the budget must be positive")
        return min(budget, len(self.prefix)) if self.kind == "prefix" else budget

    def member(self, n: int) -> IdealPresentation:
        if n < 1:
            raise DomainError("family members are indexed from 1")
        if self.kind == "prefix":
            if n > len(self.prefix):
                raise DomainError(f"member {n} is beyond the prefix of length {len(self.prefix)}")
            return self.prefix[n - 1]
        if self.kind == "rule":
            return self.rule(n)
        from .series import power_ideal

        return power_ideal(self.base, n)

    def gamma(self, n: int) -> StaircasePolyhedron:
        if self.kind == "power":
            # Newton polyhedron of a power is the scaled polyhedron
            return scale(newton_polyhedron(self.base), n)
        return newton_polyhedron(self.member(n))


def _maybe_primary(I: IdealPresentation) -> bool:
    return len(I.generators) >= I.dim and newton_polyhedron(I).is_cofinite()


def check_graded(F: FamilySpec, budget: int, gammas: dict[int, StaircasePolyhedron] | None = None) -> None:
    """Necessary gradedness checks on the available prefix.

    ``Γ(I_p) + Γ(I_q)`` must lie inside ``Γ(I_{p+q})``; for monomial members
    the ideal containment ``I_p I_q ⊆ I_{p+q}`` is checked exactly.
    """
    n = F.available(budget)
    gammas = gammas or {k: F.gamma(k) for k in range(1, n + 1)}
    for p in range(1, n + 1):
        for q in range(p, n + 1 - p):
            if not subset(minkowski_sum(gammas[p], gammas[q]), gammas[p + q]):
                raise GradednessViolation(f"Γ(I_{p}) + Γ(I_{q}) is not inside Γ(I_{p + q})")
            if F.kind != "power":
                Ip, Iq, Ipq = F.member(p), F.member(q), F.member(p + q)
                if Ip.is_monomial() and Iq.is_monomial() and Ipq.is_monomial():
                    target = MonomialIdeal([g.terms[0][0] for g in Ipq])
                    for g in Ip:
                        for h in Iq:
                            e = tuple(a + b for a, b in zip(g.terms[0][0], h.terms[0][0]))
                            if e not in target:
                                raise GradednessViolation(f"I_{p} I_{q} is not inside I_{p + q}")


@dataclass(frozen=True)
class LimitingBody:
    """Prefix data of the limiting body ``C = union of (1/n) Γ(I_n)``."""

    dim: int
    budget: int
    scaled: tuple[StaircasePolyhedron, ...]  # scaled[n - 1] = (1/n) Γ(I_n)
    c: Optional[int]
    declared_period: Optional[int] = None

    @property
    def stabilized(self) -> bool:
        return self.c is not None

    @property
    def status(self) -> str:
        return f"stabilized at c = {self.c}" if self.stabilized else f"not-stabilized-up-to-{self.budget}"

    @property
    def closure(self) -> Optional[StaircasePolyhedron]:
        return self.scaled[self.c - 1] if self.stabilized else None

    def axis_intercepts(self) -> list[tuple[Optional[Fraction], ...]]:
        """Per-member axis intercepts of ``(1/n) Γ(I_n)``."""
        return [P.axis_intercepts() for P in self.scaled]

    def running_intercepts(self) -> list[tuple[Optional[Fraction], ...]]:
        """Axis intercepts of the union of the first ``n`` scaled polyhedra."""
        out, best = [], [None] * self.dim
        for row in self.axis_intercepts():
            best = [b if t is None or (b is not None and b <= t) else t for b, t in zip(best, row)]
            out.append(tuple(best))
        return out

    def record_intercepts(self) -> list[tuple[int, tuple[Optional[Fraction], ...]]]:
        """``(n, intercepts)`` at each ``n`` where the running union gains on some axis."""
        out, prev = [], None
        for n, row in enumerate(self.running_intercepts(), start=1):
            if row != prev:
                out.append((n, row))
            prev = row
        return out


def _stable_at(scaled: Sequence[StaircasePolyhedron], c: int) -> bool:
    n = len(scaled)
    return all(equals(scaled[c - 1], scaled[k * c - 1]) for k in range(2, n // c + 1))


def limiting_body(F: FamilySpec, budget: int) -> LimitingBody:
    """Scaled Newton polyhedra of the prefix and the stabilization index, if any.

    ``c`` is the declared period when one is given, the prefix agrees with
    it and ``I_c`` passes the screen below.  Otherwise it is the smallest ``c`` with ``2c <= N`` such that every
    available multiple satisfies ``(1/c) Γ(I_c) = (1/kc) Γ(I_kc)`` and ``I_c``
    passes the cheap m-primary screen (at least ``d`` generators, co-finite
    Newton polyhedron).
    """
    n = F.available(budget)
    gammas = {k: F.gamma(k) for k in range(1, n + 1)}
    check_graded(F, n, gammas)
    scaled = tuple(scale(gammas[k], Fraction(1, k)) for k in range(1, n + 1))
    for k in range(1, n + 1):
        for j in range(2, n // k + 1):
            if not subset(scaled[k - 1], scaled[k * j - 1]):
                raise GradednessViolation(f"(1/{k})Γ(I_{k}) is not inside (1/{k * j})Γ(I_{k * j})")
    c = None
    if F.kind == "power":
        c = 1
    elif F.period is not None:
        if F.period <= n and _stable_at(scaled, F.period) and _maybe_primary(F.member(F.period)):
            c = F.period
    else:
        for cand in range(1, n // 2 + 1):
            if _stable_at(scaled, cand) and _maybe_primary(F.member(cand)):
                c = cand
                break
    return LimitingBody(F.dim, n, scaled, c, F.period)


@dataclass(frozen=True)
class NoetherianReport:
    verdict: str
    c: Optional[int]
    budget: int
    basis: str
    nnd_family: Optional[bool]


def noetherian_report(F: FamilySpec, budget: int, body: LimitingBody | None = None) -> NoetherianReport:
    body = body or limiting_body(F, budget)
    nnd_family = None
    if F.dim == 2:
        # from c on every member's closure is governed by I_c
        if F.kind == "power":
            nnd_family = is_nnd_face(F.base)
        elif body.stabilized:
            nnd_family = is_nnd_face(F.member(body.c))
        else:
            nnd_family = all(is_nnd_face(F.member(k)) for k in range(1, body.budget + 1))
    if not body.stabilized:
        return NoetherianReport(NON_POLYHEDRAL, None, body.budget, "scaled polyhedra never stabilize on the prefix", nnd_family)
    if F.kind == "power":
        return NoetherianReport(CERTIFIED, body.c, body.budget, "power family", nnd_family)
    if F.period is not None:
        return NoetherianReport(CERTIFIED, body.c, body.budget, "declared period: I_kc = I_c^k", nnd_family)
    basis = "stabilization on an NND prefix" if nnd_family else "stabilization on the prefix"
    return NoetherianReport(CONSISTENT, body.c, body.budget, basis, nnd_family)


def family_multiplicity(F: FamilySpec, c: int, **budget) -> Fraction:
    """``e(I_c) / c^d``."""
    return Fraction(multiplicity(F.member(c), **budget), c ** F.dim)


@dataclass(frozen=True)
class MultVolumeVerdict:
    c: int
    multiplicity: Fraction
    d_factorial_covolume: Fraction
    failing_faces: tuple[CompactFace, ...] = ()

    @property
    def equal(self) -> bool:
        return self.multiplicity == self.d_factorial_covolume

    @property
    def gap(self) -> Fraction:
        return self.multiplicity - self.d_factorial_covolume

    @property
    def nnd_certified(self) -> bool:
        """Equality certifies that ``I_c`` (and hence every ``I_kc``) is NND."""
        return self.equal


def mult_equals_covol_check(F: FamilySpec, c: int, **budget) -> MultVolumeVerdict:
    """Compare ``e(I_c)/c^d`` with ``d! covol((1/c) Γ(I_c))``."""
    e = family_multiplicity(F, c, **budget)
    body = scale(F.gamma(c), Fraction(1, c))
    vol = math.factorial(F.dim) * covolume(body)
    faces: tuple[CompactFace, ...] = ()
    if e != vol and F.dim == 2:
        faces = tuple(failing_faces(F.member(c)))
    return MultVolumeVerdict(c, e, vol, faces)
