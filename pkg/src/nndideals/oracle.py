"""Brute-force Hilbert-Samuel oracle.

Colengths are computed in the finite-dimensional algebra ``k[x]/m^N``: the
image of the ideal there is the smallest subspace containing the truncated
generators and closed under multiplication by each variable.  It is built by
exact integer row reduction.  Once ``m^N`` lies in the ideal the truncated
colength is the true colength ``l(R/I)``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceeded, NotPrimary, StabilizationBudgetExceeded
from .series import IdealPresentation, newton_polyhedron, power_ideal

DEFAULT_MAX_TRUNCATION = 40
DEFAULT_POWER_BUDGET = 8
DEFAULT_WINDOW = 3


class _MonomialIndex:
    """Monomials of total degree < N, numbered by (degree, exponent)."""

    def __init__(self, dim: int, N: int):
        self.dim = dim
        self.N = N
        monos = []
        for deg in range(N):
            block = [e for e in itertools.product(range(deg + 1), repeat=dim) if sum(e) == deg]
            monos.extend(sorted(block, reverse=True))
        self.monomials = monos
        self.index = {m: i for i, m in enumerate(monos)}
        self.shift = []
        for k in range(dim):
            row = []
            for m in monos:
                up = m[:k] + (m[k] + 1,) + m[k + 1:]
                row.append(self.index.get(up))
            self.shift.append(row)

    def __len__(self) -> int:
        return len(self.monomials)


@dataclass
class TruncatedQuotient:
    """``k[x]/(I + m^N)`` described by its basis size and the rank of the ideal's image."""

    dim: int
    N: int
    basis_size: int
    ideal_span: int

    @property
    def colength(self) -> int:
        return self.basis_size - self.ideal_span


def _integer_row(gen, index: _MonomialIndex) -> dict[int, int]:
    den = 1
    for _, c in gen.terms:
        den = math.lcm(den, c.denominator)
    row = {}
    for exp, c in gen.terms:
        i = index.index.get(exp)
        if i is not None:
            row[i] = int(c * den)
    return row


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (1,):
        row = {k: v // g for k, v in row.items()}
    return row


def truncated_quotient(I: IdealPresentation, N: int) -> TruncatedQuotient:
    """Span of the image of ``I`` in ``k[x]/m^N`` (exact, fraction-free)."""
    if N < 1:
        raise ValueError(f"truncation degree must be positive, got {N}")
    index = _MonomialIndex(I.dim, N)
    pivots: dict[int, dict[int, int]] = {}
    queue = deque(_integer_row(g, index) for g in I.generators)
    while queue:
        v = queue.popleft()
        while v:
            p = min(v)
            row = pivots.get(p)
            if row is None:
                break
            a, b = row[p], v[p]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * c for k, c in v.items()}
            for k, c in row.items():
                val = new.get(k, 0) - b * c
                if val:
                    new[k] = val
                else:
                    new.pop(k, None)
            v = new
        if not v:
            continue
        v = _normalize(v)
        pivots[min(v)] = v
        for shift in index.shift:
            moved = {shift[k]: c for k, c in v.items() if shift[k] is not None}
            if moved:
                queue.append(moved)
    return TruncatedQuotient(I.dim, N, len(index), len(pivots))


def colength_truncated(I: IdealPresentation, N: int) -> int:
    """``dim_Q k[x]/(I + m^N)``."""
    return truncated_quotient(I, N).colength


def _screen_primary(I: IdealPresentation) -> None:
    if any(sum(e) == 0 for g in I.generators for e, _ in g.terms):
        raise NotPrimary("a generator is a unit, so the ideal is the whole ring")
    if len(I.generators) < I.dim:
        raise NotPrimary(f"{len(I.generators)} generators cannot give an m-primary ideal in dimension {I.dim}")
    if not newton_polyhedron(I).is_cofinite():
        raise NotPrimary("the Newton polyhedron misses a coordinate axis")


def _start_degree(I: IdealPresentation) -> int:
    # x_i^N in I forces N >= the axis intercept of the Newton polyhedron
    intercepts = newton_polyhedron(I).axis_intercepts()
    return max(1, max(math.ceil(t) for t in intercepts))


def stabilization(
    I: IdealPresentation,
    max_truncation: int = DEFAULT_MAX_TRUNCATION,
    window: int = DEFAULT_WINDOW,
) -> tuple[int, int]:
    """Return ``(N, colength)`` for the first ``N`` whose truncated colengths agree over the window.

    Equal colengths at ``N`` and ``N + 1`` already force ``m^N`` into the ideal
    (Nakayama), so ``N`` is a certified truncation degree for ``I``.
    """
    _screen_primary(I)
    N = _start_degree(I)
    values: dict[int, int] = {}
    while N + window - 1 <= max_truncation:
        for k in range(N, N + window):
            if k not in values:
                values[k] = colength_truncated(I, k)
        run = [values[k] for k in range(N, N + window)]
        if len(set(run)) == 1:
            return N, run[0]
        N += 1
    raise StabilizationBudgetExceeded(
        f"truncated colength of {I} did not stabilize up to degree {max_truncation}"
    )


def colength_stable(
    I: IdealPresentation,
    max_truncation: int = DEFAULT_MAX_TRUNCATION,
    window: int = DEFAULT_WINDOW,
) -> int:
    """``l(R/I)`` for an m-primary ideal."""
    return stabilization(I, max_truncation, window)[1]


def hilbert_samuel_values(
    I: IdealPresentation,
    count: int,
    max_truncation: int = DEFAULT_MAX_TRUNCATION,
) -> list[int]:
    """``[l(R/I), l(R/I^2), ..., l(R/I^count)]``."""
    N1, first = stabilization(I, max_truncation)
    values = [first]
    for n in range(2, count + 1):
        # m^N1 in I gives m^(n*N1) in I^n
        values.append(colength_truncated(power_ideal(I, n), n * N1))
    return values


def _differences(values: list[int], order: int) -> list[int]:
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


def multiplicity(
    I: IdealPresentation,
    budget: int = DEFAULT_POWER_BUDGET,
    max_truncation: int = DEFAULT_MAX_TRUNCATION,
    window: int = DEFAULT_WINDOW,
) -> int:
    """Hilbert-Samuel multiplicity ``e(I)`` of an m-primary ideal.

    A presentation with exactly ``d`` generators is a complete intersection and
    ``e(I) = l(R/I)``.  Otherwise ``l(R/I^n)`` is computed for growing ``n`` and
    the ``d``-th finite difference is returned once it is constant over
    ``window`` consecutive positions.
    """
    d = I.dim
    if len(I.generators) == d:
        return colength_stable(I, max_truncation, window)
    N1, first = stabilization(I, max_truncation, window)
    values = [first]
    for n in range(2, budget + 1):
        values.append(colength_truncated(power_ideal(I, n), n * N1))
        diffs = _differences(values, d)
        if len(diffs) >= window and len(set(diffs[-window:])) == 1:
            return diffs[-1]
    raise BudgetExceeded(
        f"{d}-th differences of l(R/I^n) for {I} not constant over {window} terms up to n = {budget}"
    )
