"""Worked examples used by the tests, the acceptance suite and ``nndideals ... @name``."""

from __future__ import annotations

import math
from typing import Callable

from .family import FamilySpec
from .series import IdealPresentation, LocalElement, power_ideal, product_ideal


def _poly(terms: dict[tuple[int, ...], int]) -> LocalElement:
    dim = len(next(iter(terms)))
    return LocalElement.from_dict(dim, terms)


def rsop_units_ideal() -> IdealPresentation:
    """``((x^2+1)(y^2+2), (y^2+2)^2)`` written in the parameters ``u = x^2+1, v = y^2+2``."""
    return IdealPresentation([_poly({(1, 1): 1}), _poly({(0, 2): 1})])


def rsop_principal_ideal() -> IdealPresentation:
    """``(u^2 v + u v^3)`` in the parameters ``u = x^2+1, v = y^2+2``."""
    return IdealPresentation([_poly({(2, 1): 1, (1, 3): 1})])


def three_variable_ideal() -> IdealPresentation:
    """``(x^4 + x^2 y^5 z^4, y^3 z - x^3 y z^2 + x y z^3)``."""
    return IdealPresentation([
        _poly({(4, 0, 0): 1, (2, 5, 4): 1}),
        _poly({(0, 3, 1): 1, (3, 1, 2): -1, (1, 1, 3): 1}),
    ])


def degenerate_ideal() -> IdealPresentation:
    """``(x^4 + y^4, x y^2 + x^2 y)``: co-volume 11/2 but multiplicity 12."""
    return IdealPresentation([_poly({(4, 0): 1, (0, 4): 1}), _poly({(1, 2): 1, (2, 1): 1})])


def J(m: int) -> IdealPresentation:
    """``(x^m + y^m, x^i y^(m-i) for 0 < i < m)``, whose closure is ``(x, y)^m``."""
    gens = [_poly({(m, 0): 1, (0, m): 1})]
    gens += [_poly({(m - i, i): 1}) for i in range(1, m)]
    return IdealPresentation(gens, 2)


def period_two_member(n: int) -> IdealPresentation:
    """``I_1 = (x+y)``, ``I_2k = (x^2+y^2, xy)^k``, ``I_2k+1 = I_1 I_2k``."""
    base = IdealPresentation([_poly({(2, 0): 1, (0, 2): 1}), _poly({(1, 1): 1})])
    lin = IdealPresentation([_poly({(1, 0): 1, (0, 1): 1})])
    if n == 1:
        return lin
    even = power_ideal(base, n // 2)
    return even if n % 2 == 0 else product_ideal(lin, even)


def period_two_family(length: int = 8, declare: bool = True) -> FamilySpec:
    members = [period_two_member(n) for n in range(1, length + 1)]
    note = "I_1=(x+y), I_2n=(x^2+y^2,xy)^n, I_2n+1=I_1 I_2n"
    return FamilySpec.from_prefix(members, period=2 if declare else None, note=note)


def half_ceiling_member(k: int) -> IdealPresentation:
    """``(x^a + y^a, x^i y^(a-i) for 0 < i < a)`` with ``a = ceil(k/2) + 1``."""
    return J(math.ceil(k / 2) + 1)


def half_ceiling_family() -> FamilySpec:
    return FamilySpec.from_rule(2, half_ceiling_member, note="I_k = J_(ceil(k/2)+1)")


def degenerate_power_family() -> FamilySpec:
    return FamilySpec.power(degenerate_ideal(), note="powers of (x^4+y^4, xy^2+x^2y)")


IDEALS: dict[str, Callable[[], IdealPresentation]] = {
    "rsop-units": rsop_units_ideal,
    "rsop-principal": rsop_principal_ideal,
    "three-variables": three_variable_ideal,
    "degenerate": degenerate_ideal,
    **{f"J{m}": (lambda m=m: J(m)) for m in range(2, 7)},
}

FAMILIES: dict[str, Callable[[], FamilySpec]] = {
    "period-two": period_two_family,
    "half-ceiling": half_ceiling_family,
    "degenerate-powers": degenerate_power_family,
}
