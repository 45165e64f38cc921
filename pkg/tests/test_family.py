import itertools
import math
from fractions import Fraction as Q

import pytest

from nndideals import examples
from nndideals.errors import DomainError, GradednessViolation
from nndideals.family import (
    CERTIFIED,
    CONSISTENT,
    NON_POLYHEDRAL,
    FamilySpec,
    check_graded,
    family_multiplicity,
    limiting_body,
    mult_equals_covol_check,
    noetherian_report,
)
from nndideals.geometry import contains_point, covolume, hull_staircase, scale, subset
from nndideals.monomial import MonomialIdeal
from nndideals.series import IdealPresentation, LocalElement


def el(terms, dim=2):
    return LocalElement.from_dict(dim, terms)


def monomial_ideal(*exps):
    return MonomialIdeal(exps).as_presentation()


SQUARES = IdealPresentation([el({(2, 0): 1, (0, 2): 1}), el({(1, 1): 1})])


class TestFamilySpec:
    def test_members(self):
        F = FamilySpec.power(SQUARES)
        assert F.member(1) is SQUARES
        assert F.gamma(3) == scale(hull_staircase([(2, 0), (0, 2)]), 3)
        G = examples.period_two_family(4)
        assert G.available(10) == 4
        with pytest.raises(DomainError):
            G.member(5)
        with pytest.raises(DomainError):
            G.member(0)

    def test_invalid(self):
        with pytest.raises(DomainError):
            FamilySpec.from_prefix([])
        with pytest.raises(DomainError):
            FamilySpec("other", 2)
        with pytest.raises(DomainError):
            FamilySpec.from_prefix([SQUARES], period=0)
        with pytest.raises(DomainError):
            FamilySpec.power(SQUARES).available(0)

    def test_gradedness_violation(self):
        # I_2 = (x^3, y^3) does not contain I_1^2 = (x, y)^2
        F = FamilySpec.from_prefix([monomial_ideal((1, 0), (0, 1)), monomial_ideal((3, 0), (0, 3))])
        with pytest.raises(GradednessViolation):
            check_graded(F, 2)
        with pytest.raises(GradednessViolation):
            limiting_body(F, 2)

    def test_monomial_containment_checked(self):
        # polyhedra nest but x y is missing from I_2 (its closure contains it)
        F = FamilySpec.from_prefix([monomial_ideal((1, 0), (0, 1)), monomial_ideal((2, 0), (0, 2))])
        with pytest.raises(GradednessViolation):
            check_graded(F, 2)


class TestLimitingBody:
    def test_power_family(self):
        body = limiting_body(FamilySpec.power(examples.degenerate_ideal()), 5)
        assert body.c == 1 and body.closure == hull_staircase([(4, 0), (2, 1), (1, 2), (0, 4)])

    def test_period_two(self):
        for declare in (True, False):
            body = limiting_body(examples.period_two_family(8, declare), 8)
            assert body.c == 2
            assert body.closure == hull_staircase([(1, 0), (0, 1)])
            assert body.status == "stabilized at c = 2"

    def test_declared_period_must_match(self):
        F = FamilySpec.from_rule(2, examples.half_ceiling_member, period=2)
        assert limiting_body(F, 8).c is None
        # every scaled member is x + y >= 1, but I_1 = (x + y) is not m-primary
        G = FamilySpec.from_prefix([examples.period_two_member(n) for n in range(1, 7)], period=1)
        assert limiting_body(G, 6).c is None
        H = FamilySpec.from_prefix([examples.period_two_member(n) for n in range(1, 7)], period=3)
        assert limiting_body(H, 6).c == 3

    def test_half_ceiling(self):
        body = limiting_body(examples.half_ceiling_family(), 40)
        assert not body.stabilized and body.status == "not-stabilized-up-to-40"
        for k, row in enumerate(body.axis_intercepts(), start=1):
            assert row == (Q(math.ceil(k / 2) + 1, k),) * 2
        records = [row[0] for _, row in body.record_intercepts()]
        assert all(a > b for a, b in zip(records, records[1:]))
        assert records[-1] == Q(21, 40)

    def test_scaling_chain_and_convexity(self):
        F = examples.period_two_family(8)
        body = limiting_body(F, 8)
        for n, k in itertools.product(range(1, 9), repeat=2):
            if n * k <= 8:
                assert subset(body.scaled[n - 1], body.scaled[n * k - 1])
        for a, b in itertools.product(range(1, 9), repeat=2):
            if a * b > 8:
                continue
            for u in body.scaled[a - 1].vertices:
                for v in body.scaled[b - 1].vertices:
                    mid = tuple((p + q) / 2 for p, q in zip(u, v))
                    assert contains_point(body.scaled[a * b - 1], mid)

    def test_covolume_of_closure(self):
        F = examples.period_two_family(8)
        body = limiting_body(F, 8)
        assert covolume(body.closure) == covolume(F.gamma(2)) / 4 == Q(1, 2)


class TestReports:
    def test_power_family_certified(self):
        rep = noetherian_report(FamilySpec.power(SQUARES), 4)
        assert rep.verdict == CERTIFIED and rep.c == 1 and rep.nnd_family

    def test_half_ceiling(self):
        rep = noetherian_report(examples.half_ceiling_family(), 40)
        assert rep.verdict == NON_POLYHEDRAL and rep.c is None

    def test_period_two(self):
        assert noetherian_report(examples.period_two_family(8), 8).verdict == CERTIFIED
        rep = noetherian_report(examples.period_two_family(8, declare=False), 8)
        assert rep.verdict == CONSISTENT and rep.c == 2 and rep.nnd_family


class TestMultiplicity:
    def test_family_multiplicity(self):
        assert family_multiplicity(examples.period_two_family(8), 2) == 1
        assert family_multiplicity(FamilySpec.power(examples.degenerate_ideal()), 1) == 12
        for a, b in [(2, 3), (1, 4)]:
            F = FamilySpec.power(monomial_ideal((a, 0), (0, b)))
            assert family_multiplicity(F, 1) == a * b

    def test_equal(self):
        v = mult_equals_covol_check(examples.period_two_family(8), 2)
        assert v.equal and v.nnd_certified and v.multiplicity == 1 and v.d_factorial_covolume == 1

    def test_unequal(self):
        v = mult_equals_covol_check(FamilySpec.power(examples.degenerate_ideal()), 1)
        assert not v.equal and v.gap == 1 and (v.multiplicity, v.d_factorial_covolume) == (12, 11)
        assert [str(f) for f in v.failing_faces] == ["conv{(1,2), (2,1)}"]

    def test_monomial_power_family(self):
        F = FamilySpec.power(monomial_ideal((3, 0), (1, 1), (0, 2)))
        v = mult_equals_covol_check(F, 1)
        assert v.equal and v.multiplicity >= v.d_factorial_covolume

    def test_inequality_on_stabilized_families(self):
        for F, c in [
            (examples.period_two_family(8), 2),
            (FamilySpec.power(examples.degenerate_ideal()), 1),
            (FamilySpec.power(examples.J(3)), 1),
        ]:
            v = mult_equals_covol_check(F, c)
            assert v.multiplicity >= v.d_factorial_covolume
