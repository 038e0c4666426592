from fractions import Fraction

import pytest

from app.algebra import AlgebraicNumber, RatInterval, parse_mpoly
from app.utils.errors import SpecificationError
from app.verify import (
    BoundConstraint, ClaimStatus, PolyConstraint, bound_condition, decide_univariate, poly_condition,
    prove, prove_implication_on_box, prove_sign_on_box,
)
from app.verify.prover import EXHAUSTED, PROVED, REFUTED, Segment, covered

AB = ("a", "b")
X = ("x",)
UNIT = {"a": RatInterval(0, 1), "b": RatInterval(0, 1)}


def P(text, variables=AB):
    return parse_mpoly(text, variables)


def test_disjoint_half_planes_are_infeasible():
    cs = [PolyConstraint(P("a + b - 1"), True), PolyConstraint(P("1/2 - a - b"), False)]
    assert prove(AB, UNIT, cs).status == PROVED


def test_feasible_system_returns_an_exact_witness():
    cs = [PolyConstraint(P("a*b - 1/5"), True), PolyConstraint(P("b - a"), False)]
    result = prove(AB, UNIT, cs)
    assert result.status == REFUTED
    assert all(c.satisfied_at(result.witness) for c in cs)


def test_algebraic_bounds_take_part():
    sqrt2 = AlgebraicNumber.from_root([-2, 0, 1], 1, 2)
    box = {"a": RatInterval(0, 2), "b": RatInterval(0, 2)}
    cs = [BoundConstraint("a", lower=True, strict=True, threshold=sqrt2), PolyConstraint(P("19/10 - a^2"), False)]
    assert prove(AB, box, cs).status == PROVED


def test_budget_is_respected():
    box = {"a": RatInterval(0, 2), "b": RatInterval(0, 2)}
    cs = [PolyConstraint(P("2 - a^2 - b^2"), False), PolyConstraint(P("a + b - 41/20"), False)]
    result = prove(AB, box, cs, budget=1)
    assert result.status in (PROVED, EXHAUSTED)
    assert result.boxes <= 1


def test_constraints_outside_the_claim_variables():
    with pytest.raises(SpecificationError):
        prove(("a",), {"a": RatInterval(0, 1)}, [PolyConstraint(P("a - b"), False)])
    with pytest.raises(SpecificationError):
        decide_univariate("x", {"x": RatInterval(0, 1)}, [BoundConstraint("y", True, False, AlgebraicNumber.rational(0))])


def test_univariate_witness_can_be_irrational():
    cs = [PolyConstraint(P("x^2 - 2", X), False),
          BoundConstraint("x", lower=False, strict=False, threshold=AlgebraicNumber.rational(Fraction(3, 2)))]
    result = decide_univariate("x", {"x": RatInterval(0, 2)}, cs)
    assert result.status == REFUTED
    witness = result.witness["x"]
    assert isinstance(witness, AlgebraicNumber)
    assert float(witness) == pytest.approx(2 ** 0.5)


def test_univariate_strict_boundaries():
    sqrt2 = AlgebraicNumber.from_root([-2, 0, 1], 1, 2)
    cs = [PolyConstraint(P("x^2 - 2", X), True), BoundConstraint("x", lower=False, strict=True, threshold=sqrt2)]
    assert decide_univariate("x", {"x": RatInterval(0, 2)}, cs).status == PROVED


def test_univariate_open_piece_witness():
    cs = [PolyConstraint(P("(x - 1)*(x - 2)", X), True)]
    result = decide_univariate("x", {"x": RatInterval(1, 2)}, cs)
    assert result.status == PROVED
    result = decide_univariate("x", {"x": RatInterval(0, 2)}, cs)
    assert result.status == REFUTED
    assert result.witness["x"] < 1


def test_segments_cover():
    one = AlgebraicNumber.rational(1)
    two = AlgebraicNumber.rational(2)
    three = AlgebraicNumber.rational(3)
    whole = Segment(one, True, three, True)
    assert covered(whole, [Segment(one, True, two, True), Segment(two, True, three, True)])
    assert not covered(whole, [Segment(one, True, two, False), Segment(two, False, three, True)])


def test_sign_on_box():
    report = prove_sign_on_box(P("a^2 + b^2 + 1"), {"a": (-1, 1), "b": (-1, 1)}, ">")
    assert report.status == ClaimStatus.PROVED
    report = prove_sign_on_box(P("a - b"), {"a": (0, 1), "b": (0, 1)}, ">=")
    assert report.status == ClaimStatus.REFUTED
    assert report.witness is not None


def test_sign_on_box_within_a_domain():
    report = prove_sign_on_box(P("b - a + 1/100"), {"a": (0, 1), "b": (0, 1)}, ">",
                               domain=[poly_condition(P("b - a"), ">=")])
    assert report.status == ClaimStatus.PROVED


def test_implication_on_box():
    report = prove_implication_on_box([bound_condition("a", ">=", Fraction(1, 2))],
                                      poly_condition(P("a^2 - 1/4"), ">="), {"a": (0, 1), "b": (0, 1)})
    assert report.status == ClaimStatus.PROVED
    report = prove_implication_on_box([bound_condition("a", ">=", Fraction(1, 3))],
                                      poly_condition(P("a^2 - 1/4"), ">="), {"a": (0, 1), "b": (0, 1)})
    assert report.status == ClaimStatus.REFUTED


def test_ring_shaped_region_needs_subdivision():
    # 1 <= a^2 + b^2 <= 2 with a + b >= 2.05 has no point
    box = {"a": RatInterval(0, 2), "b": RatInterval(0, 2)}
    cs = [PolyConstraint(P("a^2 + b^2 - 1"), False), PolyConstraint(P("2 - a^2 - b^2"), False),
          PolyConstraint(P("a + b - 41/20"), False)]
    result = prove(AB, box, cs)
    assert result.status == PROVED
    assert result.boxes >= 1
