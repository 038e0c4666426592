# app/verify/constraints.py
"""
Claim-level conditions and the constraint language the prover works in.

A condition is "poly REL 0" or "var REL threshold" with REL one of > >= < <=.
The prover only sees constraints: g > 0 / g >= 0, and one-sided variable bounds
against exact algebraic thresholds.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from app.algebra.algebraic import AlgebraicNumber
from app.algebra.interval import RatInterval
from app.algebra.mpoly import MPoly
from app.algebra.rational import rat_text, sign
from app.utils.errors import InputError

RELATIONS = (">", ">=", "<", "<=")
NEGATE = {">": "<=", ">=": "<", "<": ">=", "<=": ">"}


def _check_relation(rel: str):
    if rel not in RELATIONS:
        raise InputError(f"unknown relation {rel!r}", code="BAD_RELATION")


def enclose(poly: MPoly, box: Mapping[str, RatInterval]) -> RatInterval:
    return RatInterval.of(poly.evaluate(box))


@dataclass(eq=False)
class PolyConstraint:
    poly: MPoly
    strict: bool

    def satisfied_at(self, point: Mapping) -> bool:
        s = sign(self.poly.evaluate(point))
        return s > 0 if self.strict else s >= 0

    def holds_on(self, box: Mapping[str, RatInterval]) -> bool:
        e = enclose(self.poly, box)
        return e.lo > 0 if self.strict else e.lo >= 0

    def violated_on(self, box) -> bool:
        return False

    @property
    def is_linear(self) -> bool:
        return self.poly.total_degree() == 1


@dataclass(eq=False)
class BoundConstraint:
    """var > threshold (lower) or var < threshold (upper), closed when not strict."""

    var: str
    lower: bool
    strict: bool
    threshold: AlgebraicNumber

    def satisfied_at(self, point: Mapping) -> bool:
        s = self.threshold.compare_rational(point[self.var])
        if self.lower:
            return s < 0 if self.strict else s <= 0
        return s > 0 if self.strict else s >= 0

    def holds_on(self, box: Mapping[str, RatInterval]) -> bool:
        iv = box[self.var]
        if self.lower:
            s = self.threshold.compare_rational(iv.lo)
            return s < 0 if self.strict else s <= 0
        s = self.threshold.compare_rational(iv.hi)
        return s > 0 if self.strict else s >= 0

    def violated_on(self, box: Mapping[str, RatInterval]) -> bool:
        iv = box[self.var]
        if self.lower:
            s = self.threshold.compare_rational(iv.hi)
            return s >= 0 if self.strict else s > 0
        s = self.threshold.compare_rational(iv.lo)
        return s <= 0 if self.strict else s < 0


Constraint = PolyConstraint | BoundConstraint


class Condition:
    """One side of a claim: `label REL 0` for polynomials, `var REL threshold` for bounds."""

    __slots__ = ("rel", "poly", "var", "threshold", "label", "threshold_text")

    def __init__(self, rel: str, poly: Optional[MPoly] = None, var: Optional[str] = None,
                 threshold: Optional[AlgebraicNumber] = None, label: str = "", threshold_text: str = ""):
        _check_relation(rel)
        self.rel = rel
        self.poly = poly
        self.var = var
        self.threshold = threshold
        self.label = label
        self.threshold_text = threshold_text
        if (self.poly is None) == (self.var is None):
            raise InputError("a condition is either polynomial or a variable bound", code="BAD_CLAIM")

    @property
    def is_bound(self) -> bool:
        return self.var is not None

    def negated(self) -> "Condition":
        return Condition(rel=NEGATE[self.rel], poly=self.poly, var=self.var, threshold=self.threshold,
                         label=self.label, threshold_text=self.threshold_text)

    def constraint(self) -> Constraint:
        strict = self.rel in (">", "<")
        if self.is_bound:
            return BoundConstraint(self.var, self.rel in (">", ">="), strict, self.threshold)
        g = self.poly if self.rel in (">", ">=") else -self.poly
        return PolyConstraint(g, strict)

    def holds_at(self, point: Mapping) -> bool:
        return self.constraint().satisfied_at(point)

    def text(self) -> str:
        if self.is_bound:
            return f"{self.var} {self.rel} {self.threshold_text or self.threshold}"
        return f"{self.label or self.poly} {self.rel} 0"


def poly_condition(poly: MPoly, rel: str, label: str = "") -> Condition:
    return Condition(rel=rel, poly=poly, label=label)


def bound_condition(var: str, rel: str, threshold, text: str = "") -> Condition:
    if not isinstance(threshold, AlgebraicNumber):
        threshold = AlgebraicNumber.rational(threshold)
        text = text or rat_text(threshold.interval.lo)
    return Condition(rel=rel, var=var, threshold=threshold, threshold_text=text)


def point_text(point: Mapping) -> dict:
    return {v: rat_text(x) if isinstance(x, Fraction) else str(x) for v, x in point.items()}
