# app/verify/schemas.py
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.algebra.interval import RatInterval
from app.algebra.mpoly import MPoly
from app.verify.constraints import Condition


class ClaimKind(str, Enum):
    IDENTITY = "Identity"
    SIGN_ON_BOX = "SignOnBox"
    IMPLICATION_ON_BOX = "ImplicationOnBox"


class ClaimStatus(str, Enum):
    PROVED = "Proved"
    REFUTED = "Refuted"
    BUDGET_EXHAUSTED = "BudgetExhausted"


class Claim(BaseModel):
    """
    One machine-checkable statement.

    Identity claims compare `sides` pairwise (each pair already multiplied through by
    `denominator` when there is one). Box claims assert that on `box`, within
    `domain`, the conjunction of `hypotheses` implies the disjunction `conclusion`.
    A sign claim is the case with no hypotheses.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    id: str
    kind: ClaimKind
    statement: str
    variables: tuple[str, ...] = ()
    box: dict[str, RatInterval] = Field(default_factory=dict)
    domain: list[Condition] = Field(default_factory=list)
    hypotheses: list[Condition] = Field(default_factory=list)
    conclusion: list[Condition] = Field(default_factory=list)
    sides: list[tuple[MPoly, MPoly]] = Field(default_factory=list)
    denominator: Optional[MPoly] = None
    polys: dict[str, MPoly] = Field(default_factory=dict)
    note: Optional[str] = None
    expect: ClaimStatus = ClaimStatus.PROVED

    @property
    def is_canary(self) -> bool:
        return self.expect == ClaimStatus.REFUTED

    def describe(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind.value,
            "statement": self.statement,
            "variables": list(self.variables),
            "box": {v: iv.to_dict() for v, iv in self.box.items()},
            "polys": sorted(self.polys),
            "note": self.note,
            "expect": self.expect.value,
        }


class ClaimReport(BaseModel):
    id: str
    kind: ClaimKind
    status: ClaimStatus
    effort: int
    witness: Optional[dict[str, str]] = None
    elapsed: float = 0.0
    note: Optional[str] = None
    expect: ClaimStatus = ClaimStatus.PROVED
    details: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.status == self.expect

    def to_dict(self, timing: bool = True) -> dict:
        out = {"id": self.id, "kind": self.kind.value, "status": self.status.value, "effort": self.effort,
               "expect": self.expect.value, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        if self.details:
            out["details"] = self.details
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out
