# app/enumeration/schemas.py
from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, model_validator

from app.algebra.interval import RatInterval
from app.typeclass.schemas import INF, Triple, TypeVerdict, VerdictType, n_label, significant_text


class RowKind(str, Enum):
    FINITE = "finite"            # n3 >= min_n3, min_n3 > n2
    ALL_FROM_N2 = "all_from_n2"  # every n3 >= n2 is type A
    NONE = "none"                # no n3, finite or infinite, is type A


class TableRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n1: Union[int, float]
    n2: Union[int, float]
    kind: RowKind
    min_n3: Optional[Union[int, float]] = None
    evaluations: int = 0

    def to_dict(self) -> dict:
        return {
            "n1": n_label(self.n1),
            "n2": n_label(self.n2),
            "kind": self.kind.value,
            "min_n3": None if self.min_n3 is None else n_label(self.min_n3),
        }

    @property
    def is_infinity_column(self) -> bool:
        return self.n2 == INF


class Table1Row(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    triple: Triple
    F: RatInterval
    type: VerdictType
    printed_F: str
    printed_type: VerdictType

    @property
    def F_text(self) -> str:
        return significant_text(self.F.mid, 6)

    @property
    def matches(self) -> bool:
        return self.type == self.printed_type and f"{float(self.F.mid):.6g}" == f"{float(self.printed_F):.6g}"

    def to_dict(self) -> dict:
        return {
            "triple": self.triple.to_dict(),
            "F": {**self.F.to_dict(), "mid": self.F_text},
            "type": self.type.value,
            "printed_F": self.printed_F,
            "printed_type": self.printed_type.value,
            "matches": self.matches,
        }


class ScanBounds(BaseModel):
    """Inclusive ranges; only ordered triples n1 <= n2 <= n3 inside them are visited."""

    n1: tuple[int, int]
    n2: tuple[int, int]
    n3: tuple[int, int]

    @model_validator(mode="after")
    def well_formed(self):
        for name in ("n1", "n2", "n3"):
            lo, hi = getattr(self, name)
            if lo < 3 or lo > hi:
                raise ValueError(f"{name} range {lo}..{hi} must satisfy 3 <= lo <= hi")
        return self


def implied_verdict(triple: Triple, source: Triple) -> TypeVerdict:
    return TypeVerdict(triple=triple, type=VerdictType.A, precision_used=0,
                       detail=f"implied by {source.label()} (larger n3 keeps type A)")
