# app/typeclass/schemas.py
import math
from enum import Enum
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from app.algebra.interval import RatInterval
from app.algebra.rational import decimal_text
from app.utils.errors import InputError

INF = math.inf


def n_label(n) -> str:
    return "inf" if n == INF else str(n)


class Triple(BaseModel):
    model_config = ConfigDict(frozen=True)

    n1: Union[int, float]
    n2: Union[int, float]
    n3: Union[int, float]

    @field_validator("n1", "n2", "n3")
    @classmethod
    def order_entry(cls, v):
        if v == INF:
            return INF
        if isinstance(v, float) and not v.is_integer():
            raise ValueError(f"{v} is not an integer")
        v = int(v)
        if v < 3:
            raise ValueError(f"every n must be >= 3 or inf, got {v}")
        return v

    @model_validator(mode="after")
    def ordered(self):
        if not (self.n1 <= self.n2 <= self.n3):
            raise ValueError(f"triple must satisfy n1 <= n2 <= n3, got {self.label()}")
        return self

    @classmethod
    def of(cls, n1, n2, n3) -> "Triple":
        try:
            return cls(n1=n1, n2=n2, n3=n3)
        except ValidationError as exc:
            messages = "; ".join(err["msg"] for err in exc.errors())
            raise InputError(messages, code="INVALID_TRIPLE")

    def entries(self) -> tuple:
        return (self.n1, self.n2, self.n3)

    def label(self) -> str:
        return f"({', '.join(n_label(n) for n in self.entries())})"

    def to_dict(self) -> dict:
        return {"n1": n_label(self.n1), "n2": n_label(self.n2), "n3": n_label(self.n3)}


class AngleParams(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    triple: Triple
    r1: RatInterval
    r2: RatInterval
    r3: RatInterval
    a: RatInterval
    b: RatInterval
    c: RatInterval
    precision: int = Field(..., description="enclosure width is at most 2^-precision")
    t: Optional[RatInterval] = None
    T: Optional[RatInterval] = None

    def abc(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}

    def r_product(self) -> RatInterval:
        return self.r1 * self.r2 * self.r3


class VerdictType(str, Enum):
    A = "A"
    B = "B"
    INDETERMINATE = "Indeterminate"


class Method(str, Enum):
    POLYNOMIAL = "polynomial"
    ORACLE = "oracle"


def significant_text(value, digits: int = 12) -> str:
    """Decimal rendering with `digits` significant digits (exact input, no float formatting)."""
    if value == 0:
        return "0"
    magnitude = math.floor(math.log10(abs(float(value)))) if float(value) else -300
    places = max(digits - 1 - magnitude, 0)
    return decimal_text(value, places)


class TypeVerdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    triple: Triple
    F_enclosure: Optional[RatInterval] = None
    type: VerdictType
    precision_used: int
    method: Method = Method.POLYNOMIAL
    detail: Optional[str] = None

    def F_mid_text(self) -> Optional[str]:
        if self.F_enclosure is None:
            return None
        return significant_text(self.F_enclosure.mid)

    def to_dict(self) -> dict:
        out = {
            "triple": self.triple.to_dict(),
            "type": self.type.value,
            "precision_bits": self.precision_used,
            "method": self.method.value,
        }
        if self.F_enclosure is not None:
            out["F"] = {**self.F_enclosure.to_dict(), "mid": self.F_mid_text()}
        if self.detail:
            out["detail"] = self.detail
        return out


class CriticalInterval(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    triple: Triple
    empty: bool
    lower: Optional[RatInterval] = None
    upper: Optional[RatInterval] = None
    lower_closed: bool = True
    upper_closed: bool = True
    T_A: Optional[RatInterval] = None
    fB_roots: list[RatInterval] = Field(default_factory=list)
    deformation_lower: Optional[RatInterval] = None
    deformation_upper: Optional[RatInterval] = None   # open end, T = r1 r2 r3 t_u

    def to_dict(self) -> dict:
        out = {"triple": self.triple.to_dict(), "empty": self.empty}
        if self.empty:
            return out
        out.update({
            "lower": self.lower.to_dict(),
            "upper": self.upper.to_dict(),
            "lower_closed": self.lower_closed,
            "upper_closed": self.upper_closed,
            "T_A": self.T_A.to_dict(),
            "fB_roots": [r.to_dict() for r in self.fB_roots],
            "deformation": {"lower": self.deformation_lower.to_dict(),
                            "upper_open": self.deformation_upper.to_dict()},
        })
        return out

