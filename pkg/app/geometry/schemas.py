# app/geometry/schemas.py
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class IsometryClass(str, Enum):
    LOXODROMIC = "Loxodromic"
    REGULAR_ELLIPTIC = "RegularElliptic"
    SPECIAL_BOUNDARY = "SpecialBoundary"
    ELLIPTIC_REAL_TRACE = "EllipticRealTrace"
    PARABOLIC_REAL_TRACE = "ParabolicRealTrace"

    @property
    def is_elliptic(self) -> bool:
        return self in (IsometryClass.REGULAR_ELLIPTIC, IsometryClass.ELLIPTIC_REAL_TRACE)


class GramForm(BaseModel):
    """
    G[i, j] pairs polar vectors i and j; r1 pairs (c2, c3), r2 pairs (c3, c1), r3 pairs (c1, c2).
    The generators preserve the transpose of G.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    G: np.ndarray
    r1: float
    r2: float
    r3: float
    theta: float

    @property
    def t(self) -> float:
        return float(np.cos(self.theta))


class Generators(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    I1: np.ndarray
    I2: np.ndarray
    I3: np.ndarray
    form: GramForm

    def by_index(self, k: int) -> np.ndarray:
        return (self.I1, self.I2, self.I3)[k - 1]


class TraceValues(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    tau_A: float
    tau_B: complex
    t: float

    def to_dict(self) -> dict:
        return {"tau_A": self.tau_A, "tau_B": {"re": self.tau_B.real, "im": self.tau_B.imag}, "t": self.t}


class TraceProbe(BaseModel):
    """Which constant the matrix trace of W_A realizes: tau_A (Lemma formula) or tau_A - 1."""

    samples: int
    max_error_tau_A: float
    max_error_tau_A_minus_1: float
    realized: Optional[str] = Field(None, description='"tau_A", "tau_A - 1" or None when neither fits')

    def to_dict(self) -> dict:
        return self.model_dump()


class Transitions(BaseModel):
    """Where the deformation t in [-1, t_u) leaves and re-enters the elliptic region of W_A / W_B."""

    t_start: float
    t_A: float
    t_B: float
    t_u: float

    def first(self) -> float:
        return min(self.t_A, self.t_B, self.t_u)

    def to_dict(self) -> dict:
        return self.model_dump()
