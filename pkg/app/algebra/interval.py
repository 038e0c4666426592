# app/algebra/interval.py
import math
from dataclasses import dataclass
from fractions import Fraction

from app.algebra.rational import rat_text, to_rat
from app.utils.errors import InputError


@dataclass(frozen=True, slots=True)
class RatInterval:
    """Closed interval [lo, hi] with exact rational endpoints. Arithmetic is conservative."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", to_rat(self.lo))
        object.__setattr__(self, "hi", to_rat(self.hi))
        if self.lo > self.hi:
            raise InputError(f"empty interval [{self.lo}, {self.hi}]", code="EMPTY_INTERVAL")

    @classmethod
    def point(cls, x) -> "RatInterval":
        x = to_rat(x)
        return cls(x, x)

    @classmethod
    def of(cls, value) -> "RatInterval":
        return value if isinstance(value, RatInterval) else cls.point(value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, RatInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def intersect(self, other: "RatInterval") -> "RatInterval | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return RatInterval(lo, hi) if lo <= hi else None

    def hull(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def __add__(self, other):
        other = RatInterval.of(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-RatInterval.of(other))

    def __rsub__(self, other):
        return RatInterval.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatInterval):
            k = to_rat(other)
            return RatInterval(self.lo * k, self.hi * k) if k >= 0 else RatInterval(self.hi * k, self.lo * k)
        ends = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(ends), max(ends))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RatInterval):
            if other.lo <= 0 <= other.hi:
                raise InputError("interval division by an interval containing 0", code="DIVISION_BY_ZERO")
            return self * RatInterval(1 / other.hi, 1 / other.lo)
        return self * (1 / to_rat(other))

    def __pow__(self, k: int):
        if k == 0:
            return RatInterval.point(1)
        if k % 2 == 1 or self.lo >= 0:
            return RatInterval(self.lo ** k, self.hi ** k)
        if self.hi <= 0:
            return RatInterval(self.hi ** k, self.lo ** k)
        return RatInterval(Fraction(0), max(-self.lo, self.hi) ** k)

    def round_out(self, bits: int) -> "RatInterval":
        """Widen to endpoints on the dyadic grid 2^-bits, keeping denominators small."""
        scale = 1 << bits
        lo = self.lo * scale
        hi = self.hi * scale
        return RatInterval(Fraction(math.floor(lo), scale), Fraction(math.ceil(hi), scale))

    def to_dict(self) -> dict:
        return {"lo": rat_text(self.lo), "hi": rat_text(self.hi)}

    def __str__(self):
        return f"[{rat_text(self.lo)}, {rat_text(self.hi)}]"
