# app/algebra/upoly.py
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from app.algebra.interval import RatInterval
from app.algebra.rational import rat_text, to_rat
from app.utils.errors import InputError


def _trim(coeffs: Iterable) -> tuple:
    c = [to_rat(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, slots=True)
class UPoly:
    """Dense univariate polynomial over Q, lowest degree first. The zero polynomial has no coefficients."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def x(cls) -> "UPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, box: RatInterval) -> RatInterval:
        """Horner evaluation on an interval."""
        acc = RatInterval.point(0)
        for c in reversed(self.coeffs):
            acc = acc * box + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def __add__(self, other):
        other = other if isinstance(other, UPoly) else UPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = other if isinstance(other, UPoly) else UPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            k = to_rat(other)
            return UPoly(c * k for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def divrem(self, d: "UPoly") -> tuple["UPoly", "UPoly"]:
        if d.is_zero:
            raise InputError("division by the zero polynomial", code="DIVISION_BY_ZERO")
        r = list(self.coeffs)
        dd = d.degree
        q = [Fraction(0)] * max(1, len(r) - dd)
        inv = 1 / d.lead
        while len(r) - 1 >= dd and r:
            k = len(r) - 1 - dd
            c = r[-1] * inv
            q[k] = c
            for i, dc in enumerate(d.coeffs):
                r[k + i] -= c * dc
            while r and r[-1] == 0:
                r.pop()
        return UPoly(q), UPoly(r)

    def __floordiv__(self, d):
        return self.divrem(d)[0]

    def __mod__(self, d):
        return self.divrem(d)[1]

    def derivative(self) -> "UPoly":
        return UPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "UPoly":
        return self * (1 / self.lead) if not self.is_zero else self

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "UPoly":
        g = self.gcd(self.derivative())
        return self.monic() if g.degree <= 0 else (self // g).monic()

    def compose(self, inner: "UPoly") -> "UPoly":
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(rat_text(c) + ("" if i == 0 else "*x" if i == 1 else f"*x^{i}"))
        return " + ".join(terms)
