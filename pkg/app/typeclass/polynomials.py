# app/typeclass/polynomials.py
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from app.algebra.interval import RatInterval
from app.algebra.mpoly import MPoly, parse_mpoly

# Eq. (1), transcribed term by term in the printed order
F_TEXT = (
    "-176 + 96*a - 8*a^2 + 4*a^3 + a^4 + 96*b + 8*a*b - 36*a^2*b + 2*a^3*b - 2*a^4*b - 8*b^2"
    " - 36*a*b^2 + 23*a^2*b^2 + a^4*b^2 + 4*b^3 + 2*a*b^3 - 2*a^3*b^3 + b^4 - 2*a*b^4 + a^2*b^4"
    " + 120*c - 64*a*c + 10*a^2*c + 2*a^3*c - 64*b*c + 50*a*b*c - 14*a^2*b*c - 2*a^3*b*c"
    " + 10*b^2*c - 14*a*b^2*c + 8*a^2*b^2*c + 2*b^3*c - 2*a*b^3*c - 35*c^2 + 14*a*c^2"
    " + a^2*c^2 + 14*b*c^2 - 10*a*b*c^2 + b^2*c^2 + 4*c^3"
)

ABC = ("a", "b", "c")


@lru_cache(maxsize=1)
def build_F() -> MPoly:
    return parse_mpoly(F_TEXT, ABC)


@lru_cache(maxsize=1)
def goldman_mpoly() -> MPoly:
    """f(z) = |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27 with z = x + iy."""
    return parse_mpoly("(x^2 + y^2)^2 - 8*(x^3 - 3*x*y^2) + 18*(x^2 + y^2) - 27", ("x", "y"))


@lru_cache(maxsize=1)
def goldman_real() -> MPoly:
    return goldman_mpoly().compose({"y": 0})


def goldman_value(tau: complex) -> float:
    x, y = tau.real, tau.imag
    m = x * x + y * y
    return m * m - 8 * (x ** 3 - 3 * x * y * y) + 18 * m - 27


@lru_cache(maxsize=1)
def build_fB() -> MPoly:
    """
    f_B(T) = f(tau_B), Re tau_B = 8T - (a+b+c) + 3, (Im tau_B)^2 = abc - 64T^2.
    f only involves (Im z)^2, so it is substituted through w = y^2.
    """
    in_square = parse_mpoly("(x^2 + w)^2 - 8*(x^3 - 3*x*w) + 18*(x^2 + w) - 27", ("x", "w"))
    fb = in_square.compose({
        "x": parse_mpoly("8*T - a - b - c + 3", ("a", "b", "c", "T")),
        "w": parse_mpoly("a*b*c - 64*T^2", ("a", "b", "c", "T")),
    })
    return fb.with_variables(("a", "b", "c", "T"))


@lru_cache(maxsize=1)
def T_A_poly() -> MPoly:
    return parse_mpoly("(a*b + c - 4)/16", ABC)


def T_A_value(a, b, c):
    """(ab + c - 4)/16 on rationals or RatIntervals."""
    if any(isinstance(v, RatInterval) for v in (a, b, c)):
        a, b, c = (RatInterval.of(v) for v in (a, b, c))
        return (a * b + c - 4) / 16
    return (Fraction(a) * Fraction(b) + Fraction(c) - 4) / 16


def fB_cubic_coefficients() -> list[MPoly]:
    """Coefficients of T^0..T^3 of f_B as polynomials in (a, b, c)."""
    fb = build_fB()
    return [fb.coefficient("T", k).with_variables(ABC) for k in range(4)]


def F_cubic_coefficients() -> list[MPoly]:
    """F = lambda0 + lambda1 c + lambda2 c^2 + 4 c^3, lambdas in (a, b)."""
    F = build_F()
    return [F.coefficient("c", k).with_variables(("a", "b")) for k in range(4)]


@dataclass(frozen=True)
class DiscriminantSet:
    F: MPoly
    fB: MPoly
    TA: MPoly
    goldman: MPoly


def discriminant_set() -> DiscriminantSet:
    return DiscriminantSet(F=build_F(), fB=build_fB(), TA=T_A_poly(), goldman=goldman_mpoly())
