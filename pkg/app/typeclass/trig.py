# app/typeclass/trig.py
"""
Rigorous rational enclosures of pi and cos on [0, pi].

pi comes from Machin's formula with alternating-series brackets; cos from its
Taylor series with the Lagrange remainder bound |x|^(2K+2)/(2K+2)!. No floating
point is involved anywhere.
"""
from fractions import Fraction
from functools import lru_cache
import math

from app.algebra.interval import RatInterval


def _arctan_inv(m: int, eps: Fraction) -> RatInterval:
    # arctan(1/m) = sum (-1)^k / ((2k+1) m^(2k+1)); consecutive partial sums bracket the value
    total = Fraction(0)
    k = 0
    while True:
        term = Fraction(1, (2 * k + 1) * m ** (2 * k + 1))
        nxt = total + term if k % 2 == 0 else total - term
        if term < eps and k > 0:
            return RatInterval(min(total, nxt), max(total, nxt))
        total = nxt
        k += 1


@lru_cache(maxsize=None)
def pi_enclosure(bits: int) -> RatInterval:
    eps = Fraction(1, 1 << (bits + 8))
    pi = _arctan_inv(5, eps) * 16 - _arctan_inv(239, eps) * 4
    return pi.round_out(bits + 4)


def _cos_bracket(x: Fraction, eps: Fraction) -> RatInterval:
    """Enclosure of cos(x) for a rational 0 <= x <= 4."""
    total = Fraction(0)
    term = Fraction(1)
    k = 0
    while True:
        total += term
        k += 1
        term = -term * x * x / ((2 * k - 1) * (2 * k))
        if abs(term) < eps:
            # |remainder| <= |next term| once the terms decrease, which holds for x <= 4 after k >= 3
            if k >= 3:
                return RatInterval(total - abs(term), total + abs(term))


def cos_enclosure(x: RatInterval, bits: int) -> RatInterval:
    """cos over an interval inside [0, pi]; cos is decreasing there."""
    eps = Fraction(1, 1 << (bits + 4))
    upper = _cos_bracket(x.lo, eps).hi
    lower = _cos_bracket(x.hi, eps).lo
    return RatInterval(max(lower, Fraction(-1)), min(upper, Fraction(1))).round_out(bits + 2)


# cos(pi/n) is rational only for these n; 4cos^2(pi/n) is also rational for n = 4, 6
_EXACT_COS = {2: Fraction(0), 3: Fraction(1, 2)}
_EXACT_SQUARE = {2: Fraction(0), 3: Fraction(1), 4: Fraction(2), 6: Fraction(3)}


@lru_cache(maxsize=4096)
def cos_pi_over(n, bits: int) -> RatInterval:
    """Enclosure of cos(pi/n), width <= 2^-bits; n = inf gives exactly 1."""
    if n == math.inf:
        return RatInterval.point(1)
    if n in _EXACT_COS:
        return RatInterval.point(_EXACT_COS[n])
    pi = pi_enclosure(bits + 4)
    return cos_enclosure(pi / n, bits)


@lru_cache(maxsize=4096)
def four_cos_squared(n, bits: int) -> RatInterval:
    """Enclosure of 4cos^2(pi/n) = 2 + 2cos(2pi/n), width <= 2^-bits."""
    if n == math.inf:
        return RatInterval.point(4)
    if n in _EXACT_SQUARE:
        return RatInterval.point(_EXACT_SQUARE[n])
    pi = pi_enclosure(bits + 6)
    value = cos_enclosure(pi * 2 / n, bits + 2) * 2 + 2
    return value.intersect(RatInterval(1, 4)) or value
