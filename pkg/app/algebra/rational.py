# app/algebra/rational.py
from fractions import Fraction

from app.utils.errors import InputError

# Fraction is always reduced with a positive denominator.
BigRat = Fraction


def to_rat(value) -> Fraction:
    """Exact conversion. Floats are taken at their exact binary value; strings may be "p/q" or decimals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational number: {value!r}", code="INVALID_NUMBER")
    raise InputError(f"cannot convert {type(value).__name__} to a rational", code="INVALID_NUMBER")


def rat_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def dyadic(x: float, bits: int = 24) -> Fraction:
    """Round a float to the nearest multiple of 2^-bits."""
    scale = 1 << bits
    return Fraction(round(x * scale), scale)


def decimal_text(q: Fraction, digits: int) -> str:
    """Fixed-point rendering of an exact rational with `digits` fractional digits (round half away from zero)."""
    scale = 10 ** digits
    n = abs(q) * scale
    whole = n.numerator // n.denominator
    if (n - whole) * 2 >= 1:
        whole += 1
    body = str(whole).rjust(digits + 1, "0")
    text = f"{body[:-digits]}.{body[-digits:]}" if digits else body
    return f"-{text}" if q < 0 and whole else text
