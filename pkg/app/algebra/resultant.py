# app/algebra/resultant.py
import sympy

from app.algebra.mpoly import MPoly
from app.utils.errors import InputError


def resultant(p: MPoly, q: MPoly, var: str) -> MPoly:
    """Sylvester resultant of p and q with respect to var (subresultant PRS in sympy)."""
    names = tuple(dict.fromkeys(p.variables + q.variables))
    symbols = {v: sympy.Symbol(v) for v in names}
    res = sympy.resultant(p.to_sympy(symbols), q.to_sympy(symbols), symbols[var])
    rest = tuple(v for v in names if v != var)
    return MPoly.from_sympy(res, rest)


def discriminant(p: MPoly, var: str) -> MPoly:
    """
    disc_var(p) = (-1)^(n(n-1)/2) res(p, dp/dvar) / lc(p), n = deg_var(p).
    x^2 - 2 gives 8, matching b^2 - 4ac for quadratics.
    """
    n = p.degree(var)
    if n < 2:
        raise InputError(f"discriminant needs degree >= 2 in {var}, got {n}", code="DEGREE_TOO_LOW")
    res = resultant(p, p.partial(var), var)
    lead = p.coefficient(var, n)
    symbols = {v: sympy.Symbol(v) for v in res.variables + lead.variables}
    quotient, remainder = sympy.div(res.to_sympy(symbols), lead.to_sympy(symbols), *symbols.values())
    if remainder != 0:
        raise InputError("leading coefficient does not divide the resultant", code="NOT_DIVISIBLE")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return MPoly.from_sympy(quotient, res.variables) * sign
