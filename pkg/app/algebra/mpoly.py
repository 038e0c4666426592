# app/algebra/mpoly.py
from fractions import Fraction
from math import comb
from typing import Mapping

import sympy
from sympy.parsing.sympy_parser import parse_expr

from app.algebra.interval import RatInterval
from app.algebra.rational import rat_text, to_rat
from app.algebra.upoly import UPoly
from app.utils.errors import InputError

VARIABLE_ORDER = ("a", "b", "c", "T", "x", "y")


def _rank(name: str):
    return (0, VARIABLE_ORDER.index(name)) if name in VARIABLE_ORDER else (1, name)


def canonical_variables(names) -> tuple:
    return tuple(sorted(set(names), key=_rank))


class MPoly:
    """
    Sparse polynomial over Q: {exponent tuple: coefficient}, exponents aligned with `variables`.
    Zero coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms: Mapping | None = None):
        self.variables = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            c = to_rat(c)
            if c:
                clean[tuple(exp)] = c
        self.terms = clean

    # -- construction -------------------------------------------------------------

    @classmethod
    def const(cls, value, variables=()) -> "MPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, name: str, variables=None) -> "MPoly":
        variables = tuple(variables) if variables else (name,)
        if name not in variables:
            raise InputError(f"{name} is not among {variables}", code="UNBOUND_VARIABLE")
        return cls(variables, {tuple(1 if v == name else 0 for v in variables): 1})

    @classmethod
    def of(cls, value, variables=()) -> "MPoly":
        return value if isinstance(value, MPoly) else cls.const(value, variables)

    def with_variables(self, variables) -> "MPoly":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        out = {}
        for exp, c in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.variables, exp):
                if e:
                    if v not in index:
                        raise InputError(f"variable {v} dropped while still in use", code="UNBOUND_VARIABLE")
                    new[index[v]] = e
            out[tuple(new)] = c
        return MPoly(variables, out)

    def _align(self, other: "MPoly"):
        if self.variables == other.variables:
            return self, other
        names = canonical_variables(self.variables + other.variables)
        return self.with_variables(names), other.with_variables(names)

    # -- queries --------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def used_variables(self) -> tuple:
        return tuple(v for i, v in enumerate(self.variables) if any(e[i] for e in self.terms))

    def degree(self, name: str) -> int:
        if name not in self.variables:
            return 0 if self.terms else -1
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, name: str, k: int) -> "MPoly":
        """Coefficient of name^k, as a polynomial in the remaining variables."""
        if name not in self.variables:
            return self if k == 0 else MPoly(self.variables)
        i = self.variables.index(name)
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == k:
                out[exp[:i] + (0,) + exp[i + 1:]] = c
        return MPoly(self.variables, out)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def linear_coefficient(self, name: str) -> Fraction:
        i = self.variables.index(name)
        key = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return self.terms.get(key, Fraction(0))

    # -- ring operations ------------------------------------------------------------

    def __add__(self, other):
        other = MPoly.of(other, self.variables)
        p, q = self._align(other)
        out = dict(p.terms)
        for exp, c in q.terms.items():
            out[exp] = out.get(exp, 0) + c
        return MPoly(p.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-MPoly.of(other, self.variables))

    def __rsub__(self, other):
        return MPoly.of(other, self.variables) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            k = to_rat(other)
            return MPoly(self.variables, {e: c * k for e, c in self.terms.items()})
        p, q = self._align(other)
        out = {}
        for e1, c1 in p.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(p.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / to_rat(k))

    def __pow__(self, k: int):
        out = MPoly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.of(other, self.variables)
        return (self - other).is_zero

    def __hash__(self):
        return hash(self.to_text())

    # -- calculus and substitution ----------------------------------------------------

    def partial(self, name: str) -> "MPoly":
        if name not in self.variables:
            return MPoly(self.variables)
        i = self.variables.index(name)
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                out[exp[:i] + (exp[i] - 1,) + exp[i + 1:]] = c * exp[i]
        return MPoly(self.variables, out)

    def compose(self, bindings: Mapping) -> "MPoly":
        """Substitute polynomials (or numbers) for variables. Unmentioned variables stay."""
        bound = {v: MPoly.of(q) for v, q in bindings.items() if v in self.variables}
        keep = tuple(v for v in self.variables if v not in bound)
        names = canonical_variables(keep + tuple(n for q in bound.values() for n in q.variables))
        powers = {v: {0: MPoly.const(1, names)} for v in bound}
        bound = {v: q.with_variables(names) for v, q in bound.items()}
        acc = {}
        for exp, c in self.terms.items():
            mono = {}
            factor = MPoly.const(c, names)
            for v, e in zip(self.variables, exp):
                if v in bound:
                    if e not in powers[v]:
                        powers[v][e] = bound[v] ** e
                    factor = factor * powers[v][e]
                elif e:
                    mono[v] = e
            if mono:
                factor = factor * MPoly(names, {tuple(mono.get(n, 0) for n in names): 1})
            for e, t in factor.terms.items():
                acc[e] = acc.get(e, 0) + t
        return MPoly(names, acc)

    def shift(self, name: str, center: Fraction) -> "MPoly":
        """p(name + center)."""
        if not center or name not in self.variables:
            return self
        i = self.variables.index(name)
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            for k in range(e + 1):
                key = exp[:i] + (k,) + exp[i + 1:]
                out[key] = out.get(key, 0) + c * comb(e, k) * center ** (e - k)
        return MPoly(self.variables, out)

    # -- evaluation -----------------------------------------------------------------

    def evaluate(self, point: Mapping):
        """Exact value at a rational point, or an enclosure when any coordinate is a RatInterval."""
        missing = [v for v in self.used_variables if v not in point]
        if missing:
            raise InputError(f"unbound variable(s) {', '.join(missing)}", code="UNBOUND_VARIABLE")
        used = self.used_variables
        if any(isinstance(x, RatInterval) for x in point.values()):
            if not used:
                return RatInterval.point(self.constant_term())
            box = {v: RatInterval.of(point[v]) for v in used}
            naive = self._naive_enclosure(box)
            return naive.intersect(self.enclose(box)) or naive
        values = [to_rat(point[v]) if v in used else Fraction(0) for v in self.variables]
        acc = Fraction(0)
        for exp, c in self.terms.items():
            t = c
            for x, e in zip(values, exp):
                if e:
                    t *= x ** e
            acc += t
        return acc

    def _naive_enclosure(self, box) -> RatInterval:
        acc = RatInterval.point(0)
        for exp, c in self.terms.items():
            t = RatInterval.point(c)
            for v, e in zip(self.variables, exp):
                if e:
                    t = t * box[v] ** e
            acc = acc + t
        return acc

    def enclose(self, box: Mapping) -> RatInterval:
        """Centered (Taylor-form) enclosure over a box {var: RatInterval or (lo, hi)}."""
        p = self
        radius = {}
        missing = [v for v in self.used_variables if v not in box]
        if missing:
            raise InputError(f"unbound variable(s) {', '.join(missing)}", code="UNBOUND_VARIABLE")
        for v in self.variables:
            if v not in box:
                continue
            iv = box[v] if isinstance(box[v], RatInterval) else RatInterval(*box[v])
            p = p.shift(v, iv.mid)
            radius[v] = iv.width / 2
        lo = hi = Fraction(0)
        for exp, c in p.terms.items():
            # monomial range over the symmetric box: odd powers give [-r^e, r^e], even [0, r^e]
            mag = abs(c)
            odd = False
            for v, e in zip(p.variables, exp):
                if e:
                    mag *= radius.get(v, Fraction(0)) ** e
                    odd = odd or e % 2 == 1
            if not mag and any(exp):
                continue
            if not any(exp):
                lo += c
                hi += c
            elif odd:
                lo -= mag
                hi += mag
            elif c > 0:
                hi += mag
            else:
                lo -= mag
        return RatInterval(lo, hi)

    # -- conversions ----------------------------------------------------------------

    def to_upoly(self, name: str) -> UPoly:
        others = [v for v in self.used_variables if v != name]
        if others:
            raise InputError(f"polynomial is not univariate in {name} (also uses {others})", code="NOT_UNIVARIATE")
        if name not in self.variables:
            return UPoly((self.constant_term(),))
        i = self.variables.index(name)
        coeffs = [Fraction(0)] * (self.degree(name) + 1 if self.terms else 0)
        for exp, c in self.terms.items():
            coeffs[exp[i]] += c
        return UPoly(coeffs)

    @classmethod
    def from_upoly(cls, p: UPoly, name: str) -> "MPoly":
        return cls((name,), {(i,): c for i, c in enumerate(p.coeffs)})

    def clear_denominators(self) -> tuple["MPoly", int]:
        """(integer-coefficient polynomial, positive denominator d) with self = result / d."""
        d = 1
        for c in self.terms.values():
            d = d * c.denominator // _gcd(d, c.denominator)
        return self * d, d

    def to_sympy(self, symbols: Mapping | None = None):
        gens = [sympy.Symbol(v) if not symbols else symbols[v] for v in self.variables]
        expr = sympy.Integer(0)
        for exp, c in self.terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for g, e in zip(gens, exp):
                if e:
                    term *= g ** e
            expr += term
        return expr

    @classmethod
    def from_sympy(cls, expr, variables) -> "MPoly":
        variables = tuple(variables)
        if not variables:
            return cls.const(Fraction(str(sympy.Rational(expr))))
        gens = [sympy.Symbol(v) for v in variables]
        poly = sympy.Poly(sympy.expand(expr), *gens, domain="QQ")
        return cls(variables, {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})

    def sort_key(self, exp):
        order = sorted(range(len(self.variables)), key=lambda i: _rank(self.variables[i]), reverse=True)
        return tuple(exp[i] for i in order)

    def to_text(self) -> str:
        """Canonical text: terms ordered by exponent of the last variable first, explicit exponents."""
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=self.sort_key):
            c = self.terms[exp]
            mono = "*".join(f"{v}^{e}" if e > 1 else v
                            for v, e in sorted(zip(self.variables, exp), key=lambda t: _rank(t[0])) if e)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{rat_text(mag)}*{mono}"
            else:
                body = rat_text(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MPoly({self.to_text()!r})"


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


def parse_mpoly(text: str, variables=None) -> MPoly:
    """Parse "2*a^2 - a*b/3 + (a+b)^3"-style text. `^` and `**` both mean power."""
    names = variables
    if names is None:
        names = sorted({ch for ch in text if ch.isalpha()}, key=_rank)
    names = canonical_variables(names)
    local = {v: sympy.Symbol(v) for v in names}
    try:
        expr = parse_expr(text.replace("^", "**"), local_dict=local, evaluate=True)
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise InputError(f"cannot parse polynomial {text!r}: {exc}", code="PARSE_ERROR")
    unknown = {str(s) for s in expr.free_symbols} - set(names)
    if unknown:
        raise InputError(f"unknown variable(s) {sorted(unknown)} in {text!r}", code="UNBOUND_VARIABLE")
    return MPoly.from_sympy(expr, names)
