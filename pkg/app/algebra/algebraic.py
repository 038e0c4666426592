# app/algebra/algebraic.py
from fractions import Fraction
from functools import total_ordering

from app.algebra.interval import RatInterval
from app.algebra.rational import rat_text, to_rat
from app.algebra.sturm import isolate_roots, sturm_count
from app.algebra.upoly import UPoly
from app.utils.errors import InputError

_MAX_STEPS = 4000


@total_ordering
class AlgebraicNumber:
    """
    A real algebraic number: either rational, or the unique root of a squarefree
    polynomial inside an open interval (lo, hi). The value never changes; the
    isolating interval only shrinks when a comparison needs more precision.
    """

    __slots__ = ("poly", "_lo", "_hi")

    def __init__(self, poly: UPoly | None, lo: Fraction, hi: Fraction):
        self.poly = poly
        self._lo = lo
        self._hi = hi

    @classmethod
    def rational(cls, q) -> "AlgebraicNumber":
        q = to_rat(q)
        return cls(None, q, q)

    @classmethod
    def from_root(cls, poly: UPoly | list, lo, hi, index: int = 0) -> "AlgebraicNumber":
        """The index-th smallest root of `poly` in [lo, hi]."""
        if not isinstance(poly, UPoly):
            poly = UPoly(poly)
        p = poly.squarefree_part()
        roots = isolate_roots(p, lo, hi)
        if index >= len(roots):
            raise InputError(f"{poly} has only {len(roots)} root(s) in [{lo}, {hi}]", code="NO_SUCH_ROOT")
        iv = roots[index]
        if iv.is_point:
            return cls.rational(iv.lo)
        return cls(p, iv.lo, iv.hi)

    @property
    def is_rational(self) -> bool:
        return self._lo == self._hi

    @property
    def interval(self) -> RatInterval:
        return RatInterval(self._lo, self._hi)

    def _bisect(self):
        m = (self._lo + self._hi) / 2
        vm = self.poly(m)
        if vm == 0:
            self._lo = self._hi = m
            self.poly = None
            return
        # the sign at hi is never zero for an isolating interval
        if (vm > 0) == (self.poly(self._hi) > 0):
            self._hi = m
        else:
            self._lo = m

    def compare_rational(self, q) -> int:
        q = to_rat(q)
        if self.is_rational:
            return (self._lo > q) - (self._lo < q)
        if q <= self._lo:
            return 1
        if q >= self._hi:
            return -1
        v = self.poly(q)
        if v == 0:
            return 0
        return -1 if (v > 0) == (self.poly(self._hi) > 0) else 1

    def compare(self, other: "AlgebraicNumber") -> int:
        if not isinstance(other, AlgebraicNumber):
            return self.compare_rational(other)
        if other.is_rational:
            return self.compare_rational(other._lo)
        if self.is_rational:
            return -other.compare_rational(self._lo)
        common = self.poly.gcd(other.poly)
        for _ in range(_MAX_STEPS):
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            if common.degree >= 1:
                lo, hi = max(self._lo, other._lo), min(self._hi, other._hi)
                if common(hi) == 0 or sturm_count(common, lo, hi) > 0:
                    return 0
            if self._hi - self._lo >= other._hi - other._lo:
                self._bisect()
            else:
                other._bisect()
            if self.is_rational or other.is_rational:
                return self.compare(other)
        raise InputError("algebraic comparison did not converge", code="NO_CONVERGENCE")

    def sign_of(self, q: UPoly) -> int:
        """Sign of the univariate polynomial q evaluated at this number."""
        if self.is_rational:
            return q.sign_at(self._lo)
        common = q.gcd(self.poly)
        if common.degree >= 1 and sturm_count(common, self._lo, self._hi) > 0:
            return 0
        for _ in range(_MAX_STEPS):
            e = q.eval_interval(self.interval)
            if e.lo > 0:
                return 1
            if e.hi < 0:
                return -1
            self._bisect()
            if self.is_rational:
                return q.sign_at(self._lo)
        raise InputError("sign determination did not converge", code="NO_CONVERGENCE")

    @staticmethod
    def between(x: "AlgebraicNumber", y: "AlgebraicNumber") -> Fraction:
        """A rational strictly between x < y."""
        if x.is_rational and y.is_rational:
            return (x._lo + y._lo) / 2
        for _ in range(_MAX_STEPS):
            if x._hi < y._lo:
                return (x._hi + y._lo) / 2
            if not x.is_rational and (y.is_rational or x._hi - x._lo >= y._hi - y._lo):
                x._bisect()
            else:
                y._bisect()
        raise InputError(f"no rational found between {x} and {y}", code="NO_CONVERGENCE")

    def rational_bound(self, upper: bool, width) -> Fraction:
        """A rational within `width` above (or below) the number; the "not sharp" fallback."""
        width = to_rat(width)
        while self._hi - self._lo >= width and not self.is_rational:
            self._bisect()
        return self._hi if upper else self._lo

    def __float__(self):
        if not self.is_rational:
            self.rational_bound(True, Fraction(1, 1 << 60))
        return float((self._lo + self._hi) / 2)

    def __eq__(self, other):
        if isinstance(other, (AlgebraicNumber, Fraction, int)):
            return self.compare(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self.compare(other) < 0

    def __hash__(self):
        return hash(self._lo) if self.is_rational else hash(self.poly)

    def __str__(self):
        if self.is_rational:
            return rat_text(self._lo)
        return f"root of {self.poly} in ({rat_text(self._lo)}, {rat_text(self._hi)})"

    __repr__ = __str__
