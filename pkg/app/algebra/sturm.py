# app/algebra/sturm.py
from dataclasses import dataclass
from fractions import Fraction

from app.algebra.interval import RatInterval
from app.algebra.rational import to_rat
from app.algebra.upoly import UPoly
from app.utils.errors import InputError


@dataclass(frozen=True)
class SturmChain:
    """p, p', then negated remainders until the remainder vanishes."""

    chain: tuple

    @classmethod
    def of(cls, p: UPoly) -> "SturmChain":
        if p.is_zero:
            raise InputError("Sturm chain of the zero polynomial", code="ZERO_POLYNOMIAL")
        chain = [p, p.derivative()]
        while not chain[-1].is_zero:
            r = chain[-2] % chain[-1]
            if r.is_zero:
                break
            chain.append(-r)
        if chain[-1].is_zero:
            chain.pop()
        return cls(tuple(chain))

    def variations(self, x: Fraction) -> int:
        # zeros are skipped, which also gives the limit convention at roots of p
        count, prev = 0, 0
        for q in self.chain:
            s = q.sign_at(x)
            if s == 0:
                continue
            if prev and s != prev:
                count += 1
            prev = s
        return count

    def count(self, lo: Fraction, hi: Fraction) -> int:
        return self.variations(lo) - self.variations(hi)


def sturm_count(p: UPoly, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    lo, hi = to_rat(lo), to_rat(hi)
    if lo > hi:
        raise InputError(f"bad interval ({lo}, {hi}]", code="EMPTY_INTERVAL")
    if p.is_zero:
        raise InputError("root count of the zero polynomial", code="ZERO_POLYNOMIAL")
    if p.degree == 0 or lo == hi:
        return 0
    return SturmChain.of(p).count(lo, hi)


def isolate_roots(p: UPoly, lo, hi) -> list[RatInterval]:
    """
    Disjoint intervals covering the distinct roots of p in [lo, hi], one root each.
    A rational root found on a bisection point comes back as a point interval.
    """
    lo, hi = to_rat(lo), to_rat(hi)
    if p.is_zero:
        raise InputError("root isolation of the zero polynomial", code="ZERO_POLYNOMIAL")
    q = p.squarefree_part()
    if q.degree <= 0:
        return []
    chain = SturmChain.of(q)
    found: list[RatInterval] = []
    if q(lo) == 0:
        found.append(RatInterval.point(lo))

    stack = [(lo, hi, chain.variations(lo), chain.variations(hi))]
    while stack:
        l, h, vl, vh = stack.pop()
        n = vl - vh
        if n == 0:
            continue
        if n == 1:
            found.append(RatInterval.point(h) if q(h) == 0 else RatInterval(l, h))
            continue
        m = (l + h) / 2
        vm = chain.variations(m)
        stack.append((m, h, vm, vh))
        stack.append((l, m, vl, vm))
    return sorted(found, key=lambda iv: iv.lo)


def refine_root(p: UPoly, interval: RatInterval, width) -> RatInterval:
    """Shrink an isolating interval (lo, hi] of a root of p below `width` by bisection."""
    width = to_rat(width)
    q = p.squarefree_part()
    lo, hi = interval.lo, interval.hi
    if lo == hi:
        return interval
    sign_hi = q.sign_at(hi)
    if sign_hi == 0:
        return RatInterval.point(hi)
    while hi - lo >= width:
        m = (lo + hi) / 2
        s = q.sign_at(m)
        if s == 0:
            return RatInterval.point(m)
        if s == sign_hi:
            hi = m
        else:
            lo = m
    return RatInterval(lo, hi)
