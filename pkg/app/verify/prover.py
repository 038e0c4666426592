# app/verify/prover.py
"""
Exact branch-and-bound infeasibility prover over rational boxes.

`prove` shows that a conjunction of constraints has no point in a box, or finds a
rational point satisfying all of them. Everything is decided with exact rationals
and algebraic numbers; floats only ever pick multipliers, whose exact values are
then used.

A box is discharged when some nonnegative combination of the constraints is
provably of the wrong sign on it. Two devices sharpen the plain interval bound:
enclosures on boxes sheared along the linear constraints, and (for two variables)
a monotone reduction that pushes a polynomial to the edge of each column and
decides the edge exactly with Sturm sequences.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import product
from typing import Optional

from app.algebra.algebraic import AlgebraicNumber
from app.algebra.interval import RatInterval
from app.algebra.mpoly import MPoly
from app.algebra.rational import dyadic
from app.algebra.sturm import isolate_roots
from app.algebra.upoly import UPoly
from app.config.settings import BUDGET, MAX_DEPTH, REDUCTION_DEPTH
from app.utils.errors import ChtError, SpecificationError
from app.utils.logging import get_logger
from app.verify.constraints import BoundConstraint, Constraint, PolyConstraint, enclose

log = get_logger("prover")

COMBO_WIDTH = Fraction(1, 64)
COMBO_SCALES = (Fraction(1), Fraction(63, 64), Fraction(65, 64), Fraction(4095, 4096), Fraction(4097, 4096))
CACHE_LIMIT = 4096

PROVED = "Proved"
REFUTED = "Refuted"
EXHAUSTED = "BudgetExhausted"


@dataclass
class ProofResult:
    status: str
    boxes: int
    witness: Optional[dict] = None
    box: Optional[dict] = None


@dataclass(eq=False)
class Linear:
    """The closed half-plane c0 + sum(cv[v] * v) >= 0 of a degree-one constraint."""

    c0: Fraction
    cv: dict

    @classmethod
    def of(cls, poly: MPoly) -> "Linear":
        return cls(poly.constant_term(), {v: poly.linear_coefficient(v) for v in poly.variables})

    def involves(self, v: str) -> bool:
        return self.cv.get(v, 0) != 0


@dataclass(frozen=True)
class Segment:
    """A subset of the line with algebraic ends, each end open or closed."""

    lo: AlgebraicNumber
    lo_closed: bool
    hi: AlgebraicNumber
    hi_closed: bool

    def empty(self) -> bool:
        c = self.lo.compare(self.hi)
        return c > 0 or (c == 0 and not (self.lo_closed and self.hi_closed))

    def meet_lower(self, a: AlgebraicNumber, closed: bool) -> "Segment":
        c = a.compare(self.lo)
        if c > 0:
            return Segment(a, closed, self.hi, self.hi_closed)
        if c == 0:
            return Segment(self.lo, self.lo_closed and closed, self.hi, self.hi_closed)
        return self

    def meet_upper(self, a: AlgebraicNumber, closed: bool) -> "Segment":
        c = a.compare(self.hi)
        if c < 0:
            return Segment(self.lo, self.lo_closed, a, closed)
        if c == 0:
            return Segment(self.lo, self.lo_closed, self.hi, self.hi_closed and closed)
        return self

    def contains(self, x: AlgebraicNumber) -> bool:
        a, b = x.compare(self.lo), x.compare(self.hi)
        return (a > 0 or (a == 0 and self.lo_closed)) and (b < 0 or (b == 0 and self.hi_closed))


def _empty_segment() -> Segment:
    return Segment(AlgebraicNumber.rational(1), False, AlgebraicNumber.rational(0), False)


def _alg(q) -> AlgebraicNumber:
    return AlgebraicNumber.rational(q)


@dataclass
class Region:
    box: dict
    lins: list = field(default_factory=list)
    bounds: list = field(default_factory=list)


def good_segments(q: UPoly, strict: bool, seg: Segment) -> list[Segment]:
    """Where on seg the univariate q is > 0 (strict) or >= 0, as a list of segments."""
    if seg.empty():
        return []
    if q.is_zero:
        return [] if strict else [seg]
    sq = q.squarefree_part()
    roots = []
    if sq.degree >= 1:
        for iv in isolate_roots(sq, seg.lo.interval.lo, seg.hi.interval.hi):
            roots.append(_alg(iv.lo) if iv.is_point else AlgebraicNumber(sq, iv.lo, iv.hi))
    roots = [r for r in roots if r.compare(seg.lo) > 0 and r.compare(seg.hi) < 0]
    pts = [seg.lo, *roots, seg.hi]

    def point_good(p, in_seg):
        if not in_seg:
            return False
        s = p.sign_of(q)
        return s > 0 if strict else s >= 0

    piece_good = []
    for x, y in zip(pts, pts[1:]):
        if x.compare(y) == 0:
            piece_good.append(False)
            continue
        piece_good.append(q(AlgebraicNumber.between(x, y)) > 0)
    last = len(pts) - 1
    pts_good = [point_good(p, seg.lo_closed if i == 0 else seg.hi_closed if i == last else True)
                for i, p in enumerate(pts)]
    out = [Segment(pts[i], pts_good[i], pts[i + 1], pts_good[i + 1])
           for i in range(last) if piece_good[i]]
    out.extend(Segment(p, True, p, True) for p, good in zip(pts, pts_good) if good)
    return out


def covered(whole: Segment, goods: list[Segment]) -> bool:
    if whole.empty():
        return True
    pts = []
    for p in [whole.lo, whole.hi] + [e for g in goods for e in (g.lo, g.hi)]:
        if p.compare(whole.lo) < 0 or p.compare(whole.hi) > 0:
            continue
        if not any(u.compare(p) == 0 for u in pts):
            pts.append(p)
    pts.sort(key=cmp_to_key(lambda x, y: x.compare(y)))
    for i, p in enumerate(pts):
        if whole.contains(p) and not any(g.contains(p) for g in goods):
            return False
        if i + 1 < len(pts):
            m = _alg(AlgebraicNumber.between(pts[i], pts[i + 1]))
            if not any(g.contains(m) for g in goods):
                return False
    return True


def sample_points(box: dict, variables) -> list[dict]:
    axes = [(box[v].lo, box[v].hi, box[v].mid) for v in variables]
    return [dict(zip(variables, xs)) for xs in product(*axes)]


class BoxProver:
    """One proof attempt; derivative and sheared-polynomial caches live as long as it does."""

    def __init__(self, variables, reduction_depth: int = REDUCTION_DEPTH):
        self.variables = tuple(variables)
        self.reduction_depth = reduction_depth
        self._partials = {}
        self._sheared = {}
        self._lins = {}
        self._negs = {}

    # -- cached algebra -----------------------------------------------------------

    def _partial(self, h: MPoly, v: str) -> MPoly:
        key = (id(h), v)
        if key not in self._partials:
            if len(self._partials) > CACHE_LIMIT:
                self._partials.clear()
            self._partials[key] = (h, h.partial(v))
        return self._partials[key][1]

    def _negated(self, c: PolyConstraint) -> MPoly:
        if id(c) not in self._negs:
            self._negs[id(c)] = (c, -c.poly)
        return self._negs[id(c)][1]

    def _linear(self, c: PolyConstraint) -> Linear:
        if id(c) not in self._lins:
            self._lins[id(c)] = (c, Linear.of(c.poly))
        return self._lins[id(c)][1]

    def _shear(self, h: MPoly, lin: Linear, w: str, v: str) -> MPoly:
        key = (id(h), id(lin))
        if key not in self._sheared:
            if len(self._sheared) > CACHE_LIMIT:
                self._sheared.clear()
            # v = (s - c0 - cw*w) / cv, with s stored under the name v
            expr = (MPoly.var(v, self.variables) - lin.c0 - MPoly.var(w, self.variables) * lin.cv[w]) / lin.cv[v]
            self._sheared[key] = (h, lin, h.compose({v: expr}).with_variables(self.variables))
        return self._sheared[key][2]

    # -- enclosures -----------------------------------------------------------------

    def enclosure(self, h: MPoly, region: Region) -> Optional[RatInterval]:
        """Enclosure of h over the region, or None when the region is empty."""
        e = enclose(h, region.box)
        for lin in region.lins:
            vs = [v for v in self.variables if lin.involves(v)]
            if len(vs) != 2:
                continue
            w, v = vs
            smin = smax = lin.c0
            for x in vs:
                t1, t2 = lin.cv[x] * region.box[x].lo, lin.cv[x] * region.box[x].hi
                smin += min(t1, t2)
                smax += max(t1, t2)
            if smax < 0:
                return None
            e2 = enclose(self._shear(h, lin, w, v), {**region.box, v: RatInterval(max(smin, Fraction(0)), smax)})
            e = e.intersect(e2)
            if e is None:
                return None
        return e

    def enclose_sign(self, h: MPoly, strict: bool, region: Region) -> bool:
        e = self.enclosure(h, region)
        if e is None:
            return True
        return e.lo > 0 if strict else e.lo >= 0

    # -- monotone reduction -----------------------------------------------------------

    def column_segment(self, region: Region, v: str, w: str) -> Segment:
        """w-values whose v-column meets the region."""
        bw = region.box[w]
        seg = Segment(_alg(bw.lo), True, _alg(bw.hi), True)
        for b in region.bounds:
            if b.var != w:
                continue
            seg = seg.meet_lower(b.threshold, not b.strict) if b.lower else seg.meet_upper(b.threshold, not b.strict)
        lowers = [(region.box[v].lo, Fraction(0))]
        uppers = [(region.box[v].hi, Fraction(0))]
        for lin in region.lins:
            if not lin.involves(v):
                if not lin.involves(w):
                    continue
                r = -lin.c0 / lin.cv[w]
                seg = seg.meet_lower(_alg(r), True) if lin.cv[w] > 0 else seg.meet_upper(_alg(r), True)
                continue
            line = (-lin.c0 / lin.cv[v], -lin.cv.get(w, 0) / lin.cv[v])
            (lowers if lin.cv[v] > 0 else uppers).append(line)
        for lo_a, lo_b in lowers:
            for up_a, up_b in uppers:
                k, r = lo_b - up_b, up_a - lo_a
                if k == 0:
                    if r < 0:
                        return _empty_segment()
                    continue
                x = _alg(r / k)
                seg = seg.meet_upper(x, True) if k > 0 else seg.meet_lower(x, True)
        return seg

    def reduction_goods(self, h: MPoly, strict: bool, region: Region, v: str, w: str, depth: int,
                        whole: Segment) -> list[Segment]:
        out = []
        bv = region.box[v]
        for down in (True, False):
            # down: dh/dv >= 0, so h is smallest on the lower edge of each column
            cands = [None] + [lin for lin in region.lins if lin.involves(v) and (lin.cv[v] > 0) == down]
            dh = self._partial(h, v)
            dsign = dh if down else -dh
            for cand in cands:
                sub = Region(region.box, [lin for lin in region.lins
                                          if not lin.involves(v) or (lin.cv[v] > 0) != down or lin is cand],
                             region.bounds)
                if not self.prove_nonneg(dsign, False, sub, depth - 1):
                    continue
                seg = whole
                if cand is None:
                    A, B = (bv.lo if down else bv.hi), Fraction(0)
                else:
                    A, B = -cand.c0 / cand.cv[v], -cand.cv.get(w, 0) / cand.cv[v]
                    if B == 0:
                        if A < bv.lo or A > bv.hi:
                            continue
                    else:
                        w1, w2 = (bv.lo - A) / B, (bv.hi - A) / B
                        seg = seg.meet_lower(_alg(min(w1, w2)), True).meet_upper(_alg(max(w1, w2)), True)
                edge = MPoly.var(w, self.variables) * B + A
                q = h.compose({v: edge}).to_upoly(w)
                out.extend(good_segments(q, strict, seg))
        return out

    def prove_nonneg(self, h: MPoly, strict: bool, region: Region, depth: int) -> bool:
        if self.enclose_sign(h, strict, region):
            return True
        if depth <= 0 or len(self.variables) != 2:
            return False
        for v in self.variables:
            w = next(x for x in self.variables if x != v)
            whole = self.column_segment(region, v, w)
            if whole.empty():
                return True
            if covered(whole, self.reduction_goods(h, strict, region, v, w, depth, whole)):
                return True
        return False

    # -- discharge ----------------------------------------------------------------------

    def _combinations(self, box: dict, nonlinear: list[PolyConstraint]) -> list[tuple[MPoly, bool]]:
        """g_i + mu*g_j with mu cancelling the gradient along one axis at the box center."""
        center = {v: box[v].mid for v in self.variables}
        out = []
        for i, ci in enumerate(nonlinear):
            for j, cj in enumerate(nonlinear):
                if i == j:
                    continue
                for w in self.variables:
                    gi = self._partial(ci.poly, w).evaluate(center)
                    gj = self._partial(cj.poly, w).evaluate(center)
                    if gj == 0:
                        continue
                    mu = -gi / gj
                    if mu <= 0:
                        continue
                    for scale in COMBO_SCALES:
                        m = dyadic(float(mu * scale))
                        if m <= 0:
                            continue
                        phi = ci.poly + cj.poly * m
                        out.append((-phi, not (ci.strict or cj.strict)))
        return out

    def discharge(self, box: dict, cs: list[Constraint]) -> bool:
        polys = [c for c in cs if isinstance(c, PolyConstraint)]
        region = Region(box, [self._linear(c) for c in polys if c.is_linear],
                        [c for c in cs if isinstance(c, BoundConstraint)])
        nonlinear = [c for c in polys if not c.is_linear]
        cands = [(self._negated(c), not c.strict) for c in polys]
        width = max(box[v].width for v in self.variables)
        if len(nonlinear) >= 2 and width < COMBO_WIDTH:
            cands.extend(self._combinations(box, nonlinear))
        for h, strict in cands:
            if self.enclose_sign(h, strict, region):
                return True
        if len(self.variables) != 2:
            return False
        for v in self.variables:
            w = next(x for x in self.variables if x != v)
            whole = self.column_segment(region, v, w)
            if whole.empty():
                return True
            goods = []
            for h, strict in cands:
                goods.extend(self.reduction_goods(h, strict, region, v, w, self.reduction_depth, whole))
                if covered(whole, goods):
                    return True
        return False


def _aligned(constraints: list[Constraint], variables) -> list[Constraint]:
    out = []
    for c in constraints:
        if isinstance(c, PolyConstraint):
            try:
                c = PolyConstraint(c.poly.with_variables(variables), c.strict)
            except ChtError:
                raise SpecificationError(f"constraint {c.poly} uses variables outside {variables}",
                                         code="BAD_CLAIM")
        elif c.var not in variables:
            raise SpecificationError(f"bound on {c.var}, which is not among {variables}", code="BAD_CLAIM")
        out.append(c)
    return out


def prove(variables, box: dict, constraints: list[Constraint], budget: int = BUDGET,
          max_depth: int = MAX_DEPTH, reduction_depth: int = REDUCTION_DEPTH) -> ProofResult:
    """
    Decide whether the constraints have a common point in the box.
    Proved: no point. Refuted: `witness` satisfies every constraint exactly.
    BudgetExhausted: neither settled within `budget` boxes or `max_depth` bisections.
    """
    variables = tuple(variables)
    box = {v: RatInterval.of(box[v]) if not isinstance(box[v], RatInterval) else box[v] for v in variables}
    constraints = _aligned(constraints, variables)
    prover = BoxProver(variables, reduction_depth)
    stack = [(box, 0, constraints)]
    boxes = 0
    while stack:
        current, depth, cs = stack.pop()
        boxes += 1
        if boxes > budget:
            return ProofResult(EXHAUSTED, boxes - 1, box=current)
        if any(c.violated_on(current) for c in cs):
            continue
        live = [c for c in cs if not c.holds_on(current)]
        for pt in sample_points(current, variables):
            if all(c.satisfied_at(pt) for c in cs):
                return ProofResult(REFUTED, boxes, witness=pt)
        if not live:
            raise ChtError("box satisfies every constraint but none of its sample points does",
                           code="PROVER_STATE")
        if prover.discharge(current, live):
            continue
        widest = max(variables, key=lambda v: current[v].width)
        if depth >= max_depth or current[widest].width == 0:
            return ProofResult(EXHAUSTED, boxes, box=current)
        m = current[widest].mid
        stack.append(({**current, widest: RatInterval(m, current[widest].hi)}, depth + 1, live))
        stack.append(({**current, widest: RatInterval(current[widest].lo, m)}, depth + 1, live))
    log.debug("infeasible after %d boxes", boxes)
    return ProofResult(PROVED, boxes)


def decide_univariate(var: str, box: dict, constraints: list[Constraint]) -> ProofResult:
    """
    Exact decision for one variable: the feasible set is a union of points and open
    pieces between consecutive breakpoints (box ends, thresholds, roots), so testing each
    breakpoint and one rational per piece is complete. The first feasible point found,
    left to right, is the witness.
    """
    iv = RatInterval.of(box[var]) if not isinstance(box[var], RatInterval) else box[var]
    constraints = _aligned(constraints, (var,))
    breaks = [_alg(iv.lo), _alg(iv.hi)]
    for c in constraints:
        if isinstance(c, BoundConstraint):
            if c.threshold.compare_rational(iv.lo) >= 0 and c.threshold.compare_rational(iv.hi) <= 0:
                breaks.append(c.threshold)
            continue
        q = c.poly.to_upoly(var)
        if q.is_zero:
            continue
        sq = q.squarefree_part()
        if sq.degree < 1:
            continue
        for r in isolate_roots(sq, iv.lo, iv.hi):
            breaks.append(_alg(r.lo) if r.is_point else AlgebraicNumber(sq, r.lo, r.hi))
    breaks.sort(key=cmp_to_key(lambda x, y: x.compare(y)))
    points = []
    for p in breaks:
        if not points or points[-1].compare(p) != 0:
            points.append(p)

    def feasible_at(p: AlgebraicNumber) -> bool:
        for c in constraints:
            if isinstance(c, BoundConstraint):
                s = c.threshold.compare(p)
                ok = (s < 0 if c.strict else s <= 0) if c.lower else (s > 0 if c.strict else s >= 0)
            else:
                s = p.sign_of(c.poly.to_upoly(var))
                ok = s > 0 if c.strict else s >= 0
            if not ok:
                return False
        return True

    tested = 0
    for i, p in enumerate(points):
        tested += 1
        if feasible_at(p):
            return ProofResult(REFUTED, tested, witness={var: p.interval.lo if p.is_rational else p})
        if i + 1 < len(points):
            tested += 1
            m = AlgebraicNumber.between(p, points[i + 1])
            if all(c.satisfied_at({var: m}) for c in constraints):
                return ProofResult(REFUTED, tested, witness={var: m})
    return ProofResult(PROVED, tested)
