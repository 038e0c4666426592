# app/typeclass/classify.py
from fractions import Fraction
from functools import lru_cache

from app.algebra.interval import RatInterval
from app.algebra.rational import to_rat
from app.config.settings import PRECISION_BITS, PRECISION_CAP
from app.typeclass.polynomials import F_cubic_coefficients, T_A_value, build_F, fB_cubic_coefficients
from app.typeclass.schemas import AngleParams, CriticalInterval, Method, Triple, TypeVerdict, VerdictType
from app.typeclass.trig import cos_pi_over, four_cos_squared
from app.utils.errors import InputError, PrecisionError
from app.utils.logging import get_logger

log = get_logger("typeclass")


def angle_params(triple: Triple, precision: int = PRECISION_BITS, t=None) -> AngleParams:
    """Enclosures of r_k = cos(pi/n_k) and a, b, c = 4cos^2(pi/n_k), width <= 2^-precision."""
    if precision <= 0:
        raise InputError("precision must be positive", code="INVALID_PRECISION")
    r = [cos_pi_over(n, precision) for n in triple.entries()]
    squares = [four_cos_squared(n, precision) for n in triple.entries()]
    T = None
    if t is not None:
        t = RatInterval.of(to_rat(t) if not isinstance(t, RatInterval) else t)
        T = r[0] * r[1] * r[2] * t
    return AngleParams(triple=triple, r1=r[0], r2=r[1], r3=r[2], a=squares[0], b=squares[1], c=squares[2],
                       precision=precision, t=t, T=T)


def _horner(coeffs: list[RatInterval], x: RatInterval) -> RatInterval:
    acc = RatInterval.point(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=8192)
def _lambda_enclosures(n1, n2, bits: int) -> tuple:
    a = four_cos_squared(n1, bits)
    b = four_cos_squared(n2, bits)
    return tuple(lam.evaluate({"a": a, "b": b}) for lam in F_cubic_coefficients())


def F_enclosure(triple: Triple, bits: int) -> RatInterval:
    """F(a, b, c) over the enclosures, evaluated as a cubic in c with cached (a, b) coefficients."""
    lams = _lambda_enclosures(triple.n1, triple.n2, bits)
    c = four_cos_squared(triple.n3, bits)
    return _horner(list(lams), c)


def _decide(enclosure: RatInterval) -> VerdictType | None:
    if enclosure.lo > 0:
        return VerdictType.A
    if enclosure.hi <= 0:
        return VerdictType.B
    return None


def classify(triple: Triple, precision_cap: int = PRECISION_CAP, start_bits: int = PRECISION_BITS) -> TypeVerdict:
    """Type A iff F > 0; F <= 0 (including F = 0) is type B. Precision doubles until decided or capped."""
    bits = min(start_bits, precision_cap)
    while True:
        enclosure = F_enclosure(triple, bits)
        verdict = _decide(enclosure)
        if verdict is not None:
            return TypeVerdict(triple=triple, F_enclosure=enclosure, type=verdict, precision_used=bits)
        if bits >= precision_cap:
            log.warning("%s undecided at %d bits, F in %s", triple.label(), bits, enclosure)
            return TypeVerdict(triple=triple, F_enclosure=enclosure, type=VerdictType.INDETERMINATE,
                               precision_used=bits, detail="precision cap reached with 0 inside the enclosure")
        log.info("%s straddles 0 at %d bits, refining", triple.label(), bits)
        bits = min(bits * 2, precision_cap)


def t_upper(triple: Triple, precision: int = PRECISION_BITS) -> RatInterval:
    """t_u = min{(r1^2 + r2^2 + r3^2 - 1) / (2 r1 r2 r3), 1}."""
    p = angle_params(triple, precision)
    num = (p.a + p.b + p.c) / 4 - 1
    value = num / (p.r_product() * 2)
    return RatInterval(min(value.lo, Fraction(1)), min(value.hi, Fraction(1)))


def _piece_sign(coeffs, dcoeffs, lo: Fraction, hi: Fraction) -> int | None:
    box = RatInterval(lo, hi)
    naive = _horner(coeffs, box)
    m = box.mid
    centered = _horner(coeffs, RatInterval.point(m)) + _horner(dcoeffs, box) * (box - m)
    e = naive.intersect(centered) or naive
    if e.lo > 0:
        return 1
    if e.hi < 0:
        return -1
    return None


def critical_interval(triple: Triple, precision: int = PRECISION_BITS, max_pieces: int = 20000) -> CriticalInterval:
    """
    I = {T : f_B(T) >= 0} intersected with T <= T_A and the deformation range
    [-r1 r2 r3, r1 r2 r3 t_u). Returned as one interval with enclosed endpoints.
    """
    p = angle_params(triple, precision)
    tu = t_upper(triple, precision)
    if tu.hi <= -1:
        return CriticalInterval(triple=triple, empty=True)
    R = p.r_product()
    TA = T_A_value(p.a, p.b, p.c)
    dom_lo = -R
    dom_hi = R * tu

    abc = p.abc()
    coeffs = [q.evaluate(abc) for q in fB_cubic_coefficients()]
    dcoeffs = [coeffs[k] * k for k in range(1, 4)]
    width = Fraction(1, 1 << precision)

    start = dom_lo.lo
    stop = min(TA.hi, dom_hi.hi)
    if start >= stop:
        return CriticalInterval(triple=triple, empty=True)

    # classify pieces of [start, stop] as +, - or unresolved (0)
    pieces = []
    stack = [(start, stop)]
    while stack:
        lo, hi = stack.pop()
        s = _piece_sign(coeffs, dcoeffs, lo, hi)
        if s is None and hi - lo >= width:
            if len(pieces) + len(stack) > max_pieces:
                raise PrecisionError(f"cannot separate the roots of f_B for {triple.label()}",
                                     code="PRECISION")
            m = (lo + hi) / 2
            stack.append((m, hi))
            stack.append((lo, m))
            continue
        pieces.append((lo, hi, 0 if s is None else s))

    merged = []
    for lo, hi, s in pieces:
        if merged and merged[-1][2] == s and merged[-1][1] == lo:
            merged[-1] = (merged[-1][0], hi, s)
        else:
            merged.append((lo, hi, s))
    roots = [RatInterval(lo, hi) for lo, hi, s in merged if s == 0]

    runs = []  # maximal runs of pieces where f_B may be >= 0, as lists of pieces
    for piece in merged:
        if piece[2] == -1:
            continue
        if runs and runs[-1][-1][1] == piece[0]:
            runs[-1].append(piece)
        else:
            runs.append([piece])
    positive_runs = [run for run in runs if any(s == 1 for _, _, s in run)]
    if not positive_runs:
        return CriticalInterval(triple=triple, empty=True, T_A=TA, fB_roots=roots)
    if len(positive_runs) > 1:
        raise PrecisionError(f"f_B >= 0 splits into {len(positive_runs)} pieces for {triple.label()}",
                             code="PRECISION")
    run = positive_runs[0]
    first, last = run[0], run[-1]

    lower_closed = True
    if first[0] == start:
        lower = dom_lo if first[2] == 1 else dom_lo.hull(RatInterval(first[0], first[1]))
    else:
        lower = RatInterval(first[0], first[1])
    upper_closed = True
    if last[1] == stop:
        bound, upper_closed = (TA, True) if TA.hi <= dom_hi.hi else (dom_hi, False)
        upper = bound if last[2] == 1 else bound.hull(RatInterval(last[0], last[1]))
    else:
        upper = RatInterval(last[0], last[1])
    log.info("%s critical interval [%s, %s]", triple.label(), float(lower.mid), float(upper.mid))
    return CriticalInterval(triple=triple, empty=False, lower=lower, upper=upper, lower_closed=lower_closed,
                            upper_closed=upper_closed, T_A=TA, fB_roots=roots,
                            deformation_lower=dom_lo, deformation_upper=dom_hi)


def F_exact(a, b, c) -> Fraction:
    return build_F().evaluate({"a": a, "b": b, "c": c})
