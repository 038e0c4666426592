# app/geometry/oracle.py
"""
Type decision straight from the definition: deform t upward over [-1, t_u) and see
which of W_A = I1 I3 I2 I3 and W_B = I1 I2 I3 turns elliptic first. Nothing here
touches the type polynomial.
"""
import math
import random
from typing import Callable

import numpy as np

from app.config.settings import ORACLE_BISECT, ORACLE_STEPS, ORACLE_TOL
from app.geometry.matrices import W_A, W_B, generators, gram_batch, gram_matrix, word_trace, word_traces_batch
from app.geometry.schemas import IsometryClass, TraceProbe, TraceValues, Transitions
from app.typeclass.polynomials import goldman_value
from app.typeclass.schemas import INF, AngleParams, Method, Triple, TypeVerdict, VerdictType
from app.utils.errors import InputError, NoTransitionError
from app.utils.logging import get_logger

log = get_logger("oracle")

REAL_TOL = 1e-10


def goldman_classify(tau: complex, tol: float = REAL_TOL) -> IsometryClass:
    tau = complex(tau)
    if abs(tau.imag) < tol:
        x = tau.real
        if abs(x - 3) < tol:
            return IsometryClass.PARABOLIC_REAL_TRACE
        if -1 - tol <= x < 3:
            return IsometryClass.ELLIPTIC_REAL_TRACE
        return IsometryClass.LOXODROMIC
    f = goldman_value(tau)
    scale = tol * (1 + abs(tau) ** 4)
    if f > scale:
        return IsometryClass.LOXODROMIC
    if f < -scale:
        return IsometryClass.REGULAR_ELLIPTIC
    return IsometryClass.SPECIAL_BOUNDARY


def cos_pi_over_float(n) -> float:
    return 1.0 if n == INF else math.cos(math.pi / n)


def t_upper_float(r) -> float:
    r1, r2, r3 = r
    return min((r1 * r1 + r2 * r2 + r3 * r3 - 1) / (2 * r1 * r2 * r3), 1.0)


def lemma_trace_values(params: AngleParams) -> TraceValues:
    """The closed-form traces of W_A and W_B; only compared against word_trace, never used to classify."""
    if params.t is None:
        raise InputError("trace values need a bound deformation parameter t", code="UNBOUND_VARIABLE")
    r1, r2, r3 = (float(x.mid) for x in (params.r1, params.r2, params.r3))
    t = float(params.t.mid)
    theta = math.acos(max(-1.0, min(1.0, t)))
    R = r1 * r2 * r3
    tau_A = 16 * r1 ** 2 * r2 ** 2 + 4 * r3 ** 2 - 16 * R * t
    tau_B = 8 * R * complex(math.cos(theta), math.sin(theta)) - 4 * (r1 ** 2 + r2 ** 2 + r3 ** 2) + 3
    return TraceValues(tau_A=tau_A, tau_B=tau_B, t=t)


def _elliptic(r, ts: np.ndarray, word) -> list[bool]:
    traces = word_traces_batch(word, gram_batch(r, np.arccos(np.clip(ts, -1.0, 1.0))))
    return [goldman_classify(tau).is_elliptic for tau in traces]


def _bisect(holds: Callable[[float], bool], lo: float, hi: float, steps: int) -> float:
    # invariant: holds(lo) is False and holds(hi) is True
    for _ in range(steps):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if holds(mid):
            hi = mid
        else:
            lo = mid
    return hi


def transition_points(triple: Triple, steps: int = ORACLE_STEPS, bisect: int = ORACLE_BISECT) -> Transitions:
    """
    Sweep t over [-1, t_u) in `steps` samples, then bisect each change of class.
    t_start is where both words have left the elliptic region; t_A / t_B are where each
    turns elliptic again (inf when it stays non-elliptic up to t_u).
    """
    r = [cos_pi_over_float(n) for n in triple.entries()]
    tu = t_upper_float(r)
    if tu <= -1:
        raise InputError(f"deformation space of {triple.label()} is empty", code="EMPTY_DEFORMATION")
    ts = -1 + (tu + 1) * np.arange(steps) / steps
    ell = {"A": _elliptic(r, ts, W_A), "B": _elliptic(r, ts, W_B)}

    start = next((i for i in range(steps) if not ell["A"][i] and not ell["B"][i]), None)
    if start is None:
        raise NoTransitionError(f"{triple.label()}: no sampled t leaves both words non-elliptic",
                                code="NO_TRANSITION", errors={"steps": steps})

    def calm(t: float) -> bool:
        return not any(_elliptic(r, np.array([t]), word)[0] for word in (W_A, W_B))

    t_start = -1.0 if start == 0 else _bisect(calm, float(ts[start - 1]), float(ts[start]), bisect)
    found = {}
    for name, word in (("A", W_A), ("B", W_B)):
        j = next((i for i in range(start + 1, steps) if ell[name][i]), None)
        if j is None:
            found[name] = math.inf
        else:
            found[name] = _bisect(lambda t, w=word: _elliptic(r, np.array([t]), w)[0],
                                  float(ts[j - 1]), float(ts[j]), bisect)
    return Transitions(t_start=t_start, t_A=found["A"], t_B=found["B"], t_u=tu)


def oracle_type(triple: Triple, steps: int = ORACLE_STEPS, tol: float = ORACLE_TOL,
                bisect: int = ORACLE_BISECT) -> TypeVerdict:
    found = transition_points(triple, steps, bisect)
    tA, tB = found.t_A, found.t_B
    if tA == math.inf and tB == math.inf:
        raise NoTransitionError(f"{triple.label()}: neither word turns elliptic before t_u = {found.t_u:.6g}",
                                code="NO_TRANSITION", errors={"steps": steps, "t_u": found.t_u})

    if tA < tB - tol:
        verdict = VerdictType.A
    elif tB < tA - tol:
        verdict = VerdictType.B
    else:
        log.warning("%s transitions within tolerance: t*_A=%.17g t*_B=%.17g", triple.label(), tA, tB)
        verdict = VerdictType.INDETERMINATE
    log.info("%s oracle %s (t*_A=%.12g, t*_B=%.12g)", triple.label(), verdict.value, tA, tB)
    return TypeVerdict(triple=triple, type=verdict, precision_used=53, method=Method.ORACLE,
                       detail=f"t*_A={tA:.12g}, t*_B={tB:.12g}")


def trace_constant_probe(samples: int = 50, seed: int = 0) -> TraceProbe:
    """Sample (triple, t) and compare tr(W_A) from explicit matrices with tau_A and tau_A - 1."""
    rng = random.Random(seed)
    err_exact = err_shifted = 0.0
    taken = 0
    while taken < samples:
        n = sorted(rng.randint(3, 40) for _ in range(3))
        r = [cos_pi_over_float(k) for k in n]
        tu = t_upper_float(r)
        if tu <= -1:
            continue
        t = -1 + (tu + 1) * rng.random()
        gens = generators(gram_matrix(*r, math.acos(t)))
        trace = word_trace(W_A, gens)
        R = r[0] * r[1] * r[2]
        tau_A = 16 * r[0] ** 2 * r[1] ** 2 + 4 * r[2] ** 2 - 16 * R * t
        err_exact = max(err_exact, abs(trace - tau_A))
        err_shifted = max(err_shifted, abs(trace - (tau_A - 1)))
        taken += 1
    realized = None
    if err_shifted < 1e-9:
        realized = "tau_A - 1"
    elif err_exact < 1e-9:
        realized = "tau_A"
    if realized != "tau_A":
        log.info("matrix trace of W_A realizes %s across %d samples", realized, samples)
    return TraceProbe(samples=samples, max_error_tau_A=err_exact, max_error_tau_A_minus_1=err_shifted,
                      realized=realized)
