# app/verify/suite.py
import re
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping

from app.algebra.algebraic import AlgebraicNumber
from app.algebra.interval import RatInterval
from app.algebra.mpoly import MPoly
from app.algebra.rational import rat_text
from app.config.settings import BUDGET, JOBS, MAX_DEPTH, REDUCTION_DEPTH
from app.geometry.oracle import trace_constant_probe
from app.typeclass.polynomials import ABC, T_A_poly, build_F, build_fB
from app.utils.errors import InputError, SpecificationError
from app.utils.logging import get_logger
from app.verify.canaries import canary_claims
from app.verify.constraints import Condition, point_text, poly_condition
from app.verify.identities import identity_claims
from app.verify.lemmas import lemma_claims
from app.verify.prover import EXHAUSTED, PROVED, REFUTED, decide_univariate, prove
from app.verify.schemas import Claim, ClaimKind, ClaimReport, ClaimStatus

log = get_logger("verify")

_STATUS = {PROVED: ClaimStatus.PROVED, REFUTED: ClaimStatus.REFUTED, EXHAUSTED: ClaimStatus.BUDGET_EXHAUSTED}


# -- registry ----------------------------------------------------------------------------------

def registry(canaries: bool = False) -> list[Claim]:
    claims = list(identity_claims()) + list(lemma_claims())
    if canaries:
        claims += list(canary_claims())
    return claims


def claim_matches(pattern: str, claim_id: str) -> bool:
    """Glob on claim ids: `*` stays within one dot-separated part, `**` matches anything."""
    regex = ""
    i = 0
    while i < len(pattern):
        if pattern.startswith("**", i):
            regex += ".*"
            i += 2
        elif pattern[i] == "*":
            regex += "[^.]*"
            i += 1
        elif pattern[i] == "?":
            regex += "[^.]"
            i += 1
        else:
            regex += re.escape(pattern[i])
            i += 1
    return re.fullmatch(regex, claim_id) is not None


def select(pattern: str = "**", canaries: bool = False) -> list[Claim]:
    return sorted((c for c in registry(canaries) if claim_matches(pattern, c.id)), key=lambda c: c.id)


def find_claim(claim_id: str) -> Claim:
    for c in registry(canaries=True):
        if c.id == claim_id:
            return c
    raise InputError(f"no claim with id {claim_id!r}", code="UNKNOWN_CLAIM")


# -- witnesses ----------------------------------------------------------------------------------

def _holds(condition: Condition, point: Mapping) -> bool:
    if not any(isinstance(x, AlgebraicNumber) for x in point.values()):
        return condition.holds_at(point)
    (var, x), = point.items()
    c = condition.constraint()
    if condition.is_bound:
        s = c.threshold.compare(x)
        return (s < 0 if c.strict else s <= 0) if c.lower else (s > 0 if c.strict else s >= 0)
    s = x.sign_of(c.poly.with_variables((var,)).to_upoly(var))
    return s > 0 if c.strict else s >= 0


def refutes(claim: Claim, point: Mapping) -> bool:
    """Exact re-check: the point lies in the domain, meets every hypothesis and no conclusion."""
    if claim.kind == ClaimKind.IDENTITY:
        scope = {v: Fraction(0) for side in claim.sides for p in side for v in p.variables}
        scope.update(point)
        return any(lhs.evaluate(scope) != rhs.evaluate(scope) for lhs, rhs in claim.sides)
    for v, x in point.items():
        iv = claim.box[v]
        inside = (iv.lo <= x <= iv.hi) if isinstance(x, Fraction) else \
            (x.compare_rational(iv.lo) >= 0 and x.compare_rational(iv.hi) <= 0)
        if not inside:
            return False
    return (all(_holds(c, point) for c in claim.domain + claim.hypotheses)
            and not any(_holds(c, point) for c in claim.conclusion))


def _identity_witness(diff: MPoly) -> dict:
    variables = diff.used_variables
    span = range(0, max(diff.total_degree(), 0) + 2)
    for values in product(span, repeat=len(variables)):
        point = dict(zip(variables, (Fraction(v) for v in values)))
        if diff.evaluate(point) != 0:
            return point
    raise SpecificationError("nonzero difference vanishes on the whole test grid", code="BAD_CLAIM")


# -- single claims ----------------------------------------------------------------------------------

def check_identity(claim: Claim) -> ClaimReport:
    if claim.kind != ClaimKind.IDENTITY:
        raise InputError(f"{claim.id} is not an identity claim", code="BAD_CLAIM")
    if claim.denominator is not None and claim.denominator.is_zero:
        raise SpecificationError(f"{claim.id}: declared denominator is identically zero", code="ZERO_DENOMINATOR")
    start = time.perf_counter()
    effort = 0
    status, witness = ClaimStatus.PROVED, None
    for lhs, rhs in claim.sides:
        diff = lhs - rhs
        effort += len(lhs.terms) + len(rhs.terms)
        if not diff.is_zero:
            status, witness = ClaimStatus.REFUTED, point_text(_identity_witness(diff))
            break
    return ClaimReport(id=claim.id, kind=claim.kind, status=status, effort=effort, witness=witness,
                       elapsed=time.perf_counter() - start, note=claim.note, expect=claim.expect)


def claim_constraints(claim: Claim) -> list:
    """domain and hypotheses, plus the negated conclusion (a disjunction negates to a conjunction)."""
    conditions = claim.domain + claim.hypotheses + [c.negated() for c in claim.conclusion]
    return [c.constraint() for c in conditions]


def run_box_claim(claim: Claim, budget: int = BUDGET, max_depth: int = MAX_DEPTH,
                  reduction_depth: int = REDUCTION_DEPTH) -> ClaimReport:
    start = time.perf_counter()
    constraints = claim_constraints(claim)
    if len(claim.variables) == 1:
        result = decide_univariate(claim.variables[0], claim.box, constraints)
    else:
        result = prove(claim.variables, claim.box, constraints, budget=budget, max_depth=max_depth,
                       reduction_depth=reduction_depth)
    status = _STATUS[result.status]
    witness = None
    if status == ClaimStatus.REFUTED:
        if not refutes(claim, result.witness):
            raise SpecificationError(f"{claim.id}: witness {point_text(result.witness)} does not re-check",
                                     code="WITNESS_MISMATCH")
        witness = point_text(result.witness)
    return ClaimReport(id=claim.id, kind=claim.kind, status=status, effort=result.boxes, witness=witness,
                       elapsed=time.perf_counter() - start, note=claim.note, expect=claim.expect)


def run_claim(claim: Claim, budget: int = BUDGET, max_depth: int = MAX_DEPTH) -> ClaimReport:
    log.info("%s: start", claim.id)
    if claim.kind == ClaimKind.IDENTITY:
        report = check_identity(claim)
    else:
        report = run_box_claim(claim, budget, max_depth)
    log.info("%s: %s after %d", claim.id, report.status.value, report.effort)
    if not report.passed:
        log.warning("%s: %s, expected %s", claim.id, report.status.value, claim.expect.value)
    return report


def _box_of(box: Mapping) -> dict:
    return {v: iv if isinstance(iv, RatInterval) else RatInterval(*(Fraction(x) for x in iv))
            for v, iv in box.items()}


def prove_sign_on_box(poly: MPoly, box: Mapping, relation: str, budget: int = BUDGET,
                      domain: Iterable[Condition] = ()) -> ClaimReport:
    """poly REL 0 everywhere on the box (within `domain`)."""
    box = _box_of(box)
    claim = Claim(id="sign", kind=ClaimKind.SIGN_ON_BOX, statement=f"{poly} {relation} 0",
                  variables=tuple(box), box=box, domain=list(domain),
                  conclusion=[poly_condition(poly, relation)])
    return run_box_claim(claim, budget)


def prove_implication_on_box(hypotheses: Iterable[Condition], conclusion: Iterable[Condition] | Condition,
                             box: Mapping, budget: int = BUDGET, domain: Iterable[Condition] = ()) -> ClaimReport:
    """All hypotheses together imply at least one conclusion, on the box."""
    box = _box_of(box)
    if isinstance(conclusion, Condition):
        conclusion = [conclusion]
    hypotheses, conclusion = list(hypotheses), list(conclusion)
    claim = Claim(id="implication", kind=ClaimKind.IMPLICATION_ON_BOX,
                  statement=f"{' and '.join(h.text() for h in hypotheses)} implies "
                            f"{' or '.join(c.text() for c in conclusion)}",
                  variables=tuple(box), box=box, domain=list(domain), hypotheses=hypotheses, conclusion=conclusion)
    return run_box_claim(claim, budget)


# -- the suite ----------------------------------------------------------------------------------

def _run_by_id(claim_id: str, budget: int, max_depth: int) -> ClaimReport:
    return run_claim(find_claim(claim_id), budget, max_depth)


def run_lemma_suite(pattern: str = "**", jobs: int = JOBS, budget: int = BUDGET, max_depth: int = MAX_DEPTH,
                    canaries: bool = False) -> list[ClaimReport]:
    """Run every matching claim; reports come back sorted by claim id whatever the worker order."""
    claims = select(pattern, canaries)
    if not claims:
        raise InputError(f"no claim matches {pattern!r}", code="UNKNOWN_CLAIM")
    ids = [c.id for c in claims]
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_by_id, ids, [budget] * len(ids), [max_depth] * len(ids)))
    else:
        reports = [run_claim(c, budget, max_depth) for c in claims]
    return sorted(reports, key=lambda r: r.id)


def suite_passed(reports: Iterable[ClaimReport]) -> bool:
    return all(r.passed for r in reports)


# -- audit ----------------------------------------------------------------------------------

def _monomial(variables, exp) -> str:
    return "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(variables, exp) if e) or "1"


def audit_F_derivation(probe_samples: int = 50, seed: int = 0) -> ClaimReport:
    """
    Compose f_B with T = (ab+c-4)/16 and compare with the printed F term by term,
    both scaled by 16^4 so every coefficient is an integer.
    """
    start = time.perf_counter()
    scale = 16 ** 4
    composed = build_fB().compose({"T": T_A_poly()}).with_variables(ABC) * scale
    printed = build_F() * scale
    diff = []
    for exp in sorted(set(composed.terms) | set(printed.terms), key=printed.sort_key):
        x, y = composed.terms.get(exp, Fraction(0)), printed.terms.get(exp, Fraction(0))
        if x != y:
            diff.append({"monomial": _monomial(ABC, exp), "derived": rat_text(x), "printed": rat_text(y)})
    corner = {"a": 4, "b": 4, "c": 4}
    consistent = composed.evaluate(corner) == printed.evaluate(corner)
    probe = trace_constant_probe(probe_samples, seed)
    matched = not diff
    if not matched:
        log.warning("F differs from f_B(T_A) in %d coefficient(s); the matrix oracle arbitrates", len(diff))
    details = {
        "terms": len(printed.terms),
        "diff": diff,
        "corner_check": consistent,
        "arbiter": "polynomial" if matched else "geometry",
        "trace_probe": probe.to_dict(),
    }
    return ClaimReport(id="audit.F", kind=ClaimKind.IDENTITY,
                       status=ClaimStatus.PROVED if matched else ClaimStatus.REFUTED,
                       effort=len(composed.terms) + len(printed.terms), elapsed=time.perf_counter() - start,
                       witness=None if matched else {"monomial": diff[0]["monomial"]}, details=details)
