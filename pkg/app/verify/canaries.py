# app/verify/canaries.py
"""
Deliberately false claims. Each must come back Refuted with a witness; a Proved
here means the prover is unsound.
"""
from fractions import Fraction
from functools import lru_cache

from app.algebra.interval import RatInterval
from app.algebra.mpoly import parse_mpoly
from app.typeclass.polynomials import build_F
from app.verify import identities as ids
from app.verify import lemmas
from app.verify.lemmas import P, at, cond, implication, ordered, sign
from app.verify.schemas import Claim, ClaimKind, ClaimStatus


def _false_identities() -> list[Claim]:
    E = ids.E
    eta, kappa = E(ids.ETA), E(ids.KAPPA)
    g1 = ids.g1()
    A, B, C = (g1.coefficient("c", k) for k in (2, 1, 0))
    return [
        Claim(id="X3.2.2.g2root-64eta", kind=ClaimKind.IDENTITY, variables=ids.ABC,
              statement="lambda^2 g2(-sigma/lambda) = 6(a+b+1)(ab-a-b-4)(64 eta + (a-b)^2 kappa)",
              sides=[(ids.homogenize(ids.g2(), "c", -E(ids.SIGMA), E(ids.LAMBDA)),
                      E("6*(a+b+1)*(-4-a-b+a*b)") * (eta * 64 + E("(a-b)^2") * kappa))]),
        Claim(id="X4.2.disc-scaled", kind=ClaimKind.IDENTITY, variables=ids.ABC,
              statement="(B^2 - 4AC)/12 = 4(-5+a+b)(43-96ab+51(a+b)+9(a+b)^2+(a+b)^3)",
              sides=[((B ** 2 - A * C * 4) / 12, E(ids.DISC_G1))]),
    ]


def _false_box_claims() -> list[Claim]:
    box1, box2, dom = lemmas._box(1), lemmas._box(2), ordered()
    s = ("s",)
    x = ("x",)
    eta = parse_mpoly(ids.ETA.replace("(a+b)", "s"), s)
    return [
        implication("X5.2.1", "j12(a) <= 0 implies a < 377/100", box2, dom,
                    [cond(P(lemmas.J12), "<=", "j12")], [at("a", "<", "377/100")]),
        implication("X5.2.9", "h20(b) >= 0 implies a >= (33-sqrt(129))/6", box2, dom,
                    [cond(P(lemmas.H20), ">=", "h20")], [at("a", ">=", "AS")]),
        implication("X5.2.11", "h22(b) > 0 implies a > 387/100", box2, dom,
                    [cond(P(lemmas.H22), ">", "h22")], [at("a", ">", "387/100")]),
        implication("X5.1.1-flip", "h1(b) >= 0 implies a < (sqrt(134)-4)/2", box1, dom,
                    [cond(P(ids.H1), ">=", "h1")], [at("a", "<", "A1")]),
        implication("X5.1.9-tight", "h8(b) > 0 implies a < 36/10", box1, dom,
                    [cond(P(ids.H8), ">", "h8")], [at("a", "<", "36/10")]),
        sign("X.x-minus-1", "x - 1 > 0 for 0 <= x <= 2", {"x": RatInterval(Fraction(0), Fraction(2))}, [],
             cond(parse_mpoly("x - 1", x), ">", "x-1"), variables=x),
        sign("X.eta-600", "eta(s) > 600 for 2 <= s <= 8", {"s": RatInterval(Fraction(2), Fraction(8))}, [],
             cond(eta - 600, ">", "eta-600"), variables=s),
        sign("X.F112-negative", "F(1,1,2) < 0", {v: RatInterval.point(q) for v, q in zip(ids.ABC, (1, 1, 2))}, [],
             cond(build_F(), "<", "F"), variables=ids.ABC),
    ]


@lru_cache(maxsize=1)
def canary_claims() -> tuple[Claim, ...]:
    claims = _false_identities() + _false_box_claims()
    return tuple(c.model_copy(update={"expect": ClaimStatus.REFUTED}) for c in claims)
