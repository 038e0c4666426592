# app/verify/lemmas.py
"""
Inequality claims on boxes: the two-variable lemmas, the sub-claims of the case
analyses for a = b and the interior critical points, and the closing checks.
Domains are the printed ones: 1 <= a <= b <= 4 or 2 <= a <= b <= 4.
"""
from fractions import Fraction
from functools import lru_cache

from app.algebra.algebraic import AlgebraicNumber
from app.algebra.interval import RatInterval
from app.algebra.mpoly import MPoly, parse_mpoly
from app.typeclass.polynomials import build_F
from app.verify import identities as ids
from app.verify.constraints import Condition, bound_condition, poly_condition
from app.verify.schemas import Claim, ClaimKind

AB = ("a", "b")
XY = ("x", "y")


def P(text: str) -> MPoly:
    return parse_mpoly(text, AB)


def _ab(p: MPoly) -> MPoly:
    return p.with_variables(ids.ABC).compose({"c": MPoly.var("b", ids.ABC)}).with_variables(AB)


def _box(lo, hi=4, variables=AB) -> dict:
    return {v: RatInterval(Fraction(lo), Fraction(hi)) for v in variables}


@lru_cache(maxsize=1)
def thresholds() -> dict:
    """The algebraic cut points, each with its closed form."""
    return {
        "A1": (AlgebraicNumber.from_root([-59, 8, 2], 3, 4), "(sqrt(134)-4)/2"),
        "R3": (AlgebraicNumber.from_root([1, -4, 1], 3, 4), "2+sqrt(3)"),
        "R8": (AlgebraicNumber.from_root([-7, -2, 1], 3, 4), "1+2*sqrt(2)"),
        "AS": (AlgebraicNumber.from_root([80, -33, 3], 3, 4), "(33-sqrt(129))/6"),
        "R13": (AlgebraicNumber.from_root([212, -90, 9], 3, 4), "(15-sqrt(13))/3"),
    }


def at(var: str, rel: str, name_or_value) -> Condition:
    if isinstance(name_or_value, str) and name_or_value in thresholds():
        value, text = thresholds()[name_or_value]
        return bound_condition(var, rel, value, text)
    return bound_condition(var, rel, Fraction(name_or_value))


def cond(poly: MPoly, rel: str, label: str) -> Condition:
    return poly_condition(poly, rel, label)


def ordered() -> list[Condition]:
    return [cond(P("b-a"), ">=", "b-a")]


def lemma53_domain() -> list[Condition]:
    return ordered() + [cond(P("14+2*b-10*a"), "<", "14+2b-10a")]


def in_sum_product(text: str) -> MPoly:
    """A polynomial in x = a+b, y = ab, rewritten in a, b."""
    return parse_mpoly(text, XY).compose({"x": P("a+b"), "y": P("a*b")}).with_variables(AB)


def in_diff_sum(text: str) -> MPoly:
    """A polynomial in x = b-a, y = a+b, rewritten in a, b."""
    return parse_mpoly(text, XY).compose({"x": P("b-a"), "y": P("a+b")}).with_variables(AB)


def implication(cid: str, statement: str, box: dict, domain: list, hypotheses: list, conclusion: list,
                polys: dict | None = None, note: str | None = None, variables=AB) -> Claim:
    return Claim(id=cid, kind=ClaimKind.IMPLICATION_ON_BOX, statement=statement, variables=variables, box=box,
                 domain=domain, hypotheses=hypotheses, conclusion=conclusion, polys=polys or {}, note=note)


def sign(cid: str, statement: str, box: dict, domain: list, conclusion: Condition, polys: dict | None = None,
         note: str | None = None, variables=AB) -> Claim:
    return Claim(id=cid, kind=ClaimKind.SIGN_ON_BOX, statement=statement, variables=variables, box=box,
                 domain=domain, conclusion=[conclusion], polys=polys or {}, note=note)


# -- polynomial texts not needed by the identities -------------------------------------------

H5 = "21+6*a+a^2-8*a*b+4*b^2"
J7 = ("(-176+216*b-107*b^2+32*b^3+4*b^4)+(96-56*b+28*b^2-22*b^3-4*b^4)*a+(-8-26*b+10*b^2+8*b^3+b^4)*a^2"
      "+(4+4*b-2*b^2-2*b^3)*a^3+(b-1)^2*a^4")
J10 = "60+a^3*(1-b)-67*b+25*b^2+2*b^3+a^2*(5-6*b+4*b^2)+a*(-32+39*b-17*b^2-b^3)"
J12 = "(48-28*b+14*b^2-11*b^3-2*b^4)+(-8-26*b+10*b^2+8*b^3+b^4)*a+(6+6*b-3*b^2-3*b^3)*a^2+2*(b-1)^2*a^3"
H13 = "-32+10*a+3*a^2+(39-12*a-3*a^2)*b+(-17+8*a)*b^2-b^3"
H14 = "(48-8*a+6*a^2+2*a^3)+(-28-26*a+6*a^2-4*a^3)*b+(14+10*a-3*a^2+2*a^3)*b^2+(-11+8*a-3*a^2)*b^3+(-2+a)*b^4"
H16 = "16+24*a+9*a^2+a^3+(24-15*a-7*a^2-a^3)*b+(9-7*a+4*a^2)*b^2+(1-a)*b^3"
H17 = "53-3*a-3*a^2-a^3+(-123+42*a-3*a^2)*b+(21-3*a)*b^2-b^3"
H19 = ("96+8*a-36*a^2+2*a^3-2*a^4+(-80-22*a+32*a^2-2*a^3+2*a^4)*b+(46-32*a+16*a^2-6*a^3)*b^2"
       "+(12-14*a+4*a^2)*b^3")
H20 = "64+48*a-92*a^2-6*a^3-2*a^4+(96-184*a+110*a^2+2*a^4)*b+(36-18*a-6*a^3)*b^2+(4-8*a+4*a^2)*b^3"
H22 = "-64+50*a-14*a^2-2*a^3+(48-48*a+16*a^2)*b+(10-6*a)*b^2"
S5 = "16-2*y+(26-20*y+2*y^2)*x+(29-y)*x^2"
S6 = ("271+1037*y-854*y^2+226*y^3-25*y^4+y^5+(-492+756*y-180*y^2+12*y^3)*x+(378-180*y+18*y^2)*x^2"
      "+144*x^3")
S18 = ("(-271-1037*y+854*y^2-226*y^3+25*y^4-y^5)+(-492+756*y-180*y^2+12*y^3)*x+(-378+180*y-18*y^2)*x^2"
       "+144*x^3")
KAPPA_BOUND = "12672-6912*s+888*s^2+12*s^3-2*s^4"


def lemma51() -> list[Claim]:
    box, dom = _box(1), ordered()
    h1, h2, j3, h5, h6 = (P(t) for t in (ids.H1, ids.H2, ids.J3, H5, ids.H6))
    j7, h8, h9, j10, j11 = P(J7), P(ids.H8), P(ids.H8), P(J10), P(J10)
    s4 = in_sum_product(ids.S4)
    return [
        implication("L5.1.1", "h1(b) >= 0 implies a >= (sqrt(134)-4)/2", box, dom,
                    [cond(h1, ">=", "h1")], [at("a", ">=", "A1")], {"h1": h1}),
        implication("L5.1.2", "h2(b) < 0 implies a < 2+sqrt(3)", box, dom,
                    [cond(h2, "<", "h2")], [at("a", "<", "R3")], {"h2": h2}),
        implication("L5.1.3", "j3(b) >= 0 implies b >= 2+sqrt(3)", box, dom,
                    [cond(j3, ">=", "j3")], [at("b", ">=", "R3")], {"j3": j3}),
        implication("L5.1.4", "s4(y) > 0 and x >= 5 implies x < 39/5 (x = a+b, y = ab)", box, dom,
                    [cond(s4, ">", "s4"), cond(P("a+b-5"), ">=", "x-5")], [cond(P("a+b-39/5"), "<", "x-39/5")],
                    {"s4": s4}),
        implication("L5.1.5", "h5(b) <= 0 implies a >= 1+2*sqrt(2)", box, dom,
                    [cond(h5, "<=", "h5")], [at("a", ">=", "R8")], {"h5": h5}),
        implication("L5.1.6", "h6(b) > 0 implies a < 11/3", box, dom,
                    [cond(h6, ">", "h6")], [at("a", "<", "11/3")], {"h6": h6},
                    note="h6 = F(a,b,b); its b^4 coefficient is (a-2)^2 (printed under a repeated lambda_1 label)"),
        implication("L5.1.7", "j7(a) > 0 and a >= (33-sqrt(129))/6 implies b < 387/100", box, dom,
                    [cond(j7, ">", "j7"), at("a", ">=", "AS")], [at("b", "<", "387/100")], {"j7": j7}),
        implication("L5.1.8", "h8(b) <= 0 implies a >= (33-sqrt(129))/6", box, dom,
                    [cond(h8, "<=", "h8")], [at("a", ">=", "AS")], {"h8": h8}),
        implication("L5.1.9", "h9(b) > 0 implies a < 372/100", box, dom,
                    [cond(h9, ">", "h9")], [at("a", "<", "372/100")], {"h9": h9}),
        implication("L5.1.10", "j10(a) <= 0 and a < 11/3 implies b > 389/100", box, dom,
                    [cond(j10, "<=", "j10"), at("a", "<", "11/3")], [at("b", ">", "389/100")], {"j10": j10}),
        implication("L5.1.11", "j11(a) > 0 and a > 11/3 implies b < 390/100", box, dom,
                    [cond(j11, ">", "j11"), at("a", ">", "11/3")], [at("b", "<", "390/100")], {"j11": j11}),
    ]


def lemma52() -> list[Claim]:
    box, dom = _box(2), ordered()
    j12, h13, h14, h15, h16, h17 = (P(t) for t in (J12, H13, H14, H14, H16, H17))
    h19, h20, h21, h22 = P(H19), P(H20), P(H19), P(H22)
    s18 = parse_mpoly(S18, XY)
    return [
        implication("L5.2.1", "j12(a) < 0 implies a < 377/100", box, dom,
                    [cond(j12, "<", "j12")], [at("a", "<", "377/100")], {"j12": j12},
                    note="hypothesis read strictly; j12 <= 0 fails at a = b = 4"),
        implication("L5.2.2", "h13(b) > 0 implies a > (15-sqrt(13))/3", box, dom,
                    [cond(h13, ">", "h13")], [at("a", ">", "R13")], {"h13": h13}),
        implication("L5.2.3", "h14(b) >= 0 implies a >= 11/3", box, dom,
                    [cond(h14, ">=", "h14")], [at("a", ">=", "11/3")], {"h14": h14}),
        implication("L5.2.4", "h15(b) >= 0 and a < 372/100 implies b > 394/100", box, dom,
                    [cond(h15, ">=", "h15"), at("a", "<", "372/100")], [at("b", ">", "394/100")], {"h15": h15}),
        implication("L5.2.5", "h16(b) > 0 implies a < 384/100", box, dom,
                    [cond(h16, ">", "h16")], [at("a", "<", "384/100")], {"h16": h16}),
        implication("L5.2.6", "h17(b) <= 0 and a >= (33-sqrt(129))/6 implies a > 388/100", box, dom,
                    [cond(h17, "<=", "h17"), at("a", ">=", "AS")], [at("a", ">", "388/100")], {"h17": h17}),
        sign("L5.2.7", "s18(x) > 0 on 0 <= x <= 2, 4 <= y <= 8", _box(0, 2, ("x",)) | _box(4, 8, ("y",)), [],
             cond(s18, ">", "s18"), {"s18": s18}, variables=XY),
        implication("L5.2.8", "h19(b) > 0 implies a >= (33-sqrt(129))/6", box, dom,
                    [cond(h19, ">", "h19")], [at("a", ">=", "AS")], {"h19": h19},
                    note="hypothesis read strictly"),
        implication("L5.2.9", "h20(b) > 0 implies a >= (33-sqrt(129))/6", box, dom,
                    [cond(h20, ">", "h20")], [at("a", ">=", "AS")], {"h20": h20},
                    note="hypothesis read strictly; h20 >= 0 fails at (a, b) = (2, 4)"),
        implication("L5.2.10", "h21(b) < 0 implies a < 15/4", box, dom,
                    [cond(h21, "<", "h21")], [at("a", "<", "15/4")], {"h21": h21}),
        implication("L5.2.11", "h22(b) > 0 implies a > 3867/1000", box, dom,
                    [cond(h22, ">", "h22")], [at("a", ">", "3867/1000")], {"h22": h22},
                    note="bound 3867/1000; the printed 387/100 is refuted near a = 1981/512"),
    ]


def lemma53() -> list[Claim]:
    box, dom = _box(2), lemma53_domain()
    k1, k2, k3, k4 = P(ids.H8), P(ids.K2), P(ids.ALPHA5), P(ids.GAMMA5)
    s5, s6 = in_diff_sum(S5), in_diff_sum(S6)
    return [
        implication("L5.3.1", "h1(b) > 0 implies h2(b) < 0", box, dom,
                    [cond(k1, ">", "h1")], [cond(k2, "<", "h2")], {"k1": k1, "k2": k2},
                    note="h1 of this lemma is h8 of Lemma 5.1"),
        implication("L5.3.2", "h3(b) >= 0 and a >= (33-sqrt(129))/6 implies h4(b) > 0", box, dom,
                    [cond(k3, ">=", "h3"), at("a", ">=", "AS")], [cond(k4, ">", "h4")], {"k3": k3, "k4": k4},
                    note="h3 and h4 of this lemma are alpha5 and gamma5 of the g5 division"),
        implication("L5.3.3", "s5(y) > 0 and a >= (33-sqrt(129))/6 implies s6(y) < 0 (x = b-a, y = a+b)", box, dom,
                    [cond(s5, ">", "s5"), at("a", ">=", "AS")], [cond(s6, "<", "s6")], {"s5": s5, "s6": s6}),
    ]


def case_analysis() -> list[Claim]:
    """Sub-claims for a = b, c = b and the interior critical points."""
    box1, box2, dom = _box(1), _box(2), ordered()
    g1b, g1pb = _ab(ids.g1()), _ab(ids.g1().partial("c"))
    g2b, g2pb = _ab(ids.g2()), _ab(ids.g2().partial("c"))
    Fbb = _ab(build_F())
    delta, eps, kappa = P(ids.DELTA), P(ids.EPSILON), P(ids.KAPPA)
    disc = P(ids.DISC_G1)
    alpha3, gamma3 = P(ids.ALPHA3), P(ids.GAMMA3)
    return [
        implication("P3.2.1.g2pb", "g2'(b) >= 0 implies g2(b) >= 0", box1, dom,
                    [cond(g2pb, ">=", "g2'(b)")], [cond(g2b, ">=", "g2(b)")], {"g2'(b)": g2pb, "g2(b)": g2b},
                    note="read with h = g2 in case (ii)"),
        sign("P3.2.1.delta", "delta > 0", box1, dom, cond(delta, ">", "delta"), {"delta": delta}),
        implication("P3.2.1.eps", "epsilon <= 0 and a+b >= 5 implies a+b > 79/10", box1, dom,
                    [cond(eps, "<=", "epsilon"), cond(P("a+b-5"), ">=", "a+b-5")],
                    [cond(P("a+b-79/10"), ">", "a+b-79/10")], {"epsilon": eps}),
        implication("P3.2.1.case", "g1(b) > 0 implies g2(b) < 0", box1, dom,
                    [cond(g1b, ">", "g1(b)")], [cond(g2b, "<", "g2(b)")], {"g1(b)": g1b}),
        implication("P3.2.2.kappa", "b >= 2+sqrt(3) and a >= (33-sqrt(129))/6 implies kappa > 0", box1, dom,
                    [at("b", ">=", "R3"), at("a", ">=", "AS")], [cond(kappa, ">", "kappa")], {"kappa": kappa}),
        implication("L4.2.1", "Delta >= 0 and g1'(b) < 0 implies g1(b) <= 0", box1, dom,
                    [cond(disc, ">=", "Delta"), cond(g1pb, "<", "g1'(b)")], [cond(g1b, "<=", "g1(b)")],
                    {"g1'(b)": g1pb}),
        implication("L4.2.2", "Delta >= 0 and g1(b) <= 0 implies F(a,b,b) <= 0", box1, dom,
                    [cond(disc, ">=", "Delta"), cond(g1b, "<=", "g1(b)")], [cond(Fbb, "<=", "F(a,b,b)")],
                    {"F(a,b,b)": Fbb}),
        implication("P4.3.1.alpha", "a >= (33-sqrt(129))/6 and a < 384/100 implies alpha > 0", box2, dom,
                    [at("a", ">=", "AS"), at("a", "<", "384/100")], [cond(alpha3, ">", "alpha")],
                    {"alpha3": alpha3}),
        sign("P4.3.1.gamma", "gamma >= 0", box2, dom, cond(gamma3, ">=", "gamma"), {"gamma3": gamma3}),
    ]


def univariate() -> list[Claim]:
    """One-variable claims, decided exactly."""
    s = ("s",)
    eta = parse_mpoly(ids.ETA.replace("(a+b)", "s"), s)
    kappa_bound = parse_mpoly(KAPPA_BOUND, s)
    F1ss = build_F().compose({"a": 1, "b": MPoly.var("s"), "c": MPoly.var("s")}).with_variables(s)
    A = ("a",)
    alpha = parse_mpoly(ids.ALPHA53, A)
    gamma = parse_mpoly(ids.GAMMA53, A)
    closed = parse_mpoly(ids.ALPHA_GAMMA_53, A)
    AS, AS_text = thresholds()["AS"]
    sqrt3_lo = AlgebraicNumber.from_root([6, -6, 1], 4, 5)  # 3+sqrt(3)
    return [
        sign("P3.2.2.eta", "eta(s) > 0 for 2 <= s <= 8", {"s": RatInterval(Fraction(2), Fraction(8))}, [],
             cond(eta, ">", "eta"), {"eta": eta}, variables=s),
        sign("P3.2.2.kappa-bound", "12672-6912s+888s^2+12s^3-2s^4 > 0 for 3+sqrt(3) <= s <= 8",
             {"s": RatInterval(Fraction(4), Fraction(8))}, [bound_condition("s", ">=", sqrt3_lo, "3+sqrt(3)")],
             cond(kappa_bound, ">", "kappa bound"), {"kappa bound": kappa_bound}, variables=s),
        sign("C4.F1ss", "F(1,s,s) > 0 for 2 <= s <= 4", {"s": RatInterval(Fraction(2), Fraction(4))}, [],
             cond(F1ss, ">", "F(1,s,s)"), {"F(1,s,s)": F1ss}, variables=s),
        sign("C4.F112", "F(1,1,2) > 0", {v: RatInterval.point(x) for v, x in zip(ids.ABC, (1, 1, 2))}, [],
             cond(build_F(), ">", "F"), variables=ids.ABC, note="exact value 25"),
        sign("L5.3.alpha", "alpha(a) > 0 for (33-sqrt(129))/6 <= a < 372/100",
             {"a": RatInterval(Fraction(3), Fraction(4))},
             [bound_condition("a", ">=", AS, AS_text), bound_condition("a", "<", Fraction(372, 100))],
             cond(alpha, ">", "alpha"), variables=A),
        sign("L5.3.gamma-at-as", "gamma((33-sqrt(129))/6) > 0", {"a": RatInterval(Fraction(3), Fraction(4))},
             [bound_condition("a", ">=", AS, AS_text), bound_condition("a", "<=", AS, AS_text)],
             cond(gamma, ">", "gamma"), variables=A),
        sign("L5.3.disc-sign", "alpha^2 - gamma^2 Delta >= 0 for (33-sqrt(129))/6 <= a < 372/100",
             {"a": RatInterval(Fraction(3), Fraction(4))},
             [bound_condition("a", ">=", AS, AS_text), bound_condition("a", "<", Fraction(372, 100))],
             cond(closed, ">=", "alpha^2-gamma^2 Delta"), {"alpha^2-gamma^2 Delta": closed}, variables=A),
    ]


@lru_cache(maxsize=1)
def lemma_claims() -> tuple[Claim, ...]:
    return tuple(lemma51() + lemma52() + lemma53() + case_analysis() + univariate())
