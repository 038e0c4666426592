# app/verify/identities.py
"""
Polynomial identities behind the reductions of F: long divisions, evaluations at
special points, discriminants and factorizations. Each claim stores both sides
already multiplied through by its denominator.
"""
from functools import lru_cache

from app.algebra.mpoly import MPoly, parse_mpoly
from app.algebra.resultant import discriminant
from app.typeclass.polynomials import ABC, T_A_poly, build_F, build_fB
from app.verify.schemas import Claim, ClaimKind


def E(text: str) -> MPoly:
    return parse_mpoly(text, ABC)


def sub(p: MPoly, var: str, value) -> MPoly:
    if isinstance(value, str):
        value = E(value)
    return p.compose({var: value}).with_variables(ABC)


def homogenize(p: MPoly, var: str, num: MPoly, den: MPoly) -> MPoly:
    """den^n * p(num/den) for n = deg_var(p)."""
    n = p.degree(var)
    return sum((p.coefficient(var, k) * num ** k * den ** (n - k) for k in range(n + 1)), MPoly.const(0, ABC))


# -- the derived polynomials of F -------------------------------------------------------

@lru_cache(maxsize=None)
def g1() -> MPoly:
    return build_F().partial("c")


@lru_cache(maxsize=None)
def g2() -> MPoly:
    """f_B'(T_A)."""
    return build_fB().partial("T").compose({"T": T_A_poly()}).with_variables(ABC)


@lru_cache(maxsize=None)
def g3() -> MPoly:
    return build_fB().partial("T").partial("T").compose({"T": T_A_poly()}).with_variables(ABC)


@lru_cache(maxsize=None)
def g4() -> MPoly:
    return build_F().partial("a")


@lru_cache(maxsize=None)
def g5() -> MPoly:
    return build_F().partial("b")


# -- named auxiliary polynomials ---------------------------------------------------------

PHI = "a^3*(1-b)+60-67*b+25*b^2+2*b^3+a^2*(5-6*b+4*b^2)+a*(-32+39*b-17*b^2-b^3)"
PSI = "a^3*(-1+b)+12-27*b+2*b^2-4*b^3+a^2*(-1+b-3*b^2)+a*(-24+23*b+b^2+2*b^3)"
CHI = "-47+93*b-63*b^2+18*b^3-2*b^4+a*(b-2)*(-18+22*b-8*b^2+b^3)"
GAMMA1 = "16-33*a*b+6*a^2*b^2+24*(a+b)-10*a*b*(a+b)+9*(a+b)^2-a*b*(a+b)^2+(a+b)^3"
ALPHA1 = "-53-6*a*b*(a+b-1)+3*(a+b)+3*(a+b)^2+(a+b)^3"
EPSILON = "542+1090*(a+b)-73*(a+b)^2-97*(a+b)^3+19*(a+b)^4-(a+b)^5"
DELTA = "211-48*a*b+39*(a+b)-3*(a+b)^2+(a+b)^3"
LAMBDA = "-9+a*b*(a+b+3)"
SIGMA = "33+9*a*b-6*a^2*b^2+3*(a+b)-6*a*b*(a+b)+6*(a+b)^2+a*b*(a+b)^2"
ETA = "1344+1152*(a+b)-384*(a+b)^2+192*(a+b)^3+12*(a+b)^4-12*(a+b)^5+(a+b)^6"
KAPPA = "384-240*a*b+48*a^2*b^2+48*a*b*(a+b)-12*(a+b)^2-4*a*b*(a+b)^2+12*(a+b)^3-(a+b)^4"
LAMBDA0 = ("-176+96*a-8*a^2+4*a^3+a^4*(-1+b)^2+96*b+8*a*b-36*a^2*b+2*a^3*b-8*b^2-36*a*b^2+23*a^2*b^2"
           "+4*b^3+2*a*b^3-2*a^3*b^3+b^4-2*a*b^4+a^2*b^4")
LAMBDA1 = "120-64*a+10*a^2+2*a^3-64*b+50*a*b-14*a^2*b-2*a^3*b+10*b^2-14*a*b^2+8*a^2*b^2+2*b^3-2*a*b^3"
LAMBDA2 = "-35+14*a+a^2+14*b-10*a*b+b^2"
DISC_G1 = "4*(-5+a+b)*(43-96*a*b+51*(a+b)+9*(a+b)^2+(a+b)^3)"
ALPHA3 = "53-3*a-3*a^2-a^3-123*b+42*a*b-3*a^2*b+21*b^2-3*a*b^2-b^3"
GAMMA3 = "(b-a)*(-24-9*a-a^2+49*b-4*a*b-3*b^2)+4*(4-b)"
ALPHA5 = "53-123*a+21*a^2-a^3+(-3+42*a-3*a^2)*b+(-3-3*a)*b^2-b^3"
GAMMA5 = "16-28*a+49*a^2-3*a^3+(24-58*a-a^2)*b+(9+3*a)*b^2+b^3"
SQUARE72 = "72*(7-a+a^2-b-2*a*b+b^2)^2"

H1 = "-3+4*a-2*a^2+(2-3*a+a^2)*b+(-4+a)*b^2"
H2 = "12-24*a-a^2-a^3+(-27+23*a+a^2+a^3)*b+(2+a-3*a^2)*b^2+(-4+2*a)*b^3"
J3 = "12+a^3*(-1+b)-27*b+2*b^2-4*b^3+a^2*(-1+b-3*b^2)+a*(-24+23*b+b^2+2*b^3)"
S4 = "16+24*x+9*x^2+x^3+(-33-10*x-x^2)*y+6*y^2"
H6 = ("(-176+96*a-8*a^2+4*a^3+a^4)+(216-56*a-26*a^2+4*a^3-2*a^4)*b+(-107+28*a+10*a^2-2*a^3+a^4)*b^2"
      "+(32-22*a+8*a^2-2*a^3)*b^3+(a-2)^2*b^4")
H8 = "60-32*a+5*a^2+a^3+(-67+39*a-6*a^2-a^3)*b+(25-17*a+4*a^2)*b^2+(2-a)*b^3"

# Lemma 5.3: its h1 is H8, its h2 below; R is the quotient of the division
K2 = "48+4*a-18*a^2+a^3-a^4-(40+11*a-16*a^2+a^3-a^4)*b+(23-16*a+8*a^2-3*a^3)*b^2+(6-7*a+2*a^2)*b^3"
R53 = "(-2+a)*(-66+11*a+a^2)-(161-101*a+11*a^2+a^3)*b+(-4+a)*(-13+5*a)*b^2"
ALPHA53 = "(a-3)*(292875-596625*a+523563*a^2-253410*a^3+70828*a^4-10189*a^5+166*a^6+175*a^7-24*a^8+a^9)"
GAMMA53 = "-11041+22881*a-19330*a^2+8687*a^3-2254*a^4+340*a^5-28*a^6+a^7"
ALPHA_GAMMA_53 = "-4*(-4+a)^4*(-13+5*a)^3*(80-33*a+3*a^2)*(73-90*a+46*a^2-11*a^3+a^4)^2"


def _identity(cid: str, statement: str, lhs: MPoly, rhs: MPoly, polys: dict | None = None,
              denominator: MPoly | None = None, note: str | None = None) -> Claim:
    return Claim(id=cid, kind=ClaimKind.IDENTITY, statement=statement, variables=ABC,
                 sides=[(lhs, rhs)], denominator=denominator, polys=polys or {}, note=note)


def _surd_mul(x, y, D):
    return (x[0] * y[0] + x[1] * y[1] * D, x[0] * y[1] + x[1] * y[0])


def surd_evaluate(p: MPoly, var: str, A: MPoly, B: MPoly, D: MPoly, sign: int) -> tuple[MPoly, MPoly]:
    """
    (2A)^n * p((-B + sign*sqrt(D)) / (2A)) as (rational part, sqrt(D) part) in Q[a][sqrt(D)].
    """
    n = p.degree(var)
    zero, one = MPoly.const(0, ABC), MPoly.const(1, ABC)
    num = (-B, MPoly.const(sign, ABC))
    acc, power = (zero, zero), (one, zero)
    for k in range(n + 1):
        scale = p.coefficient(var, k) * (A * 2) ** (n - k)
        acc = (acc[0] + power[0] * scale, acc[1] + power[1] * scale)
        power = _surd_mul(power, num, D)
    return acc


def _surd_claims() -> list[Claim]:
    R = E(R53)
    A, B, C = R.coefficient("b", 2), R.coefficient("b", 1), R.coefficient("b", 0)
    D = B ** 2 - A * C * 4
    alpha, gamma = E(ALPHA53), E(GAMMA53)
    out = []
    for sign, tag in ((1, "plus"), (-1, "minus")):
        rational, surd = surd_evaluate(E(H8), "b", A, B, D, sign)
        out.append(Claim(
            id=f"L5.3.h1b0.{tag}", kind=ClaimKind.IDENTITY, variables=ABC,
            statement=f"(2A)^3 h1(b0) = -24(alpha {'+' if sign > 0 else '-'} gamma sqrt(Delta)) componentwise, "
                      f"b0 = (-B {'+' if sign > 0 else '-'} sqrt(Delta))/(2A) the roots of R in b",
            sides=[(rational, alpha * -24), (surd, gamma * (-24 * sign))],
            denominator=(A * 2) ** 3,
            note="equivalently h1(b0) = 3(alpha + gamma sqrt(Delta))/((4-a)^3 (5a-13)^3)"))
    return out


@lru_cache(maxsize=1)
def identity_claims() -> tuple[Claim, ...]:
    a, b, c = (MPoly.var(v, ABC) for v in ABC)
    F = build_F()
    phi, psi, chi = E(PHI), E(PSI), E(CHI)
    alpha1, gamma1 = E(ALPHA1), E(GAMMA1)
    lam, sigma = E(LAMBDA), E(SIGMA)
    alpha3, gamma3, alpha5, gamma5 = E(ALPHA3), E(GAMMA3), E(ALPHA5), E(GAMMA5)
    square72 = E(SQUARE72)
    h1, h2, j3, h6 = E(H1), E(H2), E(J3), E(H6)
    xy = ("x", "y")
    s4 = parse_mpoly(S4, xy)
    c0_num = alpha1 * 4 - E("a+b-5") * gamma1
    A1, B1, C1 = (g1().coefficient("c", k) for k in (2, 1, 0))
    Ah, Bh, Ch = (h1.coefficient("b", k) for k in (2, 1, 0))
    c3_num = E("4-4*b+a*b") * alpha3 + E("a+b-5") * gamma3
    c5_num = E("4-4*a+a*b") * alpha5 + E("a+b-5") * gamma5
    R = E(R53)
    Ar, Br, Cr = R.coefficient("b", 2), R.coefficient("b", 1), R.coefficient("b", 0)

    claims = [
        _identity("P3.2.1.phi", "g1(a,b,b)/2 = phi", sub(g1(), "c", b) / 2, phi,
                  {"g1": g1(), "phi": phi}),
        _identity("P3.2.1.psi", "g2(a,b,b)/32 = psi", sub(g2(), "c", b) / 32, psi,
                  {"g2": g2(), "psi": psi}),
        _identity("P3.2.1.div1", "psi = -phi + (b-4)(a^2(b-1) + a(14-12b+b^2) - 18 + 19b - 2b^2)", psi,
                  -phi + E("(b-4)*(a^2*(-1+b)+a*(14-12*b+b^2)-18+19*b-2*b^2)")),
        _identity("P3.2.1.div2", "(b-1)(b-4) phi = (psi+phi)(19-18b+5b^2-a(b-1)) - 6(b-4) chi",
                  E("(b-1)*(b-4)") * phi, (psi + phi) * E("19-18*b+5*b^2-a*(b-1)") - E("6*(b-4)") * chi,
                  {"chi": chi}),
        _identity("P3.2.1.g1at4", "g1(a,b,4) = 2 gamma", sub(g1(), "c", 4), gamma1 * 2, {"gamma1": gamma1}),
        _identity("P3.2.1.div3", "3 g2 = -8(a+b+1) g1 + 16(alpha c - 4 alpha + (a+b-5) gamma)", g2() * 3,
                  E("-8*(a+b+1)") * g1() + (alpha1 * c - alpha1 * 4 + E("a+b-5") * gamma1) * 16,
                  {"alpha1": alpha1}),
        _identity("P3.2.1.g1c0", "alpha^2 g1(c0) = 72(7-a+a^2-b-2ab+b^2)^2 gamma, c0 = 4 - (a+b-5) gamma/alpha",
                  homogenize(g1(), "c", c0_num, alpha1), square72 * gamma1, {"c0": c0_num, "square72": square72},
                  denominator=alpha1 ** 2),
        _identity("P3.2.1.g1pc0", "alpha g1'(c0) = epsilon + 3(a-b)^2 delta",
                  homogenize(g1().partial("c"), "c", c0_num, alpha1), E(EPSILON) + E("3*(a-b)^2") * E(DELTA),
                  denominator=alpha1),
        _identity("P3.2.2.g3", "g3/512 = 21+6a+a^2+6b-10ab+b^2+(-6+2a+2b)c+c^2", g3() / 512,
                  E("21+6*a+a^2+6*b-10*a*b+b^2+(-6+2*a+2*b)*c+c^2"), {"g3": g3()}),
        _identity("P3.2.2.g3p", "(d g3/dc)/512 = 2(a+b+c-3)", g3().partial("c") / 512, E("2*(a+b+c-3)")),
        _identity("P3.2.2.div", "(a+b+1) g3/512 = -g2/32 + sigma + lambda c", E("a+b+1") * g3() / 512,
                  g2() / -32 + sigma + lam * c, {"lambda": lam, "sigma": sigma}),
        _identity("P3.2.2.g2root", "lambda^2 g2(-sigma/lambda) = 6(a+b+1)(ab-a-b-4)(eta + (a-b)^2 kappa)",
                  homogenize(g2(), "c", -sigma, lam),
                  E("6*(a+b+1)*(-4-a-b+a*b)") * (E(ETA) + E("(a-b)^2") * E(KAPPA)), denominator=lam ** 2,
                  note="the eta term carries factor 1; a factor 64 on eta does not give an identity"),
        _identity("P4.1.coeffs", "F = 4c^3 + lambda2 c^2 + lambda1 c + lambda0", F,
                  E("4*c^3") + E(LAMBDA2) * c ** 2 + E(LAMBDA1) * c + E(LAMBDA0),
                  {"lambda0": E(LAMBDA0), "lambda1": E(LAMBDA1), "lambda2": E(LAMBDA2)}),
        _identity("L4.2.disc", "disc_c(g1) = 4(-5+a+b)(43-96ab+51(a+b)+9(a+b)^2+(a+b)^3)",
                  discriminant(g1(), "c").with_variables(ABC), E(DISC_G1), {"Delta": E(DISC_G1)},
                  note="plain discriminant B^2 - 4AC of the quadratic g1 in c"),
        _identity("L4.2.disc.expanded", "B^2 - 4AC for g1 = A c^2 + B c + C equals the resultant form",
                  B1 ** 2 - A1 * C1 * 4, E(DISC_G1)),
        _identity("L4.2.g2mid", "g1'((a+b)/2) = -70-24ab+40(a+b)+2(a+b)^2", sub(g1().partial("c"), "c", "(a+b)/2"),
                  E("-70-24*a*b+40*(a+b)+2*(a+b)^2")),
        _identity("L4.2.split", "g1(a,b,b) = 2(b-a)(...) + 120-198b+138b^2-40b^3+4b^4", sub(g1(), "c", b),
                  E("2*(b-a)*((b-1)*a^2+(-5+5*b-3*b^2)*a+(32-44*b+22*b^2-2*b^3))+120-198*b+138*b^2-40*b^3+4*b^4")),
        _identity("P4.3.1.div", "6 g4 = (7+a-5b) g1 + 2(alpha c - (4-4b+ab) alpha - (a+b-5) gamma)", g4() * 6,
                  E("7+a-5*b") * g1() + (alpha3 * c - E("4-4*b+a*b") * alpha3 - E("a+b-5") * gamma3) * 2,
                  {"g4": g4()}),
        _identity("P4.3.1.g1c0", "alpha^2 g1(c0) = 72(7-a+a^2-b-2ab+b^2)^2 gamma, c0 = 4-4b+ab + (a+b-5) gamma/alpha",
                  homogenize(g1(), "c", c3_num, alpha3), square72 * gamma3, denominator=alpha3 ** 2),
        _identity("P4.3.2.div", "6 g5 = (7+b-5a) g1 + 2(alpha c - (4-4a+ab) alpha - (a+b-5) gamma)", g5() * 6,
                  E("7+b-5*a") * g1() + (alpha5 * c - E("4-4*a+a*b") * alpha5 - E("a+b-5") * gamma5) * 2,
                  {"g5": g5(), "alpha5": alpha5, "gamma5": gamma5}),
        _identity("P4.3.2.g1c0", "alpha^2 g1(c0) = 72(7-a+a^2-b-2ab+b^2)^2 gamma, c0 = 4-4a+ab + (a+b-5) gamma/alpha",
                  homogenize(g1(), "c", c5_num, alpha5), square72 * gamma5, denominator=alpha5 ** 2),
        _identity("P4.3.2.eq", "g5(2,4,4) = 0", MPoly.const(g5().evaluate({"a": 2, "b": 4, "c": 4}), ABC),
                  MPoly.const(0, ABC), note="the boundary point a=2, b=c=4 is checked by exact evaluation"),
        _identity("L5.1.1.disc", "disc_b(h1) = -44+64a-35a^2+2a^3+a^4", Bh ** 2 - Ah * Ch * 4,
                  E("-44+64*a-35*a^2+2*a^3+a^4")),
        _identity("L5.1.1.d4", "h1'(4) = -30+5a+a^2", sub(h1.partial("b"), "b", 4), E("-30+5*a+a^2")),
        _identity("L5.1.1.at4", "h1(4) = -59+8a+2a^2", sub(h1, "b", 4), E("-59+8*a+2*a^2")),
        _identity("L5.1.2.diag", "h2(a) = -3(a-4)(1-4a+a^2)", sub(h2, "b", a), E("-3*(-4+a)*(1-4*a+a^2)")),
        _identity("L5.1.2.d", "h2'(a) = (a-3)^3", sub(h2.partial("b"), "b", a), E("(a-3)^3")),
        _identity("L5.1.2.dd", "h2''(a) = 4-22a+6a^2", sub(h2.partial("b").partial("b"), "b", a), E("4-22*a+6*a^2")),
        _identity("L5.1.3.diag", "j3(b,b) = -3(b-4)(1-4b+b^2)", sub(j3, "a", b), E("-3*(-4+b)*(1-4*b+b^2)")),
        _identity("L5.1.3.d", "d j3/da at a=b = -24+21b-b^3", sub(j3.partial("a"), "a", b), E("-24+21*b-b^3")),
        _identity("L5.1.3.dd", "d2 j3/da2 at a=b = -2-4b", sub(j3.partial("a").partial("a"), "a", b), E("-2-4*b")),
        _identity("L5.1.4.top", "s4(x, x^2/4) = (x-8)(-16-26x-4x^2+x^3)/8",
                  s4.compose({"y": parse_mpoly("x^2/4", xy)}), parse_mpoly("(-8+x)*(-16-26*x-4*x^2+x^3)/8", xy)),
        _identity("L5.1.4.bottom", "s4(x, 4x-16) = -(x-8)(260-57x+3x^2)",
                  s4.compose({"y": parse_mpoly("4*x-16", xy)}), parse_mpoly("-(-8+x)*(260-57*x+3*x^2)", xy)),
        _identity("L5.1.6.diag", "h6(a,a) = -(a-4)^2 (a-1)(3a-11)", sub(h6, "b", a), E("-(-4+a)^2*(-1+a)*(-11+3*a)")),
        _identity("L5.1.6.is-Fbb", "F(a,b,b) = h6", sub(F, "c", b), h6,
                  note="the b^4 coefficient of h6 is (a-2)^2; its printed label repeats lambda_1"),
        _identity("L5.1.8.is-g1b", "g1(a,b,b)/2 = h8", sub(g1(), "c", b) / 2, E(H8)),
        _identity("L5.3.div", "h2 - (3-2a) h1 = (a-1) R", E(K2) - E("3-2*a") * E(H8), E("a-1") * R, {"R": R},
                  note="the factor in front of R is (a-1); with 2(a-1) the division does not hold"),
        _identity("L5.3.alpha-gamma", "alpha^2 - gamma^2 Delta = -4(a-4)^4(5a-13)^3(3a^2-33a+80)(73-90a+46a^2-11a^3+a^4)^2",
                  E(ALPHA53) ** 2 - E(GAMMA53) ** 2 * (Br ** 2 - Ar * Cr * 4), E(ALPHA_GAMMA_53),
                  {"alpha": E(ALPHA53), "gamma": E(GAMMA53)}),
        *_surd_claims(),
    ]
    return tuple(claims)
