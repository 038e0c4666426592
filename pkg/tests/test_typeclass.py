import math
from fractions import Fraction

import mpmath
import pytest

from app.algebra import MPoly, RatInterval
from app.enumeration.tables import TABLE1
from app.geometry import transition_points
from app.geometry.oracle import cos_pi_over_float
from app.typeclass import (
    INF, Triple, VerdictType, angle_params, build_F, build_fB, classify, critical_interval, t_upper,
)
from app.typeclass.classify import F_exact
from app.typeclass.polynomials import F_cubic_coefficients, T_A_value, fB_cubic_coefficients, goldman_real
from app.typeclass.trig import cos_pi_over, four_cos_squared, pi_enclosure
from app.utils.errors import InputError


def test_F_has_forty_terms():
    assert len(build_F().terms) == 40


def test_F_is_cubic_in_c_with_lead_four():
    lams = F_cubic_coefficients()
    assert lams[3].constant_term() == 4
    assert lams[3].total_degree() == 0


def test_fB_is_cubic_in_T():
    fb = build_fB()
    assert fb.degree("T") == 3
    assert fb.coefficient("T", 3).constant_term() == -16384


def test_F_at_exact_points():
    assert F_exact(4, 4, 4) == 0
    assert F_exact(1, 1, 1) == 0
    assert F_exact(2, 2, 2) == 20


def test_pi_enclosure_brackets_pi():
    pi = pi_enclosure(64)
    assert pi.lo < Fraction(314159265358979323847, 10 ** 20)
    assert pi.hi > Fraction(314159265358979323846, 10 ** 20)
    assert pi.width < Fraction(1, 2 ** 60)


@pytest.mark.parametrize("n", [5, 7, 12, 100, 4000])
def test_cos_enclosures_are_tight(n):
    r = cos_pi_over(n, 64)
    a = four_cos_squared(n, 64)
    assert r.width <= Fraction(1, 2 ** 64)
    assert float(r.lo) == pytest.approx(math.cos(math.pi / n), abs=1e-15)
    assert float(a.mid) == pytest.approx(4 * math.cos(math.pi / n) ** 2, abs=1e-14)


@pytest.mark.parametrize("n", [7, 13, 997])
def test_cos_enclosure_contains_the_mpmath_value(n):
    with mpmath.workdps(60):
        value = mpmath.cos(mpmath.pi / n)
        r = cos_pi_over(n, 96)
        assert mpmath.mpf(r.lo.numerator) / r.lo.denominator <= value <= mpmath.mpf(r.hi.numerator) / r.hi.denominator


def test_exact_cosines():
    assert cos_pi_over(3, 64).is_point
    assert four_cos_squared(4, 64).lo == 2
    assert four_cos_squared(6, 64).lo == 3
    assert four_cos_squared(INF, 64).lo == 4


@pytest.mark.parametrize("entries", [(5, 4, 6), (2, 3, 4), (3, 3, 3.5)])
def test_triples_are_validated_not_sorted(entries):
    with pytest.raises(InputError):
        Triple.of(*entries)


def test_infinite_entries_are_allowed():
    t = Triple.of(5, INF, INF)
    assert t.label() == "(5, inf, inf)"
    assert t.to_dict()["n3"] == "inf"


@pytest.mark.parametrize("entries, printed, printed_type", TABLE1)
def test_classify_reproduces_the_published_values(entries, printed, printed_type):
    v = classify(Triple.of(*entries))
    assert v.type == VerdictType(printed_type)
    assert float(v.F_enclosure.mid) == pytest.approx(float(printed), rel=1e-4)


def test_classify_3_3_3_sits_on_F_zero_and_is_type_B():
    v = classify(Triple.of(3, 3, 3))
    assert v.F_enclosure == RatInterval.point(0)
    assert v.type == VerdictType.B


def test_classify_all_infinite_is_type_B():
    v = classify(Triple.of(INF, INF, INF))
    assert v.F_enclosure.lo == v.F_enclosure.hi == 0
    assert v.type == VerdictType.B


def test_classify_raises_precision_until_decided():
    v = classify(Triple.of(100, 200, 4000), start_bits=8)
    assert v.type == VerdictType.B
    assert v.precision_used > 8


def test_classify_reports_indeterminate_at_the_cap():
    v = classify(Triple.of(100, 200, 4000), precision_cap=4, start_bits=4)
    assert v.type == VerdictType.INDETERMINATE
    assert v.to_dict()["type"] == "Indeterminate"


def test_angle_params_bind_T():
    p = angle_params(Triple.of(5, 7, 9), t=Fraction(1, 2))
    assert p.T == p.r_product() * RatInterval.point(Fraction(1, 2))
    assert p.a.intersect(p.r1 ** 2 * 4) is not None


def test_t_upper_is_capped_at_one():
    assert t_upper(Triple.of(INF, INF, INF)).hi == 1


@pytest.mark.parametrize("entries", [(3, 3, 10), (14, 14, 14)])
def test_critical_interval_matches_the_matrix_sweep(entries):
    triple = Triple.of(*entries)
    ci = critical_interval(triple)
    sweep = transition_points(triple)
    R = math.prod(cos_pi_over_float(n) for n in entries)
    assert not ci.empty
    assert ci.to_dict()["triple"] == {k: str(v) for k, v in zip(("n1", "n2", "n3"), entries)}
    assert ci.lower.lo <= ci.upper.hi
    assert float(ci.lower.mid) == pytest.approx(R * sweep.t_start, abs=1e-6)
    assert float(ci.upper.mid) == pytest.approx(R * sweep.first(), abs=1e-6)


def _sampled_membership(triple: Triple, points: int):
    """Brute-force {T : f_B(T) >= 0, T <= T_A} on a uniform grid of the deformation range."""
    p = angle_params(triple)
    coeffs = [float(q.evaluate(p.abc()).mid) for q in fB_cubic_coefficients()]
    R = float(p.r_product().mid)
    tu = float(t_upper(triple).mid)
    TA = float(T_A_value(p.a, p.b, p.c).mid)
    guard = 1e-9 * sum(abs(c) for c in coeffs)
    for k in range(points):
        T = R * (-1 + (tu + 1) * k / points)
        f = ((coeffs[3] * T + coeffs[2]) * T + coeffs[1]) * T + coeffs[0]
        if abs(f) < guard or abs(T - TA) < 1e-9:
            continue
        yield T, f > 0 and T < TA


def _check_critical_interval_by_sampling(rng, triples: int, points: int):
    checked = 0
    while checked < triples:
        triple = Triple.of(*sorted(rng.randint(3, 60) for _ in range(3)))
        if t_upper(triple).hi <= -1:
            continue
        ci = critical_interval(triple)
        for T, member in _sampled_membership(triple, points):
            if ci.empty:
                assert not member, (triple.label(), T)
                continue
            lo, hi = float(ci.lower.lo), float(ci.upper.hi)
            if member:
                assert lo - 1e-12 <= T <= hi + 1e-12, (triple.label(), T)
            elif lo + 1e-9 < T < hi - 1e-9:
                pytest.fail(f"{triple.label()}: T={T} inside the interval but f_B < 0 or T > T_A")
        checked += 1


def test_critical_interval_agrees_with_sign_sampling(rng):
    _check_critical_interval_by_sampling(rng, triples=15, points=1000)


@pytest.mark.slow
def test_critical_interval_agrees_with_dense_sign_sampling(rng):
    _check_critical_interval_by_sampling(rng, triples=100, points=10_000)


def test_goldman_restricted_to_real_traces_factors():
    x = MPoly.var("x", ("x", "y"))
    assert goldman_real() == (x + 1) * (x - 3) ** 3
