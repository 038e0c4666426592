from fractions import Fraction

import pytest

from app.algebra import (
    AlgebraicNumber, MPoly, RatInterval, UPoly, discriminant, parse_mpoly, rat_text, resultant, to_rat,
)
from app.utils.errors import InputError

AB = ("a", "b")


def test_to_rat_is_exact():
    assert to_rat("3/4") == Fraction(3, 4)
    assert to_rat(0.5) == Fraction(1, 2)
    assert rat_text(Fraction(6, 3)) == "2"
    assert rat_text(Fraction(-1, 3)) == "-1/3"


def test_to_rat_rejects_garbage():
    with pytest.raises(InputError):
        to_rat("three")


def test_interval_arithmetic_is_conservative():
    x = RatInterval(-1, 2)
    y = RatInterval(3, 4)
    assert x * y == RatInterval(-4, 8)
    assert x + y == RatInterval(2, 6)
    assert (x ** 2).lo == 0


def test_empty_interval_is_an_input_error():
    with pytest.raises(InputError):
        RatInterval(2, 1)


def test_upoly_division():
    q, r = UPoly([-1, 0, 1]).divrem(UPoly([-1, 1]))
    assert q.coeffs == (1, 1)
    assert r.is_zero


def test_mpoly_parse_and_evaluate():
    p = parse_mpoly("a^2 - 2*a*b + b^2", AB)
    assert p == parse_mpoly("(a-b)^2", AB)
    assert p.evaluate({"a": 3, "b": 1}) == 4
    assert p.partial("a") == parse_mpoly("2*a - 2*b", AB)


def test_mpoly_unknown_variable():
    with pytest.raises(InputError):
        parse_mpoly("a + z", AB)


def test_enclosure_contains_sampled_values(rng):
    p = parse_mpoly("a^3 - 3*a*b + b^2 - 1", AB)
    box = {"a": RatInterval(Fraction(-1), Fraction(2)), "b": RatInterval(Fraction(0), Fraction(3))}
    e = p.evaluate(box)
    for _ in range(200):
        pt = {"a": Fraction(rng.randint(-100, 200), 100), "b": Fraction(rng.randint(0, 300), 100)}
        assert e.contains(p.evaluate(pt))


def test_compose_substitutes_polynomials():
    p = parse_mpoly("a*b", AB)
    q = p.compose({"b": MPoly.var("a", AB)})
    assert q == parse_mpoly("a^2", AB)


def test_discriminant_of_quadratic():
    x = ("x",)
    d = discriminant(parse_mpoly("x^2 - 2", x), "x")
    assert d.constant_term() == 8


def test_resultant_vanishes_on_common_root():
    x = ("x",)
    assert resultant(parse_mpoly("x^2 - 1", x), parse_mpoly("x - 1", x), "x").is_zero


def test_algebraic_comparisons():
    sqrt2 = AlgebraicNumber.from_root([-2, 0, 1], 1, 2)
    assert sqrt2.compare_rational(Fraction(7, 5)) > 0
    assert sqrt2.compare_rational(Fraction(3, 2)) < 0
    assert float(sqrt2) == pytest.approx(2 ** 0.5)
    assert AlgebraicNumber.rational(Fraction(7, 5)) < sqrt2
    assert sqrt2.sign_of(UPoly([-2, 0, 1])) == 0


def test_from_root_past_the_last_root():
    with pytest.raises(InputError):
        AlgebraicNumber.from_root([-2, 0, 1], 0, 2, index=1)


def _random_upoly(rng, degree=4):
    return UPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(0, degree) + 1)])


def test_upoly_ring_laws_and_division(rng):
    for _ in range(100):
        p, q, s = _random_upoly(rng), _random_upoly(rng), _random_upoly(rng)
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * s == p * (q * s)
        assert p * (q + s) == p * q + p * s
        if q.is_zero:
            continue
        quot, rem = p.divrem(q)
        assert quot * q + rem == p
        assert rem.is_zero or rem.degree < q.degree


def test_compose_then_evaluate_matches_nested_evaluation(rng):
    p = parse_mpoly("a^3 - 2*a*b + b^2 - 5", AB)
    inner = {"a": parse_mpoly("a + b^2", AB), "b": parse_mpoly("3*a - b", AB)}
    composed = p.compose(inner)
    for _ in range(50):
        pt = {"a": Fraction(rng.randint(-20, 20), rng.randint(1, 5)), "b": Fraction(rng.randint(-20, 20), 3)}
        nested = {name: q.evaluate(pt) for name, q in inner.items()}
        assert composed.evaluate(pt) == p.evaluate(nested)

    u = _random_upoly(rng)
    v = _random_upoly(rng, degree=2)
    x = Fraction(rng.randint(-10, 10), 7)
    assert u.compose(v)(x) == u(v(x))


def test_discriminant_vanishes_exactly_on_repeated_roots(rng):
    for _ in range(30):
        roots = [rng.randint(-4, 4) for _ in range(rng.randint(2, 4))]
        p = UPoly([1])
        for r in roots:
            p = p * UPoly([-r, 1])
        disc = discriminant(MPoly.from_upoly(p, "x"), "x")
        assert disc.is_zero == (len(set(roots)) < len(roots))


def test_constant_polynomial_over_an_interval_point():
    lead = parse_mpoly("4", AB)
    value = lead.evaluate({"a": RatInterval(1, 2), "b": RatInterval(Fraction(3, 2), 4)})
    assert value == RatInterval.point(4)
    assert parse_mpoly("a + 1", AB).evaluate({"a": RatInterval(0, 1), "b": RatInterval(5, 6)}) == RatInterval(1, 2)
