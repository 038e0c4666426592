from fractions import Fraction

import pytest

from app.algebra import UPoly, isolate_roots, refine_root, sturm_count
from app.utils.errors import InputError


def test_counts_on_half_open_intervals():
    p = UPoly([-2, 0, 1])
    assert sturm_count(p, 0, 2) == 1
    assert sturm_count(p, -2, 2) == 2
    assert sturm_count(p, 2, 3) == 0


def test_zero_polynomial_has_no_root_count():
    with pytest.raises(InputError):
        sturm_count(UPoly([]), 0, 1)


def test_isolation_separates_every_root():
    p = UPoly([0, -1, 0, 1])  # x^3 - x
    roots = isolate_roots(p, -2, 2)
    assert len(roots) == 3
    for iv, r in zip(roots, (-1, 0, 1)):
        assert iv.contains(Fraction(r))


def test_repeated_roots_count_once():
    p = UPoly([1, -2, 1]) * UPoly([-3, 1])  # (x-1)^2 (x-3)
    assert len(isolate_roots(p, 0, 4)) == 2


def test_refinement_narrows_below_width():
    p = UPoly([-2, 0, 1])
    iv = refine_root(p, isolate_roots(p, 0, 2)[0], Fraction(1, 10 ** 6))
    assert iv.width < Fraction(1, 10 ** 6)
    assert iv.lo ** 2 <= 2 <= iv.hi ** 2


def _random_split_poly(rng):
    """Product of integer linear factors, possibly repeated, times a positive quadratic."""
    roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 5))]
    p = UPoly([rng.randint(1, 5), 0, 1]) if rng.random() < 0.5 else UPoly([rng.choice([-3, -1, 2, 7])])
    for r in roots:
        p = p * UPoly([-r, 1])
    return p, set(roots)


def test_count_agrees_with_isolation_on_random_polynomials(rng):
    for _ in range(100):
        p, roots = _random_split_poly(rng)
        lo = Fraction(rng.randint(-8, 4)) - Fraction(1, 2)
        hi = lo + rng.randint(1, 12)
        inside = {r for r in roots if lo < r <= hi}
        assert sturm_count(p, lo, hi) == len(inside)
        isolated = isolate_roots(p, lo, hi)
        assert len(isolated) == len(inside)
        for iv, r in zip(isolated, sorted(inside)):
            assert iv.contains(Fraction(r))


def test_goldman_polynomial_has_two_real_roots_on_the_trace_range():
    p = UPoly([-27, 0, 18, -8, 1])  # tau^4 - 8 tau^3 + 18 tau^2 - 27 = (tau + 1)(tau - 3)^3
    assert sturm_count(p, -2, 4) == 2
    roots = isolate_roots(p, -2, 4)
    assert [iv.contains(Fraction(r)) for iv, r in zip(roots, (-1, 3))] == [True, True]
    assert p.divrem(UPoly([-3, 1]))[1].is_zero
