import math

import numpy as np
import pytest

from app.geometry import (
    W_A, W_B, IsometryClass, angular_invariant, generators, goldman_classify, gram_matrix, hermitian_signature,
    invariant_errors, lemma_trace_values, oracle_type, reflection_matrix, rotation_trace_check,
    trace_constant_probe, transition_points, word_trace,
)
from app.geometry.oracle import cos_pi_over_float, t_upper_float
from app.typeclass import Triple, VerdictType, angle_params, classify
from app.utils.errors import InputError


def _random_form(rng):
    n = sorted(rng.randint(3, 60) for _ in range(3))
    r = [cos_pi_over_float(k) for k in n]
    tu = t_upper_float(r)
    t = -1 + (tu + 1) * rng.random()
    return gram_matrix(*r, math.acos(t))


@pytest.mark.parametrize("tau, expected", [
    (3, IsometryClass.PARABOLIC_REAL_TRACE),
    (0, IsometryClass.ELLIPTIC_REAL_TRACE),
    (-1, IsometryClass.ELLIPTIC_REAL_TRACE),
    (5, IsometryClass.LOXODROMIC),
    (-2, IsometryClass.LOXODROMIC),
    (0.5j, IsometryClass.REGULAR_ELLIPTIC),
    (10 + 10j, IsometryClass.LOXODROMIC),
])
def test_goldman_classes(tau, expected):
    assert goldman_classify(tau) == expected


def test_goldman_boundary():
    # f vanishes on the deltoid; 3 e^{2 pi i/3} is a cusp
    tau = 3 * complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
    assert goldman_classify(tau) in (IsometryClass.SPECIAL_BOUNDARY, IsometryClass.PARABOLIC_REAL_TRACE)


def test_gram_matrix_validates_parameters():
    with pytest.raises(InputError):
        gram_matrix(1.5, 0.5, 0.5, 0.1)
    with pytest.raises(InputError):
        gram_matrix(0.5, 0.5, 0.5, 4.0)
    with pytest.raises(InputError):
        reflection_matrix(4, gram_matrix(0.5, 0.5, 0.5, 0.1).G)


def test_generators_satisfy_their_invariants(rng):
    for _ in range(200):
        gens = generators(_random_form(rng))
        errors = invariant_errors(gens)
        assert max(errors.values()) < 1e-10
        for row in rotation_trace_check(gens):
            assert row["error"] < 1e-10


def test_angular_invariant_round_trip(rng):
    form = _random_form(rng)
    assert angular_invariant(form.G) == pytest.approx(form.theta, abs=1e-12)


def test_form_is_indefinite_for_hyperbolic_triangles():
    r = [cos_pi_over_float(k) for k in (5, 7, 9)]
    sig = hermitian_signature(gram_matrix(*r, math.acos(0.9)).G.T)
    assert (sig.positives, sig.negatives) == (2, 1)


def test_matrix_trace_of_W_B_matches_the_closed_form():
    triple = Triple.of(5, 7, 9)
    for t in (-0.5, 0.0, 0.3):
        p = angle_params(triple, t=t)
        expected = lemma_trace_values(p).tau_B
        gens = generators(gram_matrix(float(p.r1.mid), float(p.r2.mid), float(p.r3.mid), math.acos(t)))
        assert abs(word_trace(W_B, gens) - expected) < 1e-9


def test_matrix_trace_of_W_A_is_shifted_by_one():
    probe = trace_constant_probe(samples=20, seed=3)
    assert probe.realized == "tau_A - 1"
    assert probe.max_error_tau_A_minus_1 < 1e-9
    assert probe.max_error_tau_A > 0.5


def test_lemma_trace_values_need_t():
    with pytest.raises(InputError):
        lemma_trace_values(angle_params(Triple.of(5, 7, 9)))


@pytest.mark.parametrize("entries, expected", [
    ((3, 3, 10), VerdictType.A),
    ((8, 14, 100), VerdictType.A),
    ((9, 14, 15), VerdictType.A),
    ((14, 14, 14), VerdictType.B),
    ((20, 30, 50), VerdictType.B),
])
def test_oracle_agrees_with_the_polynomial(entries, expected):
    triple = Triple.of(*entries)
    assert oracle_type(triple).type == classify(triple).type == expected


def test_type_B_means_W_B_turns_elliptic_first():
    sweep = transition_points(Triple.of(14, 14, 14))
    assert sweep.t_start == -1
    assert sweep.t_B < sweep.t_A < sweep.t_u
    assert sweep.first() == sweep.t_B


def test_signature_is_2_1_exactly_below_t_upper():
    for entries in ((3, 3, 7), (4, 4, 5), (5, 7, 9), (9, 14, 15), (12, 30, 60)):
        r = [cos_pi_over_float(n) for n in entries]
        tu = t_upper_float(r)
        for t in np.linspace(-1, 0.999, 41):
            if abs(t - tu) < 1e-6:
                continue
            sig = hermitian_signature(gram_matrix(*r, math.acos(t)).G.T)
            assert ((sig.positives, sig.negatives) == (2, 1)) == (t < tu), (entries, t)


@pytest.mark.slow
def test_oracle_agrees_on_a_random_grid(rng):
    checked = 0
    while checked < 200:
        triple = Triple.of(*sorted(rng.randint(3, 40) for _ in range(3)))
        if t_upper_float([cos_pi_over_float(k) for k in triple.entries()]) <= -1:
            continue
        verdict = classify(triple)
        if abs(float(verdict.F_enclosure.mid)) <= 1e-3:
            continue
        assert oracle_type(triple).type == verdict.type, triple.label()
        checked += 1


def test_word_constants():
    assert W_A == (1, 3, 2, 3)
    assert W_B == (1, 2, 3)
    assert np.allclose(reflection_matrix(1, gram_matrix(0.5, 0.5, 0.5, 0.0)) @
                       reflection_matrix(1, gram_matrix(0.5, 0.5, 0.5, 0.0)), np.eye(3))
