from collections import Counter
from fractions import Fraction

import pytest

from app.algebra import MPoly
from app.utils.errors import InputError, SpecificationError
from app.verify import (
    Claim, ClaimKind, ClaimStatus, audit_F_derivation, canary_claims, check_identity, claim_matches, find_claim,
    identity_claims, lemma_claims, refutes, registry, run_claim, run_lemma_suite, select, suite_passed,
)
from app.verify.lemmas import thresholds

IDENTITY_IDS = [c.id for c in identity_claims()]
CANARY_IDS = [c.id for c in canary_claims()]


@pytest.mark.parametrize("claim_id", IDENTITY_IDS)
def test_identities_hold(claim_id):
    report = check_identity(find_claim(claim_id))
    assert report.status == ClaimStatus.PROVED
    assert report.witness is None


@pytest.mark.parametrize("claim_id", CANARY_IDS)
def test_canaries_are_refuted_with_a_checked_witness(claim_id):
    claim = find_claim(claim_id)
    report = run_claim(claim)
    assert report.status == ClaimStatus.REFUTED
    assert report.passed
    assert report.witness


def test_refutes_rechecks_points_exactly():
    claim = find_claim("X.x-minus-1")
    assert refutes(claim, {"x": Fraction(1, 2)})
    assert refutes(claim, {"x": Fraction(1)})
    assert not refutes(claim, {"x": Fraction(3, 2)})
    assert not refutes(claim, {"x": Fraction(5)})


def test_ids_are_unique():
    ids = [c.id for c in registry(canaries=True)]
    assert len(ids) == len(set(ids))


def test_named_polynomials_have_one_owner():
    owners = Counter(name for c in registry() for name in c.polys)
    assert [name for name, k in owners.items() if k > 1] == []


def test_canaries_are_kept_out_of_the_default_registry():
    assert not any(c.is_canary for c in registry())
    assert all(c.is_canary for c in canary_claims())


def test_glob_stays_inside_a_dotted_part():
    assert claim_matches("L5.1.*", "L5.1.3")
    assert not claim_matches("L5.1.*", "L5.1.1.disc")
    assert claim_matches("L5.1.**", "L5.1.1.disc")
    assert claim_matches("**", "P3.2.1.phi")
    assert claim_matches("L5.?.1", "L5.2.1")


def test_lemma_5_1_has_eleven_items():
    claims = select("L5.1.*")
    assert [c.id for c in claims] == sorted(f"L5.1.{k}" for k in range(1, 12))
    assert all(c.kind == ClaimKind.IMPLICATION_ON_BOX for c in claims)


def test_lemma_5_2_has_eleven_items():
    assert len(select("L5.2.*")) == 11


def test_unknown_claims():
    with pytest.raises(InputError):
        find_claim("L9.9.9")
    with pytest.raises(InputError):
        run_lemma_suite("no.such.*")


def test_zero_denominator_is_a_specification_error():
    zero = MPoly.const(0, ("a", "b", "c"))
    claim = Claim(id="bad", kind=ClaimKind.IDENTITY, statement="0 = 0", sides=[(zero, zero)], denominator=zero)
    with pytest.raises(SpecificationError):
        check_identity(claim)


def test_thresholds_have_the_expected_values():
    values = {name: float(v) for name, (v, _) in thresholds().items()}
    assert values["A1"] == pytest.approx((134 ** 0.5 - 4) / 2)
    assert values["R3"] == pytest.approx(2 + 3 ** 0.5)
    assert values["R8"] == pytest.approx(1 + 2 * 2 ** 0.5)
    assert values["AS"] == pytest.approx((33 - 129 ** 0.5) / 6)
    assert values["R13"] == pytest.approx((15 - 13 ** 0.5) / 3)


@pytest.mark.parametrize("claim_id", ["L5.1.1", "L5.1.6", "L5.2.7", "P3.2.2.eta", "C4.F1ss"])
def test_selected_lemmas_prove(claim_id):
    report = run_claim(find_claim(claim_id))
    assert report.status == ClaimStatus.PROVED, report.to_dict()


def test_reports_are_sorted_and_timing_is_optional():
    reports = run_lemma_suite("L5.1.1*")
    assert [r.id for r in reports] == sorted(r.id for r in reports)
    assert all("elapsed" not in r.to_dict(timing=False) for r in reports)


def test_describe_lists_polynomial_names():
    d = find_claim("L5.1.1").describe()
    assert d["polys"] == ["h1"]
    assert d["box"]["a"] == {"lo": "1", "hi": "4"}


def test_audit_of_F():
    report = audit_F_derivation(probe_samples=10)
    assert report.id == "audit.F"
    assert report.details["terms"] == 40
    assert report.details["corner_check"] in (True, False)
    assert report.details["trace_probe"]["realized"] == "tau_A - 1"
    if report.status == ClaimStatus.PROVED:
        assert report.details["diff"] == []
    else:
        assert report.details["arbiter"] == "geometry"


@pytest.mark.slow
def test_the_whole_suite_passes():
    reports = run_lemma_suite(canaries=True, jobs=2)
    failed = [r.to_dict(timing=False) for r in reports if not r.passed]
    assert failed == []
    assert suite_passed(reports)
    assert len(reports) == len(registry(canaries=True))
