from app.verify.canaries import canary_claims
from app.verify.constraints import BoundConstraint, Condition, PolyConstraint, bound_condition, poly_condition
from app.verify.identities import identity_claims
from app.verify.lemmas import lemma_claims
from app.verify.prover import ProofResult, decide_univariate, prove
from app.verify.schemas import Claim, ClaimKind, ClaimReport, ClaimStatus
from app.verify.suite import (
    audit_F_derivation, check_identity, claim_matches, find_claim, prove_implication_on_box, prove_sign_on_box,
    refutes, registry, run_claim, run_lemma_suite, select, suite_passed,
)
