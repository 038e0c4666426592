from app.geometry.matrices import (
    W_A, W_B, angular_invariant, generators, gram_matrix, hermitian_signature, invariant_errors,
    reflection_matrix, rotation_trace_check, word_trace,
)
from app.geometry.oracle import (
    goldman_classify, lemma_trace_values, oracle_type, trace_constant_probe, transition_points,
)
from app.geometry.schemas import GramForm, Generators, IsometryClass, TraceProbe, TraceValues, Transitions
