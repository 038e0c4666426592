# app/geometry/matrices.py
"""
Complex reflections in the polar-vector basis, double precision.

I_k(c_j) = -c_j + 2 G[j, k] c_k, so I_k is -Id with row k replaced. The form the
generators preserve is G^T (equivalently conj(G)); the angular invariant is read
from that form, which puts the phase e^{i theta} on the (c1, c2) pairing.
"""
import cmath
import math
from typing import NamedTuple, Sequence

import numpy as np

from app.geometry.schemas import GramForm, Generators
from app.utils.errors import InputError

INVARIANT_TOL = 1e-12
ZERO_EIGEN_TOL = 1e-10

W_A = (1, 3, 2, 3)
W_B = (1, 2, 3)


class Signature(NamedTuple):
    positives: int
    negatives: int
    zeros: int = 0


def _check_r(r: float, name: str):
    if not 0 <= r <= 1:
        raise InputError(f"{name} must lie in [0, 1], got {r}", code="INVALID_PARAMETER")


def gram_matrix(r1: float, r2: float, r3: float, theta: float) -> GramForm:
    for value, name in ((r1, "r1"), (r2, "r2"), (r3, "r3")):
        _check_r(value, name)
    if not 0 <= theta <= math.pi:
        raise InputError(f"theta must lie in [0, pi], got {theta}", code="INVALID_PARAMETER")
    G = np.array([
        [1, r3 * cmath.exp(-1j * theta), r2],
        [r3 * cmath.exp(1j * theta), 1, r1],
        [r2, r1, 1],
    ], dtype=complex)
    if r1 * r2 * r3 > INVARIANT_TOL:
        recomputed = angular_invariant(G)
        assert abs(recomputed - theta) < INVARIANT_TOL, f"angular invariant {recomputed} != {theta}"
    return GramForm(G=G, r1=r1, r2=r2, r3=r3, theta=theta)


def angular_invariant(G: np.ndarray) -> float:
    """arg of the product of the three pairings of the preserved form G^T, in [0, pi] for our matrices."""
    form = np.asarray(G).T
    return abs(cmath.phase(form[0, 1] * form[1, 2] * form[2, 0]))


def hermitian_signature(G) -> Signature:
    G = np.asarray(G, dtype=complex)
    if G.shape != (3, 3) or not np.allclose(G, G.conj().T, atol=ZERO_EIGEN_TOL):
        raise InputError("matrix is not Hermitian", code="NOT_HERMITIAN")
    eig = np.linalg.eigvalsh(G)
    zeros = int(np.sum(np.abs(eig) < ZERO_EIGEN_TOL))
    return Signature(int(np.sum(eig >= ZERO_EIGEN_TOL)), int(np.sum(eig <= -ZERO_EIGEN_TOL)), zeros)


def reflection_matrix(k: int, form: GramForm | np.ndarray) -> np.ndarray:
    if k not in (1, 2, 3):
        raise InputError(f"generator index must be 1, 2 or 3, got {k}", code="INVALID_PARAMETER")
    G = form.G if isinstance(form, GramForm) else np.asarray(form, dtype=complex)
    i = k - 1
    M = -np.eye(3, dtype=complex)
    M[i, :] += 2 * G[:, i]
    return M


def generators(form: GramForm) -> Generators:
    return Generators(I1=reflection_matrix(1, form), I2=reflection_matrix(2, form),
                      I3=reflection_matrix(3, form), form=form)


def word_matrix(word: Sequence[int], gens: Generators) -> np.ndarray:
    if not word:
        raise InputError("empty word", code="INVALID_PARAMETER")
    M = np.eye(3, dtype=complex)
    for k in word:
        M = M @ gens.by_index(k)
    return M


def word_trace(word: Sequence[int], gens: Generators) -> complex:
    return complex(np.trace(word_matrix(word, gens)))


def invariant_errors(gens: Generators) -> dict:
    """Largest deviation over I1..I3 from involution, form preservation, det 1 and trace -1."""
    X = gens.form.G.T
    eye = np.eye(3)
    out = {"involution": 0.0, "preserves_form": 0.0, "det": 0.0, "trace": 0.0}
    for M in (gens.I1, gens.I2, gens.I3):
        out["involution"] = max(out["involution"], float(np.abs(M @ M - eye).max()))
        out["preserves_form"] = max(out["preserves_form"], float(np.abs(M.conj().T @ X @ M - X).max()))
        out["det"] = max(out["det"], abs(complex(np.linalg.det(M)) - 1))
        out["trace"] = max(out["trace"], abs(complex(np.trace(M)) + 1))
    return out


def rotation_trace_check(gens: Generators) -> list[dict]:
    """tr(I_{k-1} I_{k+1}) against 4 r_k^2 - 1 for k = 1, 2, 3 (indices cyclic)."""
    r = (gens.form.r1, gens.form.r2, gens.form.r3)
    rows = []
    for k in (1, 2, 3):
        prev, nxt = (k - 2) % 3 + 1, k % 3 + 1
        trace = word_trace((prev, nxt), gens)
        expected = 4 * r[k - 1] ** 2 - 1
        rows.append({"k": k, "word": [prev, nxt], "trace": trace, "expected": expected,
                     "error": abs(trace - expected)})
    return rows


# -- batched form, used by the oracle sweep ---------------------------------------------

def gram_batch(r: Sequence[float], thetas: np.ndarray) -> np.ndarray:
    r1, r2, r3 = r
    n = len(thetas)
    G = np.empty((n, 3, 3), dtype=complex)
    G[:, 0, 0] = G[:, 1, 1] = G[:, 2, 2] = 1
    G[:, 0, 1] = r3 * np.exp(-1j * thetas)
    G[:, 1, 0] = r3 * np.exp(1j * thetas)
    G[:, 0, 2] = G[:, 2, 0] = r2
    G[:, 1, 2] = G[:, 2, 1] = r1
    return G


def word_traces_batch(word: Sequence[int], G: np.ndarray) -> np.ndarray:
    n = G.shape[0]
    refl = []
    for i in range(3):
        M = np.broadcast_to(-np.eye(3, dtype=complex), (n, 3, 3)).copy()
        M[:, i, :] += 2 * G[:, :, i]
        refl.append(M)
    W = np.broadcast_to(np.eye(3, dtype=complex), (n, 3, 3)).copy()
    for k in word:
        W = W @ refl[k - 1]
    return np.trace(W, axis1=1, axis2=2)
