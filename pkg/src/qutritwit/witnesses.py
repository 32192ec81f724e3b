"""Two-qutrit entanglement witnesses built from the map families.

Every witness here is the Choi operator of a unital positive map against the
maximally entangled projector P+ = |psi+><psi+|, |psi+> = 3^{-1/2} sum |ii>.
The map acts on the first (row-block) tensor factor, so the 9x9 matrices come
out with the diagonal pattern grouped by the first index:

    W[a,b,c]  = N/3 * [ diag blocks (a,b,c)/(c,a,b)/(b,c,a), -1 on |ii><jj| ]
    W~[a,b,c] = 1/6 * [ diag blocks (a,b,c)/(b,c,a)/(c,a,b), -1 on |ii><jj| ]

The improper-family witnesses W~ are decomposable: W~ = (P + Q^G)/6 with
explicit PSD blocks P, Q, Q^G the partial transpose of Q on the second
factor.  Conjugating W by the local permutation U (x) I that swaps the second
and third levels of the first qutrit gives W_U, which shares the diagonal of
W~ but keeps the detection power of W.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Callable, Optional, Sequence

import numpy as np

from . import linalg
from .linalg import Array, kron, partial_transpose
from .maps import (
    LinearMap3,
    MapParams,
    Number,
    SLICE_TOL,
    circulant_rows,
    improper_coeffs,
    improper_rows,
    n_abc,
    so2_coeffs,
)

WITNESS_KINDS = ("standard", "tilde", "u_conjugated", "mixed")

# Flat composite indices of the product kets |ii>.
_DOUBLE = (0, 4, 8)


@dataclass(frozen=True)
class WitnessMatrix:
    """A 9x9 Hermitian witness with its parameters and construction tag."""

    matrix: Array
    params: Optional[MapParams]
    kind: str

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def min_eigenvalue(self) -> float:
        return linalg.min_eigenvalue(self.matrix)


@dataclass(frozen=True)
class DecompositionCertificate:
    """PSD pair (P, Q) with P + Q^G = scale * W~ on the second-factor
    partial transpose; a constructive proof of decomposability."""

    P: Array
    Q: Array
    scale: float = 6.0

    def reconstruction(self) -> Array:
        return (self.P + partial_transpose(self.Q, "second")) / self.scale

    def residual(self, witness: "WitnessMatrix | Array") -> float:
        W = linalg.as_matrix(witness)
        return float(np.linalg.norm(self.P + partial_transpose(self.Q, "second") - self.scale * W))


def _witness_from_rows(rows, prefactor: Number, params: MapParams, kind: str) -> WitnessMatrix:
    """Assemble prefactor * [row-grouped diagonal - 1 on the |ii><jj| grid].

    Entries are computed in the parameters' native arithmetic (exact for
    rational inputs) before conversion to floats.
    """
    M = np.zeros((9, 9), dtype=complex)
    for i in range(3):
        for l in range(3):
            M[3 * i + l, 3 * i + l] = float(prefactor * rows[i][l])
    off = -float(prefactor)
    for i in _DOUBLE:
        for j in _DOUBLE:
            if i != j:
                M[i, j] = off
    return WitnessMatrix(M, params, kind)


def witness_matrix(p: MapParams) -> WitnessMatrix:
    """Witness of the circulant-family map with parameters (a, b, c)."""
    return _witness_from_rows(circulant_rows(p), n_abc(p) / 3, p, "standard")


def witness_tilde_matrix(p: MapParams) -> WitnessMatrix:
    """Witness of the improper-family map; defined on the plane a+b+c = 2."""
    if not p.on_slice():
        raise ValueError(f"parameters {p.astuple()} are off the plane a+b+c = 2")
    return _witness_from_rows(improper_rows(p), n_abc(p) / 3, p, "tilde")


def permutation_unitary() -> Array:
    """Permutation of the qutrit levels (1,2,3) -> (1,3,2); U = U^-1 = U^T."""
    return np.array([[1.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]])


def witness_u(p: MapParams) -> WitnessMatrix:
    """Local-unitary conjugation (U (x) I) W[a,b,c] (U (x) I)^dagger."""
    if not p.on_slice():
        raise ValueError(f"parameters {p.astuple()} are off the plane a+b+c = 2")
    W = witness_matrix(p).matrix
    U9 = kron(permutation_unitary(), np.eye(3))
    return WitnessMatrix(U9 @ W @ U9.conj().T, p, "u_conjugated")


def max_entangled_ket() -> Array:
    """|psi+> = 3^{-1/2} (|11> + |22> + |33>) as a flat 9-vector."""
    v = np.zeros(9, dtype=complex)
    v[list(_DOUBLE)] = 1.0 / sqrt(3)
    return v


def choi_witness(
    phi: LinearMap3 | Callable[[Array], Array],
    params: Optional[MapParams] = None,
    kind: Optional[str] = None,
) -> WitnessMatrix:
    """Choi operator (1/3) sum_ij Phi(|i><j|) (x) |i><j| of a map.

    The map is applied to the first tensor factor of the maximally entangled
    projector, matching the row-major composite convention.
    """
    if kind is None:
        tag = getattr(phi, "kind", None)
        kind = {"circulant": "standard", "improper": "tilde"}.get(tag, "standard")
    W = np.zeros((9, 9), dtype=complex)
    for i in range(3):
        for j in range(3):
            E = np.zeros((3, 3), dtype=complex)
            E[i, j] = 1.0
            W += kron(phi(E), E)
    return WitnessMatrix(W / 3.0, params, kind)


def _tilde_P(a: float, b: float, c: float) -> Array:
    P = np.zeros((9, 9), dtype=complex)
    P[0, 0], P[4, 4], P[8, 8] = a, c, b
    P[0, 4] = P[4, 0] = b - 1
    P[0, 8] = P[8, 0] = c - 1
    P[4, 8] = P[8, 4] = a - 1
    return P


def _tilde_Q(a: float, b: float, c: float) -> Array:
    Q = np.zeros((9, 9), dtype=complex)
    for (s, t), w in {(1, 3): b, (2, 6): c, (5, 7): a}.items():
        Q[s, s] = Q[t, t] = w
        Q[s, t] = Q[t, s] = -w
    return Q


def _ellipse_x_range(y: float) -> tuple[float, float]:
    """Chord of the ellipse bc = (1-a)^2 at fixed y = b-c, in x = b+c."""
    disc = 4.0 - 3.0 * y * y
    if disc < 0:
        raise ValueError(f"|b - c| = {abs(y)} exceeds the ellipse range")
    half = sqrt(disc) / 3.0
    return 4.0 / 3.0 - half, 4.0 / 3.0 + half


def decompose_tilde(p: MapParams, tol: float = SLICE_TOL) -> DecompositionCertificate:
    """Decomposability certificate (P, Q) with P + Q^G = 6 W~[a,b,c].

    On the ellipse bc = (1-a)^2 the displayed pair is used directly.  An
    interior point of the region bc >= (1-a)^2 is written as the convex
    combination of the two ellipse points sharing its value of b - c; since
    P and Q are affine in (a, b, c), the combined pair is again a valid
    certificate.
    """
    if not p.on_slice():
        raise ValueError(f"parameters {p.astuple()} are off the plane a+b+c = 2")
    a, b, c = p.asfloats()
    gap = b * c - (1 - a) ** 2
    if gap < -tol:
        raise ValueError(f"parameters {p.astuple()} are outside the region bc >= (1-a)^2")
    if abs(gap) <= tol:
        return DecompositionCertificate(_tilde_P(a, b, c), _tilde_Q(a, b, c))
    y = b - c
    x_lo, x_hi = _ellipse_x_range(y)
    lam = (x_hi - (b + c)) / (x_hi - x_lo)
    ends = [(2 - x, (x + y) / 2, (x - y) / 2) for x in (x_lo, x_hi)]
    P = lam * _tilde_P(*ends[0]) + (1 - lam) * _tilde_P(*ends[1])
    Q = lam * _tilde_Q(*ends[0]) + (1 - lam) * _tilde_Q(*ends[1])
    return DecompositionCertificate(P, Q)


def mix_witnesses(
    standard_weights: Sequence[tuple[float, float]],
    tilde_weights: Sequence[tuple[float, float]] = (),
    tol: float = 1e-10,
) -> WitnessMatrix:
    """Convex combination of rotation-angle witnesses from both families.

    Each entry is an (angle, weight) atom; weights must be non-negative and
    sum to one.  The mixture is again a witness, but its (in)decomposability
    is not controlled, so the result carries the 'mixed' tag and no
    parameters.
    """
    weights = [w for _, w in standard_weights] + [w for _, w in tilde_weights]
    if any(w < 0 for w in weights):
        raise ValueError("mixture weights must be non-negative")
    if abs(sum(weights) - 1.0) > tol:
        raise ValueError("mixture weights must sum to one")
    M = np.zeros((9, 9), dtype=complex)
    for alpha, w in standard_weights:
        M += w * witness_matrix(so2_coeffs(alpha)).matrix
    for alpha, w in tilde_weights:
        M += w * witness_tilde_matrix(improper_coeffs(alpha)).matrix
    return WitnessMatrix(M, None, "mixed")


# ---------------------------------------------------------------------------
# Serialization shared with the command-line interface.
# ---------------------------------------------------------------------------


def matrix_entries(M: Array) -> list[list[list[float]]]:
    """Row-major nested entries [[re, im], ...] for JSON output."""
    A = linalg.as_matrix(M)
    return [[[float(z.real), float(z.imag)] for z in row] for row in A]


def _format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def exact_witness_entries(p: MapParams, kind: str = "standard") -> list[list[str]]:
    """The witness entries as exact rational strings "p/q".

    Only available when the parameters are rational numbers; the entries are
    rational multiples of the parameters in every construction used here.
    """
    if not p.is_exact:
        raise ValueError("exact entries require rational parameters")
    a, b, c = (Fraction(x) for x in p.astuple())
    pref = Fraction(1) / (3 * (a + b + c))
    if kind == "standard":
        rows = ((a, b, c), (c, a, b), (b, c, a))
        doubles = _DOUBLE
    elif kind == "tilde":
        rows = ((a, b, c), (b, c, a), (c, a, b))
        doubles = _DOUBLE
    elif kind == "u_conjugated":
        rows = ((a, b, c), (b, c, a), (c, a, b))
        doubles = (0, 5, 7)  # images of |ii> under the level swap
    else:
        raise ValueError(f"unsupported kind {kind!r}")
    if kind != "standard" and not p.on_slice():
        raise ValueError("tilde and u_conjugated kinds require a+b+c = 2")
    grid = [[Fraction(0)] * 9 for _ in range(9)]
    for i in range(3):
        for l in range(3):
            grid[3 * i + l][3 * i + l] = pref * rows[i][l]
    for i in doubles:
        for j in doubles:
            if i != j:
                grid[i][j] = -pref
    return [[_format_fraction(x) for x in row] for row in grid]
