"""Independent numerical verifiers for the constructions in this package.

The central tool is a see-saw minimization of <psi (x) phi| W |psi (x) phi>
over product vectors: with one factor frozen, the objective is a 3x3
Hermitian quadratic form in the other, minimized exactly by its lowest
eigenvector.  Alternating the two factors yields a non-increasing value
sequence; restarting from Haar-random products gives a block-positivity
estimate that is an upper bound on the true product minimum.

Also here: the Choi-matrix test for complete positivity, collection of
zero-expectation product vectors with their span rank (the standard
optimality evidence for a witness), and the constructive indecomposability
certificate from the PPT probe family.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf
from typing import Callable, Optional, Sequence

import numpy as np

from . import linalg
from .linalg import Array
from .maps import LinearMap3, MapParams
from .states import detection_value, detects_rho_family
from .witnesses import choi_witness

BLOCK_POSITIVITY_TOL = 1e-7
ZERO_VALUE_TOL = 1e-9
DEDUP_TOL = 1e-6
SPAN_RANK_TOL = 1e-8


@dataclass(frozen=True)
class SeeSawConfig:
    restarts: int = 200
    max_iters: int = 500
    tol: float = 1e-11
    rng_seed: int = 0

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1:
            raise ValueError("restarts and max_iters must be positive")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


@dataclass(frozen=True)
class ProductVectorPair:
    """Unit vectors psi, phi in C^3 with value = <psi (x) phi|W|psi (x) phi>."""

    psi: Array
    phi: Array
    value: float

    def product(self) -> Array:
        return np.kron(self.psi, self.phi)


def _random_units(rng: np.random.Generator, count: int) -> Array:
    v = rng.standard_normal((count, 3)) + 1j * rng.standard_normal((count, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _seesaw_batch(
    W4: Array, psi: Array, phi: Array, max_iters: int, tol: float
) -> tuple[Array, Array, Array, Array]:
    """Alternate exact one-factor minimizations for a batch of starts.

    Returns final (psi, phi, values, history) where history[t] holds the
    batch values after full iteration t; each column is non-increasing.
    """
    values = np.full(psi.shape[0], inf)
    history = []
    for _ in range(max_iters):
        A = np.einsum("rj,ijkl,rl->rik", phi.conj(), W4, phi)
        A = (A + np.conj(np.transpose(A, (0, 2, 1)))) / 2
        _, vecs = np.linalg.eigh(A)
        psi = vecs[:, :, 0]
        B = np.einsum("ri,ijkl,rk->rjl", psi.conj(), W4, psi)
        B = (B + np.conj(np.transpose(B, (0, 2, 1)))) / 2
        w, vecs = np.linalg.eigh(B)
        phi = vecs[:, :, 0]
        new_values = w[:, 0]
        history.append(new_values)
        done = np.all(values - new_values < tol)
        values = new_values
        if done:
            break
    return psi, phi, values, np.array(history)


def _canonical_product(psi: Array, phi: Array) -> Array:
    """Phase-fixed product vector for deterministic ordering and dedup."""
    u = np.kron(psi, phi)
    j = int(np.argmax(np.abs(u)))
    ph = u[j]
    if abs(ph) > 0:
        u = u * (np.conj(ph) / abs(ph))
    return u


def _sort_key(value: float, psi: Array, phi: Array):
    u = _canonical_product(psi, phi)
    return (value, tuple(np.round(u.real, 12)) + tuple(np.round(u.imag, 12)))


def _run_seesaw(W, cfg: SeeSawConfig):
    M = linalg.require_hermitian(W, 1e-9)
    W4 = M.reshape(3, 3, 3, 3)
    rng = np.random.default_rng(cfg.rng_seed)
    psi0 = _random_units(rng, cfg.restarts)
    phi0 = _random_units(rng, cfg.restarts)
    return _seesaw_batch(W4, psi0, phi0, cfg.max_iters, cfg.tol)


def min_product_expectation(W, cfg: SeeSawConfig | None = None) -> ProductVectorPair:
    """Best product-vector expectation found by the restarted see-saw.

    The returned value is an upper bound on min <psi (x) phi|W|psi (x) phi>;
    restarts are merged by (value, lexicographic product vector) so the
    result does not depend on evaluation order.
    """
    cfg = cfg or SeeSawConfig()
    psi, phi, values, _ = _run_seesaw(W, cfg)
    best = min(range(len(values)), key=lambda r: _sort_key(values[r], psi[r], phi[r]))
    return ProductVectorPair(psi[best], phi[best], float(values[best]))


def is_block_positive(W, cfg: SeeSawConfig | None = None) -> bool:
    """Heuristic block-positivity: see-saw minimum >= -1e-7."""
    return min_product_expectation(W, cfg).value >= -BLOCK_POSITIVITY_TOL


def is_cp_choi(phi: LinearMap3 | Callable[[Array], Array]) -> bool:
    """Complete positivity via the Choi criterion: the Choi matrix is PSD."""
    return linalg.is_psd(choi_witness(phi).matrix)


def zero_product_vectors(
    W, cfg: SeeSawConfig | None = None, dedup_tol: float = DEDUP_TOL
) -> list[ProductVectorPair]:
    """Distinct see-saw limits with |value| <= 1e-9 on a block-positive W.

    Candidates are ordered by (value, lexicographic product vector) and
    deduplicated by the projective distance 1 - |<u, v>| on the product
    vectors.  May return an empty list (e.g. strictly positive W).
    """
    cfg = cfg or SeeSawConfig()
    psi, phi, values, _ = _run_seesaw(W, cfg)
    idx = [r for r in range(len(values)) if values[r] <= ZERO_VALUE_TOL]
    idx.sort(key=lambda r: _sort_key(values[r], psi[r], phi[r]))
    kept: list[ProductVectorPair] = []
    kept_products: list[Array] = []
    for r in idx:
        u = _canonical_product(psi[r], phi[r])
        if any(1.0 - abs(np.vdot(v, u)) <= dedup_tol for v in kept_products):
            continue
        kept.append(ProductVectorPair(psi[r], phi[r], float(values[r])))
        kept_products.append(u)
    return kept


def span_rank(pairs: Sequence[ProductVectorPair], tol: float = SPAN_RANK_TOL) -> int:
    """Numerical rank of the span of the product vectors psi (x) phi.

    Computed from the 9x9 Gram accumulation sum_r u_r u_r^dagger, which has
    the same nonzero spectrum as the k x k Gram matrix; eigenvalues above
    tol * largest count toward the rank.
    """
    if not pairs:
        return 0
    G = np.zeros((9, 9), dtype=complex)
    for pair in pairs:
        u = pair.product()
        G += np.outer(u, u.conj())
    w = linalg.eigenvalues(G)
    top = float(w[-1])
    if top <= 0:
        return 0
    return int(np.sum(w > tol * top))


def indecomposability_certificate(p: MapParams) -> Optional[tuple[float, float]]:
    """A PPT probe state with negative expectation against W[a,b,c].

    Returns (eps, value) with value = Tr(rho_eps W[a,b,c]) < 0 when the
    detection interval is non-empty, else None.  The midpoint of a bounded
    interval is used; unbounded intervals fall back to 2 * lower endpoint
    (or eps = 1 when the interval is all of (0, inf)).
    """
    interval = detects_rho_family(p)
    if interval is None:
        return None
    lo, hi = interval
    if hi != inf:
        eps = (lo + hi) / 2.0
    elif lo > 0:
        eps = 2.0 * lo
    else:
        eps = 1.0
    return eps, detection_value(p, eps)
