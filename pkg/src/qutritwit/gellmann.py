"""Generalized Gell-Mann basis: an orthonormal Hermitian basis of M_n(C).

The basis is ordered as (f_0, d_1, ..., d_{n-1}, u_12, u_13, ..., u_{(n-1)n},
v_12, ..., v_{(n-1)n}) where, for 1-based kets |1>, ..., |n>,

    f_0  = I_n / sqrt(n),
    d_l  = ( |1><1| + ... + |l><l| - l |l+1><l+1| ) / sqrt(l (l+1)),
    u_kl = ( |k><l| + |l><k| ) / sqrt(2),
    v_kl = -i ( |k><l| - |l><k| ) / sqrt(2),          for k < l.

All elements are Hermitian, f_1, ..., f_{n^2-1} are traceless, and the set is
orthonormal under the Hilbert-Schmidt pairing Tr(f_a f_b) = delta_ab.  The
ordering is contractual: rotation blocks acting on span{d_1, d_2} rely on the
diagonal elements coming directly after f_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import sqrt

import numpy as np

from .linalg import Array


@dataclass(frozen=True)
class OrthonormalBasis:
    """Ordered orthonormal Hermitian basis of the n x n complex matrices."""

    n: int
    elements: tuple[Array, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def coefficients(self, X) -> Array:
        """Expansion coefficients c_a = Tr(f_a X); X = sum_a c_a f_a."""
        X = np.asarray(X, dtype=complex)
        return np.array([np.trace(f @ X) for f in self.elements])

    def from_coefficients(self, coeffs) -> Array:
        coeffs = np.asarray(coeffs)
        X = np.zeros((self.n, self.n), dtype=complex)
        for c, f in zip(coeffs, self.elements):
            X = X + c * f
        return X


def build_gellmann(n: int) -> OrthonormalBasis:
    """Construct the generalized Gell-Mann basis of M_n(C) for n >= 2."""
    if n < 2:
        raise ValueError("basis requires n >= 2")
    elements: list[Array] = [np.eye(n, dtype=complex) / sqrt(n)]
    for l in range(1, n):
        d = np.zeros((n, n), dtype=complex)
        for k in range(l):
            d[k, k] = 1.0
        d[l, l] = -l
        elements.append(d / sqrt(l * (l + 1)))
    pairs = [(k, l) for k in range(n) for l in range(k + 1, n)]
    for k, l in pairs:
        u = np.zeros((n, n), dtype=complex)
        u[k, l] = 1.0
        u[l, k] = 1.0
        elements.append(u / sqrt(2))
    for k, l in pairs:
        v = np.zeros((n, n), dtype=complex)
        v[k, l] = -1.0j
        v[l, k] = 1.0j
        elements.append(v / sqrt(2))
    return OrthonormalBasis(n, tuple(elements))


@lru_cache(maxsize=None)
def default_basis() -> OrthonormalBasis:
    """The qutrit (n = 3) basis used throughout the package."""
    return build_gellmann(3)
