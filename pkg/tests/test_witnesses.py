from fractions import Fraction
from math import pi

import numpy as np
import pytest

from conftest import rand_hermitian, random_slice_params, random_tilde_region_params
from qutritwit.linalg import is_psd, kron, partial_transpose
from qutritwit.maps import MapParams, apply_phi, apply_phi_tilde, improper_coeffs, so2_coeffs
from qutritwit.oracles import SeeSawConfig, min_product_expectation
from qutritwit.witnesses import (
    choi_witness,
    decompose_tilde,
    exact_witness_entries,
    matrix_entries,
    max_entangled_ket,
    mix_witnesses,
    permutation_unitary,
    witness_matrix,
    witness_tilde_matrix,
    witness_u,
)

DOUBLES = (0, 4, 8)


def u_display(p):
    """Independent entrywise build of the conjugated witness pattern."""
    a, b, c = p.asfloats()
    M = np.zeros((9, 9), dtype=complex)
    for idx, val in zip(range(9), (a, b, c, b, c, a, c, a, b)):
        M[idx, idx] = val / 6
    for i in (0, 5, 7):
        for j in (0, 5, 7):
            if i != j:
                M[i, j] = -1 / 6
    return M


class TestStandardWitness:
    def test_choi_map_fixture(self):
        W = witness_matrix(MapParams(1, 1, 0)).matrix
        assert W[0, 0] == 1 / 6
        assert W[0, 4] == -1 / 6
        assert W[2, 2] == 0

    def test_trace_one(self):
        rng = np.random.default_rng(0)
        for _ in range(10):
            assert abs(witness_matrix(random_slice_params(rng)).trace() - 1) < 1e-14

    def test_cp_corner_is_psd(self):
        assert is_psd(witness_matrix(MapParams(2, 0, 0)).matrix)

    def test_matches_choi_construction(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            p = random_slice_params(rng)
            direct = witness_matrix(p).matrix
            via_choi = choi_witness(lambda X: apply_phi(p, X)).matrix
            assert np.linalg.norm(direct - via_choi) < 1e-12


class TestChoiOperator:
    def test_identity_map_gives_projector(self):
        W = choi_witness(lambda X: X).matrix
        ket = max_entangled_ket()
        assert np.linalg.norm(W - np.outer(ket, ket.conj())) < 1e-15

    def test_reduction_witness_display(self):
        W = choi_witness(lambda X: apply_phi(MapParams(0, 1, 1), X)).matrix
        expected = np.zeros((9, 9), dtype=complex)
        for idx, val in zip(range(9), (0, 1, 1, 1, 0, 1, 1, 1, 0)):
            expected[idx, idx] = val / 6
        for i in DOUBLES:
            for j in DOUBLES:
                if i != j:
                    expected[i, j] = -1 / 6
        assert np.linalg.norm(W - expected) < 1e-15


class TestTildeWitness:
    def test_symmetric_point_joins_families(self):
        p = MapParams(Fraction(2, 3), Fraction(2, 3), Fraction(2, 3))
        assert np.array_equal(witness_tilde_matrix(p).matrix, witness_matrix(p).matrix)

    def test_trace_one(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            assert abs(witness_tilde_matrix(random_slice_params(rng)).trace() - 1) < 1e-14

    def test_matches_choi_construction(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            p = random_slice_params(rng)
            direct = witness_tilde_matrix(p).matrix
            via_choi = choi_witness(lambda X: apply_phi_tilde(p, X)).matrix
            assert np.linalg.norm(direct - via_choi) < 1e-12

    def test_rejects_off_slice(self):
        with pytest.raises(ValueError):
            witness_tilde_matrix(MapParams(1, 1, 1))

    def test_families_differ_away_from_center(self):
        rng = np.random.default_rng(4)
        count = 0
        while count < 20:
            p = random_slice_params(rng)
            if max(abs(float(p.b) - 2 / 3), abs(float(p.c) - 2 / 3)) < 0.05:
                continue
            gap = np.linalg.norm(witness_matrix(p).matrix - witness_tilde_matrix(p).matrix)
            assert gap > 1e-3
            count += 1


class TestPermutedWitness:
    def test_permutation_unitary(self):
        U = permutation_unitary()
        assert np.array_equal(U @ U, np.eye(3))
        assert np.array_equal(U @ np.array([0.0, 1.0, 0.0]), np.array([0.0, 0.0, 1.0]))
        assert abs(np.linalg.det(U) + 1) < 1e-15

    def test_matches_display(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            p = random_slice_params(rng)
            assert np.linalg.norm(witness_u(p).matrix - u_display(p)) < 1e-14

    def test_same_diagonal_as_tilde(self):
        p = MapParams(1, 1, 0)
        assert np.allclose(np.diag(witness_u(p).matrix), np.diag(witness_tilde_matrix(p).matrix), atol=0)

    def test_detection_invariance(self):
        rng = np.random.default_rng(6)
        p = so2_coeffs(0.9)
        W = witness_matrix(p).matrix
        WU = witness_u(p).matrix
        U9 = kron(permutation_unitary(), np.eye(3))
        for _ in range(5):
            rho = rand_hermitian(rng, 9)
            lhs = np.trace(WU @ U9 @ rho @ U9.conj().T)
            rhs = np.trace(W @ rho)
            assert abs(lhs - rhs) < 1e-12

    def test_spectrum_preserved(self):
        p = so2_coeffs(2.3)
        w1 = np.linalg.eigvalsh(witness_matrix(p).matrix)
        w2 = np.linalg.eigvalsh(witness_u(p).matrix)
        assert np.allclose(w1, w2, atol=1e-13)


class TestDecomposition:
    def test_boundary_displays(self):
        p = improper_coeffs(0.8)
        a, b, c = p.asfloats()
        cert = decompose_tilde(p)
        P_expected = np.zeros((9, 9), dtype=complex)
        P_expected[0, 0], P_expected[4, 4], P_expected[8, 8] = a, c, b
        P_expected[0, 4] = P_expected[4, 0] = b - 1
        P_expected[0, 8] = P_expected[8, 0] = c - 1
        P_expected[4, 8] = P_expected[8, 4] = a - 1
        Q_expected = np.zeros((9, 9), dtype=complex)
        for (s, t), w in {(1, 3): b, (2, 6): c, (5, 7): a}.items():
            Q_expected[s, s] = Q_expected[t, t] = w
            Q_expected[s, t] = Q_expected[t, s] = -w
        assert np.array_equal(cert.P, P_expected)
        assert np.array_equal(cert.Q, Q_expected)

    def test_certificate_invariants(self):
        rng = np.random.default_rng(7)
        points = [improper_coeffs(alpha) for alpha in np.linspace(0, 2 * pi, 12, endpoint=False)]
        points += [random_tilde_region_params(rng) for _ in range(10)]
        for p in points:
            cert = decompose_tilde(p)
            assert np.linalg.eigvalsh(cert.P).min() >= -1e-9
            assert np.linalg.eigvalsh(cert.Q).min() >= -1e-9
            assert cert.residual(witness_tilde_matrix(p)) <= 1e-10

    def test_boundary_principal_submatrix_eigenvalues(self):
        cert = decompose_tilde(improper_coeffs(1.3))
        sub = cert.P[np.ix_(DOUBLES, DOUBLES)]
        assert np.allclose(np.linalg.eigvalsh(sub), [0.0, 0.0, 2.0], atol=1e-9)

    def test_reconstruction_matches_partial_transpose_identity(self):
        p = MapParams(Fraction(2, 3), Fraction(2, 3), Fraction(2, 3))
        cert = decompose_tilde(p)
        Wt = witness_tilde_matrix(p).matrix
        assert np.linalg.norm(cert.P + partial_transpose(cert.Q) - 6 * Wt) < 1e-10

    def test_rejects_outside_region(self):
        with pytest.raises(ValueError):
            decompose_tilde(MapParams(1.5, 0.4, 0.1))

    def test_rejects_off_slice(self):
        with pytest.raises(ValueError):
            decompose_tilde(MapParams(1, 1, 1))


class TestMixing:
    def test_single_atom(self):
        mixed = mix_witnesses([(pi, 1.0)])
        assert np.linalg.norm(mixed.matrix - witness_matrix(MapParams(0, 1, 1)).matrix) < 1e-12
        assert mixed.kind == "mixed"
        assert mixed.params is None

    def test_equal_choi_pair_average(self):
        mixed = mix_witnesses([(pi / 3, 0.5), (5 * pi / 3, 0.5)])
        average = (
            witness_matrix(so2_coeffs(pi / 3)).matrix + witness_matrix(so2_coeffs(5 * pi / 3)).matrix
        ) / 2
        assert np.linalg.norm(mixed.matrix - average) < 1e-14
        assert abs(mixed.trace() - 1) < 1e-12

    def test_cross_family_mixture_is_block_positive(self):
        mixed = mix_witnesses([(0.7, 0.3), (2.9, 0.2)], [(1.1, 0.25), (4.0, 0.25)])
        est = min_product_expectation(mixed.matrix, SeeSawConfig(restarts=40, rng_seed=12))
        assert est.value >= -1e-7

    def test_rejects_negative_weights(self):
        with pytest.raises(ValueError):
            mix_witnesses([(0.5, -0.2), (1.0, 1.2)])

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            mix_witnesses([(0.5, 0.7)])


class TestSerialization:
    def test_matrix_entries_roundtrip(self):
        W = witness_matrix(MapParams(1, 1, 0)).matrix
        entries = matrix_entries(W)
        rebuilt = np.array([[complex(re, im) for re, im in row] for row in entries])
        assert np.array_equal(rebuilt, W)

    def test_exact_entries(self):
        p = MapParams(Fraction(1), Fraction(1), Fraction(0))
        entries = exact_witness_entries(p, "standard")
        assert entries[0][0] == "1/6"
        assert entries[0][4] == "-1/6"
        assert entries[2][2] == "0"

    def test_exact_entries_require_rationals(self):
        with pytest.raises(ValueError):
            exact_witness_entries(MapParams(0.1, 1.0, 0.9), "standard")

    def test_exact_entries_match_floats(self):
        p = MapParams(Fraction(2, 3), Fraction(2, 3), Fraction(2, 3))
        for kind, build in (
            ("standard", witness_matrix),
            ("tilde", witness_tilde_matrix),
            ("u_conjugated", witness_u),
        ):
            entries = exact_witness_entries(p, kind)
            rebuilt = np.array([[float(Fraction(cell)) for cell in row] for row in entries])
            assert np.array_equal(rebuilt, build(p).matrix.real)
