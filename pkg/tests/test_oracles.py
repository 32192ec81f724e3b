import numpy as np
import pytest

from conftest import random_slice_params
from qutritwit.maps import MapParams, apply_phi
from qutritwit.oracles import (
    ProductVectorPair,
    SeeSawConfig,
    _run_seesaw,
    indecomposability_certificate,
    is_block_positive,
    is_cp_choi,
    min_product_expectation,
    span_rank,
    zero_product_vectors,
)
from qutritwit.states import max_entangled_projector
from qutritwit.witnesses import witness_matrix


class TestConfig:
    def test_defaults(self):
        cfg = SeeSawConfig()
        assert cfg.restarts == 200
        assert cfg.max_iters == 500
        assert cfg.tol == 1e-11

    def test_validation(self):
        with pytest.raises(ValueError):
            SeeSawConfig(restarts=0)
        with pytest.raises(ValueError):
            SeeSawConfig(tol=0.0)


class TestMinProductExpectation:
    def test_identity(self):
        r = min_product_expectation(np.eye(9), SeeSawConfig(restarts=20, rng_seed=1))
        assert abs(r.value - 1.0) < 1e-12

    def test_choi_witness_floor(self):
        W = witness_matrix(MapParams(1, 1, 0)).matrix
        r = min_product_expectation(W, SeeSawConfig(rng_seed=2))
        assert abs(r.value) < 1e-9

    def test_negative_projector(self):
        # Product overlap with the maximally entangled state peaks at 1/3.
        r = min_product_expectation(-max_entangled_projector().matrix, SeeSawConfig(rng_seed=3))
        assert abs(r.value + 1 / 3) < 1e-9

    def test_unit_norms_and_consistent_value(self):
        W = witness_matrix(MapParams(0.4, 1.0, 0.6)).matrix
        r = min_product_expectation(W, SeeSawConfig(restarts=30, rng_seed=4))
        assert abs(np.linalg.norm(r.psi) - 1) < 1e-12
        assert abs(np.linalg.norm(r.phi) - 1) < 1e-12
        u = r.product()
        direct = np.vdot(u, W @ u)
        assert abs(direct.imag) < 1e-12
        assert abs(direct.real - r.value) < 1e-10

    def test_monotone_value_histories(self):
        W = witness_matrix(MapParams(0.9, 0.8, 0.3)).matrix
        cfg = SeeSawConfig(restarts=12, max_iters=60, rng_seed=5)
        _, _, _, history = _run_seesaw(W, cfg)
        diffs = np.diff(history, axis=0)
        assert np.max(diffs) <= 1e-12

    def test_bitwise_reproducibility(self):
        W = witness_matrix(MapParams(0.6, 0.9, 0.5)).matrix
        cfg = SeeSawConfig(restarts=15, rng_seed=42)
        r1 = min_product_expectation(W, cfg)
        r2 = min_product_expectation(W, cfg)
        assert r1.value == r2.value
        assert np.array_equal(r1.psi, r2.psi)
        assert np.array_equal(r1.phi, r2.phi)


class TestBlockPositivity:
    def test_reduction_witness(self):
        assert is_block_positive(witness_matrix(MapParams(0, 1, 1)).matrix, SeeSawConfig(restarts=40, rng_seed=6))

    def test_identity(self):
        assert is_block_positive(np.eye(9), SeeSawConfig(restarts=10, rng_seed=7))

    def test_non_positive_point(self):
        W = witness_matrix(MapParams(0.5, 0.1, 0.1)).matrix
        assert not is_block_positive(W, SeeSawConfig(restarts=20, rng_seed=8))


class TestChoiCp:
    def test_cp_member(self):
        p = MapParams(2, 0, 0)
        assert is_cp_choi(lambda X: apply_phi(p, X))

    def test_choi_map_not_cp(self):
        p = MapParams(1, 1, 0)
        assert not is_cp_choi(lambda X: apply_phi(p, X))

    def test_identity_map(self):
        assert is_cp_choi(lambda X: X)


class TestZeroVectors:
    def test_reduction_witness_spans_everything(self):
        W = witness_matrix(MapParams(0, 1, 1)).matrix
        zeros = zero_product_vectors(W, SeeSawConfig(rng_seed=9))
        assert len(zeros) > 0
        assert span_rank(zeros) == 9
        for pair in zeros:
            assert pair.value <= 1e-9
            assert abs(np.linalg.norm(pair.psi) - 1) < 1e-12
            assert abs(np.linalg.norm(pair.phi) - 1) < 1e-12

    def test_choi_witnesses_span_seven(self):
        for abc in ((1, 1, 0), (1, 0, 1)):
            W = witness_matrix(MapParams(*abc)).matrix
            zeros = zero_product_vectors(W, SeeSawConfig(rng_seed=10))
            assert span_rank(zeros) == 7, abc
            for pair in zeros:
                assert pair.value <= 1e-9
                assert abs(np.linalg.norm(pair.psi) - 1) < 1e-12
                assert abs(np.linalg.norm(pair.phi) - 1) < 1e-12

    def test_strictly_positive_gives_empty(self):
        assert zero_product_vectors(np.eye(9), SeeSawConfig(restarts=20, rng_seed=11)) == []


class TestSpanRank:
    def test_single_vector(self):
        e = np.zeros(3)
        e[0] = 1.0
        pair = ProductVectorPair(e, e, 0.0)
        assert span_rank([pair]) == 1

    def test_full_product_basis(self):
        pairs = []
        for i in range(3):
            for j in range(3):
                ei, ej = np.zeros(3), np.zeros(3)
                ei[i] = 1.0
                ej[j] = 1.0
                pairs.append(ProductVectorPair(ei, ej, 0.0))
        assert span_rank(pairs) == 9

    def test_empty(self):
        assert span_rank([]) == 0


class TestIndecomposabilityCertificate:
    def test_choi_map(self):
        eps, value = indecomposability_certificate(MapParams(1, 1, 0))
        assert eps == 0.5
        assert value == -0.25

    def test_dual_choi_map(self):
        eps, value = indecomposability_certificate(MapParams(1, 0, 1))
        assert eps == 2.0
        assert value < 0

    def test_reduction_map(self):
        assert indecomposability_certificate(MapParams(0, 1, 1)) is None

    def test_asymmetric_slice_points(self):
        rng = np.random.default_rng(12)
        found = 0
        while found < 10:
            p = random_slice_params(rng)
            if abs(float(p.b) - float(p.c)) < 1e-3:
                continue
            cert = indecomposability_certificate(p)
            assert cert is not None
            assert cert[1] < 0
            found += 1
