"""Tests for surrogate mass estimation M' = G V^+ and the recommended alpha."""

import numpy as np
import pytest

from estimation import (
    estimate_mass,
    estimate_sequence,
    recommend_alpha,
    refine_with_pairs,
    sigma1_check,
    sigma1_check_stacked,
)
from models import solve_pencil
from spectral import SymmetricMatrix, singular_values
from tests.helpers import random_pencil, random_spd
from utils.exceptions import DimensionMismatch, DuplicatePair, PreconditionViolated, ZeroVector


class TestEstimateMass:
    def test_single_pair(self):
        g, v = np.array([2.0, 0.0]), np.array([1.0, 0.0])
        estimate = estimate_mass(g, v)
        np.testing.assert_allclose(estimate.m_prime, [[2.0, 0.0], [0.0, 0.0]])
        assert estimate.rho == pytest.approx(2.0)
        assert recommend_alpha(estimate) == pytest.approx(1.0)

    def test_full_information_recovers_mass(self, m1_system, m2_system):
        for system in (m1_system, m2_system):
            modal = solve_pencil(system)
            estimate = estimate_mass(modal.left_vectors, modal.right_vectors)
            scale = system.mass.frobenius_norm()
            np.testing.assert_allclose(estimate.m_prime, system.mass.array, atol=1e-8 * scale)

    def test_full_information_alpha(self, m1_system, m2_system):
        for system, expected in ((m1_system, 15.0), (m2_system, 100.0)):
            modal = solve_pencil(system)
            estimate = estimate_mass(modal.left_vectors, modal.right_vectors)
            assert estimate.recommended_alpha == pytest.approx(expected, rel=1e-10)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            estimate_mass(np.ones((3, 2)), np.ones((3, 1)))

    def test_too_many_pairs(self):
        with pytest.raises(DimensionMismatch):
            estimate_mass(np.ones((2, 3)), np.ones((2, 3)))


class TestSequence:
    def test_m2_rho_nondecreasing_to_sigma1(self, m2_system):
        modal = solve_pencil(m2_system)
        rhos = [e.rho for e in estimate_sequence(modal.left_vectors, modal.right_vectors)]
        assert len(rhos) == 5
        assert all(later >= earlier - 1e-9 for earlier, later in zip(rhos, rhos[1:]))
        assert rhos[-1] == pytest.approx(200.0, rel=1e-10)

    def test_never_exceeds_sigma1(self, m1_system):
        modal = solve_pencil(m1_system)
        for estimate in estimate_sequence(modal.left_vectors, modal.right_vectors):
            assert estimate.rho <= 30.0 + 1e-9
            assert estimate.k == estimate.right.shape[1]


class TestSigma1:
    def test_single_pair_random(self, rng):
        for _ in range(1000):
            n = int(rng.integers(1, 9))
            mass = SymmetricMatrix(random_spd(rng, n))
            v = rng.normal(size=n)
            check = sigma1_check(mass @ v, v, mass)
            assert check.holds
            assert check.lhs <= check.rhs + 1e-9

    def test_stacked_random(self, rng):
        violations = 0
        for _ in range(200):
            n = int(rng.integers(2, 9))
            system = random_pencil(rng, n)
            modal = solve_pencil(system)
            k = int(rng.integers(1, n + 1))
            check = sigma1_check_stacked(modal.left_vectors[:, :k], modal.right_vectors[:, :k], system.mass)
            violations += not check.holds
        # G V^+ = M P_V for exact pairs, so no violation is expected
        assert violations == 0

    def test_stacked_reports_instead_of_raising(self):
        mass = SymmetricMatrix.identity(2)
        v = np.eye(2)
        check = sigma1_check_stacked(mass @ v, v, mass)
        assert check.holds
        assert check.lhs == pytest.approx(1.0)

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            sigma1_check(np.zeros(2), np.zeros(2), SymmetricMatrix.identity(2))

    def test_g_not_mass_times_v(self):
        with pytest.raises(PreconditionViolated):
            sigma1_check(np.array([1.0, 1.0]), np.array([1.0, 0.0]), SymmetricMatrix.identity(2))

    def test_rhs_is_sigma1_of_mass(self, m2_system):
        g, v = solve_pencil(m2_system).pair(0)
        check = sigma1_check(g, v, m2_system.mass)
        assert check.rhs == pytest.approx(float(singular_values(m2_system.mass.array)[0]))


class TestRefine:
    def test_adds_pair(self, m1_system):
        modal = solve_pencil(m1_system)
        base = estimate_mass(modal.left_vectors[:, :2], modal.right_vectors[:, :2])
        g, v = modal.pair(2)
        refined = refine_with_pairs(base, g, v)
        assert refined.k == 3
        expected = estimate_mass(modal.left_vectors[:, :3], modal.right_vectors[:, :3])
        assert refined.rho == pytest.approx(expected.rho, rel=1e-12)

    def test_duplicate_pair(self, m1_system):
        modal = solve_pencil(m1_system)
        base = estimate_mass(modal.left_vectors[:, :2], modal.right_vectors[:, :2])
        g, v = modal.pair(1)
        with pytest.raises(DuplicatePair):
            refine_with_pairs(base, g, v)

    def test_duplicate_up_to_sign(self, m1_system):
        modal = solve_pencil(m1_system)
        base = estimate_mass(modal.left_vectors[:, :2], modal.right_vectors[:, :2])
        g, v = modal.pair(0)
        with pytest.raises(DuplicatePair):
            refine_with_pairs(base, -g, -v)

    def test_requires_canonical_scaling(self, m1_system):
        modal = solve_pencil(m1_system)
        base = estimate_mass(modal.left_vectors[:, :1], modal.right_vectors[:, :1])
        g, v = modal.pair(1)
        with pytest.raises(PreconditionViolated):
            refine_with_pairs(base, 2.0 * g, v)

    def test_all_pairs_used(self):
        base = estimate_mass(np.eye(2), np.eye(2))
        with pytest.raises(DimensionMismatch):
            refine_with_pairs(base, np.array([0.6, 0.8]), np.array([0.6, 0.8]))
