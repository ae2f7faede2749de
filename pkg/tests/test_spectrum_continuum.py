"""Continuum: region classification, hypergeometric data, bounded
eigenfunctions and the threshold states."""

import math

import numpy as np
import pytest

from rmspec import (
    PotentialParams,
    Region,
    classify,
    continuum_params,
    eval_unbound,
    oracle,
    special_state_vminus,
    special_state_vplus,
)
from rmspec.errors import DomainError, SecondSolutionUndefinedError

PSI1_EX1_EPS1_Z0 = 0.801223500490113429089816817866 + 0.200378980153295678813072823908j


class TestClassify:
    def test_examples(self, ex1, ex2):
        assert classify(ex1, 1.0) is Region.REFLECTING
        assert classify(ex1, 0.0) is Region.ZERO_STATE
        assert classify(ex2, 1.0 / 3.0) is Region.SPECIAL_V_MINUS
        assert classify(ex1, 0.2) is Region.BOUND
        assert classify(ex1, 2.0) is Region.SPECIAL_V_PLUS
        assert classify(ex1, 5.0) is Region.FREE

    def test_tolerance_window(self, ex1):
        assert classify(ex1, 0.5 * (1 + 1e-13)) is Region.SPECIAL_V_MINUS
        assert classify(ex1, 0.5 * (1 + 1e-10)) is Region.REFLECTING
        assert classify(ex1, 2.0 * (1 - 1e-13)) is Region.SPECIAL_V_PLUS

    def test_symmetric_case_collapses(self):
        p = PotentialParams(3.0, 0.0)
        assert classify(p, 1.0) is Region.BOUND
        assert classify(p, 3.0) is Region.SPECIAL_V_MINUS
        assert classify(p, 4.0) is Region.FREE

    def test_negative_energy_rejected(self, ex1):
        with pytest.raises(DomainError):
            classify(ex1, -0.1)


class TestContinuumParams:
    def test_example_one_reflecting(self, ex1):
        cp = continuum_params(ex1, 1.0)
        assert cp.a == pytest.approx(0.5 - 0.5j / math.sqrt(2.0), rel=1e-14)
        assert cp.b == pytest.approx(0.5 + 0.5j / math.sqrt(2.0), rel=1e-14)
        assert cp.gamma == pytest.approx(2.0, rel=1e-14)
        assert cp.b == pytest.approx(cp.a.conjugate(), rel=1e-14)

    def test_invariants(self, ex1, rng):
        b0 = ex1.depth_root
        for _ in range(40):
            eps = float(rng.uniform(ex1.v_minus * 1.0001, 12.0))
            cp = continuum_params(ex1, eps)
            assert cp.alpha + cp.beta == pytest.approx(2.0 * cp.b + 1.0, rel=1e-13)
            assert cp.beta - cp.alpha == pytest.approx(2.0 * b0, rel=1e-13)
            assert cp.gamma == pytest.approx(cp.a + cp.b + 1.0, rel=1e-13)

    def test_free_region_imaginary(self, ex1):
        cp = continuum_params(ex1, 5.0)
        assert abs(cp.a.real) < 1e-14 and abs(cp.b.real) < 1e-14
        assert cp.kappa_plus.imag > 0 and cp.kappa_minus.imag > 0
        assert cp.k_coef.imag == pytest.approx(0.0, abs=1e-13)

    def test_upper_threshold(self, ex1):
        cp = continuum_params(ex1, ex1.v_plus)
        assert cp.kappa_plus == 0.0
        assert cp.gamma == pytest.approx(1.0, abs=1e-14)

    def test_example_two_indices(self, ex2):
        # sqrt(v0 cosh^2 mu + 1/4) = 1 here, so alpha = b - 1/2, beta = b + 3/2
        for eps in (1.5, 2.0, 4.0):
            cp = continuum_params(ex2, eps)
            assert cp.alpha == pytest.approx(cp.b - 0.5, rel=1e-13)
            assert cp.beta == pytest.approx(cp.b + 1.5, rel=1e-13)

    def test_below_threshold_rejected(self, ex1):
        with pytest.raises(DomainError):
            continuum_params(ex1, 0.3)


class TestUnboundEigenfunctions:
    def test_frozen_value(self, ex1):
        assert eval_unbound(ex1, 1.0, 1, 0.0) == pytest.approx(
            PSI1_EX1_EPS1_Z0, rel=1e-13)

    def test_bounded_both_regions(self, ex1, rng):
        z = np.linspace(-40, 40, 401)
        for _ in range(10):
            eps = float(rng.uniform(0.51, 10.0))
            vals = np.abs(eval_unbound(ex1, eps, 1, z))
            assert np.all(np.isfinite(vals))
            # bounded: the far tail never exceeds a fixed multiple of the core
            assert vals.max() < 20.0 * max(vals[180:220].max(), 1e-3)

    def test_left_asymptotic_modulus(self, ex1):
        # prefactor modulus settles to a constant once the potential is flat
        eps = 1.3
        cp = continuum_params(ex1, eps)
        z = np.array([-30.0, -25.0, -20.0])
        vals = eval_unbound(ex1, eps, 1, z)
        # strip the oscillatory connection mixture: |psi| must stay within
        # the envelope |G1| + |G2| of the two unit-modulus waves
        assert np.all(np.abs(vals) < 10.0)
        assert np.all(np.abs(vals) > 1e-4)

    def test_residuals_reflecting_and_free(self, ex1, rng):
        grid = oracle.FdGrid(-8.0, 8.0, 16001)
        for _ in range(6):
            eps = float(rng.uniform(0.55, 1.95))
            res = oracle.residual(ex1, eps, lambda z: eval_unbound(ex1, eps, 1, z), grid)
            assert res < 1e-5
        for _ in range(6):
            eps = float(rng.uniform(2.05, 9.0))
            for which in (1, 2):
                res = oracle.residual(
                    ex1, eps, lambda z: eval_unbound(ex1, eps, which, z), grid)
                assert res < 1e-5

    def test_conjugate_pairing_free_region(self, ex1, rng):
        z = np.linspace(-10, 10, 81)
        for _ in range(10):
            eps = float(rng.uniform(2.01, 30.0))
            p1 = eval_unbound(ex1, eps, 1, z)
            p2 = eval_unbound(ex1, eps, 2, z)
            assert np.max(np.abs(p1 - np.conj(p2))) < 1e-10

    def test_second_solution_guard(self, ex1):
        # gamma(eps=1) = 2 exactly: second Kummer solution undefined
        with pytest.raises(SecondSolutionUndefinedError):
            eval_unbound(ex1, 1.0, 2, 0.0)
        with pytest.raises(DomainError):
            eval_unbound(ex1, 0.3, 1, 0.0)


class TestSpecialStates:
    def test_example_two_lower_threshold(self, ex2):
        sp = special_state_vminus(ex2)
        assert sp is not None and sp.degree == 0
        assert sp.eps == pytest.approx(ex2.v_minus, rel=1e-15)
        z = np.linspace(-8, 8, 100)
        ref = np.exp(-z / 2.0) / np.cosh(z) ** 0.5
        ratio = sp(z) / ref
        assert np.max(np.abs(ratio - ratio[0])) < 1e-10

    def test_example_one_absent(self, ex1):
        assert special_state_vminus(ex1) is None

    def test_symmetric_threshold_state(self):
        # v0 = l(l+1) with l = 1: threshold function proportional to tanh z
        p = PotentialParams(2.0, 0.0)
        sp = special_state_vminus(p)
        assert sp is not None and sp.degree == 1
        z = np.linspace(-5, 5, 20)  # even count keeps z = 0 out
        ratio = sp(z) / np.tanh(z)
        assert np.max(np.abs(ratio - ratio[0])) < 1e-12

    def test_lower_threshold_not_square_integrable(self, ex2):
        sp = special_state_vminus(ex2)
        tails = [oracle.integrate(lambda z: abs(sp(z)) ** 2, -width, width, tol=1e-9)
                 for width in (20.0, 40.0, 80.0)]
        assert tails[0] < tails[1] < tails[2]
        assert tails[2] > 2.0 * tails[1] - tails[0] * 1.5  # keeps growing linearly-ish

    def test_lower_threshold_residual(self, ex2):
        sp = special_state_vminus(ex2)
        grid = oracle.FdGrid(-8.0, 8.0, 4001)
        assert oracle.residual(ex2, ex2.v_minus, sp, grid) < 1e-5

    def test_upper_threshold_state(self, ex1):
        sp = special_state_vplus(ex1)
        assert sp.eps == ex1.v_plus
        z = np.linspace(-20, 20, 161)
        vals = np.asarray(sp(z))
        assert np.all(np.isfinite(vals)) and np.abs(vals).max() < 10.0
        grid = oracle.FdGrid(-8.0, 8.0, 4001)
        assert oracle.residual(ex1, ex1.v_plus, sp, grid) < 1e-5
        assert abs(complex(sp(0.0))) > 0.0
