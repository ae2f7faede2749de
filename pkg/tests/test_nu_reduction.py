"""Reduction layer: coefficient polynomials, the four solution branches,
and the multiplier phi."""

import cmath
import math

import numpy as np
import pytest

from rmspec import nu_reduction as nu
from rmspec.errors import DomainError
from rmspec.potential import PotentialParams


def _rand_params(rng):
    return PotentialParams(v0=float(rng.uniform(0.1, 30.0)),
                           mu=float(rng.uniform(0.0, 1.5)))


class TestBuildGhe:
    def test_sigma_always_fixed(self, rng):
        for _ in range(5):
            g = nu.build_ghe(_rand_params(rng), float(rng.uniform(0, 10)))
            assert g.sigma == (1.0, 0.0, -1.0)
            assert g.tau_tilde == (0.0, -2.0)

    def test_symmetric_zero_energy(self):
        g = nu.build_ghe(PotentialParams(1.0, 0.0), 0.0)
        assert g.sigma_tilde == pytest.approx((0.0, 0.0, -1.0), abs=1e-15)

    def test_example_half_energy(self, ex1):
        # cosh^2(mu) = 9/8 and tanh(mu) = 1/3 for mu = ln(2)/2
        g = nu.build_ghe(ex1, 0.5)
        want = (0.5 - 9.0 / 8.0 / 9.0, 2.0 * 9.0 / 8.0 / 3.0, -9.0 / 8.0)
        assert g.sigma_tilde == pytest.approx(want, rel=1e-14)

    def test_reproduces_potential(self, rng):
        # sigma_tilde(-tanh z) must equal eps - v(z)
        for _ in range(10):
            p = _rand_params(rng)
            eps = float(rng.uniform(0, 2 * p.v_plus))
            g = nu.build_ghe(p, eps)
            for z in np.linspace(-4, 4, 17):
                u = -math.tanh(z)
                val = g.sigma_tilde[0] + g.sigma_tilde[1] * u + g.sigma_tilde[2] * u * u
                assert val == pytest.approx(eps - p.v(z), rel=1e-12, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            PotentialParams(v0=-1.0, mu=0.3)
        with pytest.raises(DomainError):
            PotentialParams(v0=1.0, mu=-0.1)


class TestBranches:
    def test_example_zero_energy(self, ex1):
        b1, b2, b3, b4 = nu.solve_pi_branches(ex1, 0.0)
        kp, km = math.sqrt(2.0), 1.0 / math.sqrt(2.0)
        assert b1.a == pytest.approx((kp - km) / 2, rel=1e-14)
        assert b1.b == pytest.approx((kp + km) / 2, rel=1e-14)
        assert b1.k == pytest.approx(0.0, abs=1e-15)
        # branch 2 is the pi -> -pi image with the same k
        assert b2.a == pytest.approx(-b1.a, rel=1e-14)
        assert b2.b == pytest.approx(-b1.b, rel=1e-14)
        assert b2.k == b1.k

    def test_defining_equation_residual(self, rng):
        for _ in range(100):
            p = _rand_params(rng)
            eps = float(rng.uniform(0, 2.0 * p.v_plus))
            for br in nu.solve_pi_branches(p, eps):
                assert nu.branch_residual(p, eps, br) < 1e-12 * max(1.0, p.v_plus, eps)

    def test_lambda_relation(self, rng):
        for _ in range(20):
            p = _rand_params(rng)
            eps = float(rng.uniform(0, 2.0 * p.v_plus))
            for br in nu.solve_pi_branches(p, eps):
                assert br.lam == pytest.approx(br.k - br.b, rel=1e-14, abs=1e-14)

    def test_branch_one_tau_criterion_everywhere(self, rng):
        # root inside (-1,1) with negative slope, for every bound-region
        # energy at any parameters
        for _ in range(50):
            p = PotentialParams(v0=float(rng.uniform(0.05, 40)),
                                mu=float(rng.uniform(0.001, 2.0)))
            eps = float(rng.uniform(1e-6, p.v_minus * 0.999999))
            b1 = nu.solve_pi_branches(p, eps)[0]
            assert nu.tau_selects(b1)

    def test_branch_one_unique_weight(self, rng):
        # the bounded Pearson weight singles out branch 1 for every
        # bound-region energy
        for _ in range(50):
            p = PotentialParams(v0=float(rng.uniform(0.05, 40)),
                                mu=float(rng.uniform(0.001, 2.0)))
            eps = float(rng.uniform(1e-6, p.v_minus * 0.999999))
            admissible = [br.j for br in nu.solve_pi_branches(p, eps)
                          if nu.weight_admissible(br)]
            assert admissible == [1]

    def test_tau_exclusivity_in_deep_regime(self, rng):
        # the tau pointer criterion is exclusive to branch 1 exactly when
        # kappa_minus >= 1, i.e. eps <= v_minus - 1
        for _ in range(60):
            p = PotentialParams(v0=float(rng.uniform(2.5, 40)),
                                mu=float(rng.uniform(0.001, 0.8)))
            if p.v_minus <= 1.2:
                continue
            eps = float(rng.uniform(1e-6, p.v_minus - 1.0))
            selected = [br.j for br in nu.solve_pi_branches(p, eps)
                        if nu.tau_selects(br)]
            assert selected == [1]

    def test_tau_criterion_not_exclusive_when_shallow(self):
        # counterexample kept on record: branch 3 also passes once
        # kappa_minus < 1
        p = PotentialParams(1.0, math.log(2.0) / 2.0)
        selected = [br.j for br in nu.solve_pi_branches(p, 0.4) if nu.tau_selects(br)]
        assert 1 in selected and 3 in selected


class TestPhi:
    def test_center_is_one(self, ex1, rng):
        for eps in (0.0, 0.3, 1.7, 5.0):
            assert nu.phi_multiplier(ex1, eps, 0.0) == pytest.approx(1.0, abs=1e-14)

    def test_lower_threshold_drops_first_factor(self, ex2):
        # at eps = v_minus the (1-u) exponent vanishes
        kp = math.sqrt(ex2.v_plus - ex2.v_minus)
        for u in (-0.7, 0.2, 0.9):
            want = (1.0 + u) ** (kp / 2.0)
            assert nu.phi_multiplier(ex2, ex2.v_minus, u) == pytest.approx(want, rel=1e-13)

    def test_frozen_value(self, ex1):
        want = 0.5 ** (1.0 / (2.0 * math.sqrt(2.0))) * 1.5 ** (math.sqrt(2.0) / 2.0)
        assert nu.phi_multiplier(ex1, 0.0, 0.5) == pytest.approx(want, rel=1e-13)
        assert nu.phi_multiplier(ex1, 0.0, 0.5) == pytest.approx(
            1.04252180611701516764776149307, rel=1e-13)

    def test_domain(self, ex1):
        for u in (-1.0, 1.0, 1.5):
            with pytest.raises(DomainError):
                nu.phi_multiplier(ex1, 0.5, u)

    def test_log_derivative_ode(self, ex1, rng):
        # phi'/phi = pi_1/sigma checked by central differences
        h = 1e-6
        for _ in range(20):
            eps = float(rng.uniform(0.0, 4.0))
            u = float(rng.uniform(-0.9, 0.9))
            b1 = nu.solve_pi_branches(ex1, eps)[0]
            fm = nu.phi_multiplier(ex1, eps, u - h)
            fp = nu.phi_multiplier(ex1, eps, u + h)
            f0 = nu.phi_multiplier(ex1, eps, u)
            logderiv = (fp - fm) / (2 * h) / f0
            want = b1.pi(u) / (1.0 - u * u)
            assert logderiv == pytest.approx(want, rel=1e-6, abs=1e-6)

    def test_pearson_equation(self, ex1, rng):
        # (sigma rho)' = tau_1 rho with rho = phi^2
        h = 1e-6
        for _ in range(10):
            eps = float(rng.uniform(0.0, ex1.v_minus * 0.95))
            u = float(rng.uniform(-0.85, 0.85))
            b1 = nu.solve_pi_branches(ex1, eps)[0]

            def sigma_rho(uu):
                return (1.0 - uu * uu) * nu.phi_multiplier(ex1, eps, uu) ** 2

            deriv = (sigma_rho(u + h) - sigma_rho(u - h)) / (2 * h)
            c0, c1 = b1.tau()
            want = (c0 + c1 * u) * nu.phi_multiplier(ex1, eps, u) ** 2
            assert deriv == pytest.approx(want, rel=1e-8, abs=1e-8)
