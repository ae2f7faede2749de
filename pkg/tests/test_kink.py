"""Kink stability application: field potential, static profile, mapped
spectral problem, Goldstone mode."""

import math
from fractions import Fraction

import numpy as np
import pytest

from rmspec import KinkModel, analyze, bound_states, special_state_vminus
from rmspec.errors import DomainError
from rmspec.kink import (
    boosted_kink,
    field_potential,
    field_potential_dd,
    stability_potential,
    static_kink,
)


class TestFieldPotential:
    def test_vacua(self):
        m = KinkModel(p=2, phi1=1.0)
        assert field_potential(m, 0.0) == 0.0
        assert field_potential(m, math.sqrt(2.0)) == pytest.approx(0.0, abs=1e-15)
        assert field_potential(m, 1.0) == pytest.approx(1.0 / 16.0, rel=1e-14)

    def test_nonnegative(self, rng):
        m = KinkModel(p=3, phi1=0.7)
        assert np.all(field_potential(m, rng.uniform(-3, 3, size=100)) >= 0.0)

    def test_phonon_mass_from_curvature(self):
        # omega_ph^2 = U''(0) is the smaller vacuum curvature
        for p in (2, 3, 5):
            m = KinkModel(p=p, phi1=1.3)
            assert field_potential_dd(m, 0.0) == pytest.approx(m.omega_ph_sq, rel=1e-5)
            other = field_potential_dd(m, m.vacuum)
            assert other == pytest.approx(2.0 * m.phi1**2, rel=1e-4)
            assert m.omega_ph_sq <= other


class TestStaticKink:
    def test_boundary_values(self):
        m = KinkModel(p=2, phi1=1.0)
        assert static_kink(m, -60.0) == pytest.approx(0.0, abs=1e-12)
        assert static_kink(m, 60.0) == pytest.approx(m.vacuum, rel=1e-12)
        assert static_kink(m, 0.0) == pytest.approx(m.phi1 ** (1.0 / m.p), rel=1e-14)

    def test_monotone(self):
        m = KinkModel(p=4, phi1=0.9)
        x = np.linspace(-15, 15, 301)
        assert np.all(np.diff(static_kink(m, x)) > 0)

    def test_static_field_equation(self):
        # phi'' = U'(phi) by central differences (separate steps: the
        # second derivative is noise-limited, the first is not)
        hx, hp = 1e-3, 3e-6
        for p, phi1 in ((2, 1.0), (5, 0.6)):
            m = KinkModel(p=p, phi1=phi1)
            for x in np.linspace(-10, 10, 41):
                ddphi = (static_kink(m, x + hx) - 2 * static_kink(m, x)
                         + static_kink(m, x - hx)) / hx**2
                du = (field_potential(m, static_kink(m, x) + hp)
                      - field_potential(m, static_kink(m, x) - hp)) / (2 * hp)
                assert abs(ddphi - du) < 1e-6 * max(1.0, abs(ddphi))

    def test_boost(self):
        m = KinkModel(p=2, phi1=1.0)
        v = 0.6
        gamma = 1.0 / math.sqrt(1.0 - v * v)
        assert boosted_kink(m, 1.0, 0.0, v) == static_kink(m, gamma * 1.0)
        assert boosted_kink(m, v * 2.0, 2.0, v) == static_kink(m, 0.0)
        with pytest.raises(DomainError):
            boosted_kink(m, 0.0, 0.0, 1.0)


class TestStabilityPotential:
    def test_symmetric_at_p1(self):
        with pytest.warns(UserWarning):
            m = KinkModel(p=1, phi1=1.0)
        z = np.linspace(-4, 4, 17)
        np.testing.assert_allclose(stability_potential(m, z),
                                   stability_potential(m, -z), rtol=1e-14)

    def test_value_at_center(self):
        assert stability_potential(KinkModel(p=2), 0.0) == pytest.approx(-9.0 / 4.0)

    def test_asymptotics_match_vacuum_curvatures(self):
        # V(+-inf) = 2 (U''(vacuum) - omega_ph^2) / phi1^2
        for p in (2, 3, 7):
            m = KinkModel(p=p, phi1=1.1)
            left = 2.0 * (field_potential_dd(m, 0.0) - m.omega_ph_sq) / m.phi1**2
            right = 2.0 * (field_potential_dd(m, m.vacuum) - m.omega_ph_sq) / m.phi1**2
            assert stability_potential(m, -40.0) == pytest.approx(left, abs=1e-4)
            assert stability_potential(m, 40.0) == pytest.approx(right, rel=1e-4)

    @pytest.mark.parametrize("p", [2, 3, 5, 10, 25, 50])
    def test_mapping_identity(self, p):
        # V(z) + eps_shift equals the asymmetric well with mapped parameters
        m = KinkModel(p=p)
        params = m.as_potential()
        shift = float(m.eps_shift)
        z = np.linspace(-20, 20, 161)
        np.testing.assert_allclose(stability_potential(m, z) + shift, params.v(z),
                                   rtol=0, atol=1e-12)
        assert params.v0 > params.v_c


class TestExactConstants:
    @pytest.mark.parametrize("p", range(2, 11))
    def test_rational_identities(self, p):
        m = KinkModel(p=p)
        assert m.goldstone_eps == Fraction(p + 5, 2 * p + 1)
        assert m.goldstone_a == Fraction(p - 1, p)
        assert m.goldstone_b == Fraction(p + 1, p)
        assert m.goldstone_lambda_sq == Fraction(-4, p * p)
        assert m.mapped_v_minus == m.eps_shift
        assert m.mapped_v_plus == Fraction(9 * (p + 1), 2 * p + 1)

    @pytest.mark.parametrize("p", range(2, 11))
    def test_engine_matches_rationals(self, p):
        m = KinkModel(p=p)
        states = bound_states(m.as_potential())
        assert len(states) == 1
        st = states[0]
        assert st.eps == pytest.approx(float(m.goldstone_eps), rel=1e-12)
        assert st.a == pytest.approx(float(m.goldstone_a), rel=1e-12)
        assert st.b == pytest.approx(float(m.goldstone_b), rel=1e-12)

    @pytest.mark.parametrize("p", range(2, 11))
    def test_count_window(self, p):
        cap = KinkModel(p=p).as_potential().n_cap
        want = (p + 1 - math.sqrt(p * p - 1)) / p
        assert cap == pytest.approx(want, rel=1e-12)
        assert 0.0 < cap < 1.0


class TestAnalyze:
    def test_p2_report(self):
        rep = analyze(KinkModel(p=2, phi1=1.0))
        assert rep.n_bound == 1
        assert rep.goldstone_eps == pytest.approx(7.0 / 5.0, rel=1e-12)
        assert abs(rep.goldstone_omega_sq) < 1e-12
        assert rep.continuum_floor_omega_sq == pytest.approx(0.5, rel=1e-14)
        assert rep.stable

    @pytest.mark.parametrize("p", range(2, 11))
    def test_goldstone_zero_and_stable(self, p):
        m = KinkModel(p=p, phi1=1.0)
        rep = analyze(m)
        assert rep.n_bound == 1
        assert abs(rep.goldstone_omega_sq) < 1e-12
        assert rep.continuum_floor_omega_sq == pytest.approx(m.omega_ph_sq)
        assert rep.stable

    @pytest.mark.parametrize("p", [2, 4, 8])
    def test_goldstone_shape(self, p):
        # psi_0(z) proportional to d(phi_st)/dx evaluated at x = sqrt(2) z / phi1
        m = KinkModel(p=p, phi1=1.3)
        params = m.as_potential()
        st = bound_states(params)[0]
        from rmspec import eval_bound

        z = np.linspace(-10, 10, 101)
        x = math.sqrt(2.0) * z / m.phi1
        # d(phi_st)/dx = (phi_st / p) (1 - tanh) phi1/sqrt(2): this form has
        # no 1+tanh cancellation in the left tail
        dphi = (static_kink(m, x) / p * (1.0 - np.tanh(z))
                * m.phi1 / math.sqrt(2.0))
        psi = eval_bound(params, st, z)
        scale = psi[len(z) // 2] / dphi[len(z) // 2]  # constant fixed at z = 0
        assert np.max(np.abs(psi - scale * dphi)) < 1e-10 * np.max(np.abs(psi))

    @pytest.mark.parametrize("p", range(2, 11))
    def test_lower_threshold_not_in_continuum(self, p):
        assert special_state_vminus(KinkModel(p=p).as_potential()) is None

    def test_continuum_strictly_above_floor(self):
        # omega^2(eps) > omega_ph^2 for continuum energies
        m = KinkModel(p=3, phi1=1.0)
        vm = float(m.mapped_v_minus)
        for eps in np.linspace(vm * 1.0001, vm * 8, 50):
            assert m.omega_sq(float(eps)) > m.omega_ph_sq

    def test_p1_symmetric_case(self):
        with pytest.warns(UserWarning):
            m = KinkModel(p=1)
        rep = analyze(m)
        assert rep.n_bound == 2  # Goldstone plus one internal mode
        assert abs(rep.goldstone_omega_sq) < 1e-12
        assert rep.stable

    def test_invalid_p(self):
        with pytest.raises(DomainError):
            KinkModel(p=0)
        with pytest.raises(DomainError):
            KinkModel(p=2.5)  # type: ignore[arg-type]
        with pytest.raises(DomainError):
            KinkModel(p=2, phi1=-1.0)
