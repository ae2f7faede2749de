"""Linear stability of the static kinks of the phi^{2p+2} field theory.

The field potential U(phi) = phi^2 (phi^p - 2 phi1)^2 / (4 p^2) supports a
kink connecting the vacua 0 and (2 phi1)^{1/p}. Linearizing about it and
rescaling z = phi1 x / sqrt(2) produces the asymmetric-well eigenproblem
solved by :mod:`rmspec.spectrum`, with

    v0 = 3(p+1)(p+2) / (p(2p+1)),   tanh(mu) = (p-1)/(2p+1),

and the frequency map omega^2 = omega_ph^2 + phi1^2 (eps - v_minus)/2.
All mapped constants are exact rationals (or exact square roots of
rationals) for integer p, so the report carries exact Fractions alongside
the floating engine output.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import spectrum
from .errors import DomainError
from .potential import PotentialParams


@dataclass(frozen=True)
class KinkModel:
    p: int
    phi1: float = 1.0

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise DomainError(f"p must be an integer >= 1, got {self.p!r}")
        if not self.phi1 > 0:
            raise DomainError(f"phi1 must be positive, got {self.phi1}")
        if self.p == 1:
            warnings.warn(
                "p=1 is the symmetric (Poschl-Teller) case: the stability "
                "operator has an internal mode besides the Goldstone mode",
                stacklevel=2)

    @property
    def omega_ph_sq(self) -> float:
        """Phonon band edge omega_ph^2 = 2 phi1^2 / p^2."""
        return 2.0 * self.phi1**2 / self.p**2

    @property
    def vacuum(self) -> float:
        return (2.0 * self.phi1) ** (1.0 / self.p)

    # --- exact mapped constants -------------------------------------------
    @property
    def mapped_v0(self) -> Fraction:
        p = self.p
        return Fraction(3 * (p + 1) * (p + 2), p * (2 * p + 1))

    @property
    def mapped_tanh_mu(self) -> Fraction:
        return Fraction(self.p - 1, 2 * self.p + 1)

    @property
    def mapped_mu(self) -> float:
        return math.atanh(float(self.mapped_tanh_mu))

    @property
    def eps_shift(self) -> Fraction:
        """v0 (p+2)/(3p); equals the mapped v_minus."""
        return self.mapped_v0 * Fraction(self.p + 2, 3 * self.p)

    @property
    def mapped_v_minus(self) -> Fraction:
        p = self.p
        return Fraction((p + 2) ** 2 * (p + 1), p * p * (2 * p + 1))

    @property
    def mapped_v_plus(self) -> Fraction:
        p = self.p
        return Fraction(9 * (p + 1), 2 * p + 1)

    @property
    def goldstone_eps(self) -> Fraction:
        return Fraction(self.p + 5, 2 * self.p + 1)

    @property
    def goldstone_a(self) -> Fraction:
        return Fraction(self.p - 1, self.p)

    @property
    def goldstone_b(self) -> Fraction:
        return Fraction(self.p + 1, self.p)

    @property
    def goldstone_lambda_sq(self) -> Fraction:
        """eps_0 - v_minus = -4/p^2 exactly."""
        return self.goldstone_eps - self.mapped_v_minus

    def as_potential(self) -> PotentialParams:
        return PotentialParams(v0=float(self.mapped_v0), mu=self.mapped_mu)

    def omega_sq(self, eps: float) -> float:
        """Frequency map omega^2 = omega_ph^2 + phi1^2 (eps - v_minus)/2."""
        lam_sq = eps - float(self.mapped_v_minus)
        return self.omega_ph_sq + 0.5 * self.phi1**2 * lam_sq


@dataclass(frozen=True)
class StabilityReport:
    n_bound: int
    goldstone_eps: float
    goldstone_omega_sq: float
    continuum_floor_omega_sq: float
    stable: bool
    discrete_omega_sq: tuple[float, ...]


def field_potential(model: KinkModel, phi) -> float | np.ndarray:
    """U(phi) = phi^2 (phi^p - 2 phi1)^2 / (4 p^2); vacua at 0 and
    (2 phi1)^{1/p}."""
    phi = np.asarray(phi, dtype=np.float64)
    val = phi**2 * (phi**model.p - 2.0 * model.phi1) ** 2 / (4.0 * model.p**2)
    return float(val) if val.ndim == 0 else val


def field_potential_dd(model: KinkModel, phi: float, h: float = 1e-5) -> float:
    """U''(phi) by central differences (verification helper)."""
    return (field_potential(model, phi + h) - 2.0 * field_potential(model, phi)
            + field_potential(model, phi - h)) / h**2


def static_kink(model: KinkModel, x) -> float | np.ndarray:
    """phi_st(x) = phi1^{1/p} (1 + tanh(phi1 x / sqrt(2)))^{1/p}.

    1 + tanh is evaluated as 2/(1 + e^{-2 arg}) so the left tail keeps full
    relative accuracy instead of cancelling.
    """
    x = np.asarray(x, dtype=np.float64)
    arg = model.phi1 * x / math.sqrt(2.0)
    en = np.exp(2.0 * np.minimum(arg, 0.0))
    t = np.where(arg >= 0,
                 2.0 / (1.0 + np.exp(-2.0 * np.maximum(arg, 0.0))),
                 2.0 * en / (1.0 + en))
    val = model.phi1 ** (1.0 / model.p) * t ** (1.0 / model.p)
    return float(val) if val.ndim == 0 else val


def boosted_kink(model: KinkModel, x, t, velocity: float) -> float | np.ndarray:
    """Moving kink via the Lorentz transform of the static profile."""
    if not -1.0 < velocity < 1.0:
        raise DomainError("|velocity| must be below 1")
    gamma = 1.0 / math.sqrt(1.0 - velocity**2)
    return static_kink(model, gamma * (np.asarray(x, dtype=np.float64) - velocity * t))


def stability_potential(model: KinkModel, z) -> float | np.ndarray:
    """Linearization potential V(z) in the rescaled coordinate; equals the
    asymmetric well shifted down by eps_shift."""
    p = model.p
    tz = np.tanh(np.asarray(z, dtype=np.float64))
    val = (-3.0 * (p + 1) / p**2
           + 2.0 * (p**2 - 1) / p**2 * tz
           + (2.0 * p + 1) * (p + 1) / p**2 * tz**2)
    return float(val) if val.ndim == 0 else val


def analyze(model: KinkModel) -> StabilityReport:
    """Full stability verdict: delegates to the spectral engine on the
    mapped parameters and converts eigenvalues to squared frequencies."""
    params = model.as_potential()
    states = spectrum.bound_states(params)
    if not states:
        raise DomainError("mapped parameters produced no discrete mode")
    omegas = tuple(model.omega_sq(st.eps) for st in states)
    goldstone = min(omegas)
    floor = model.omega_ph_sq
    stable = all(w >= -1e-12 for w in omegas) and floor > 0.0
    return StabilityReport(
        n_bound=len(states),
        goldstone_eps=states[0].eps,
        goldstone_omega_sq=goldstone,
        continuum_floor_omega_sq=floor,
        stable=stable,
        discrete_omega_sq=omegas,
    )
