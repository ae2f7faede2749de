"""Reduction of the Schrodinger problem to hypergeometric form.

Substituting u = -tanh z turns the equation into

    psi'' + (tau_t/sigma) psi' + (sigma_t/sigma^2) psi = 0,

with sigma = 1 - u^2, tau_t = -2u and sigma_t quadratic in u. Writing
psi = phi(u) y(u) with phi'/phi = pi/sigma for a degree-1 polynomial
pi(u) = a - b u leads to a quadratic system for (a, b, k) with four
solution branches; branch 1 is the one whose weight function is bounded
and carries the discrete spectrum.

Polynomials are stored as ascending coefficient tuples (c0, c1, ...).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .potential import PotentialParams


@dataclass(frozen=True)
class GhePolys:
    tau_tilde: tuple[float, float]
    sigma: tuple[float, float, float]
    sigma_tilde: tuple[float, float, float]


@dataclass(frozen=True)
class PiBranch:
    """pi(u) = a - b*u together with its constants k and lam = k - b."""

    j: int
    a: complex
    b: complex
    k: complex
    lam: complex

    def pi(self, u):
        return self.a - self.b * np.asarray(u)

    def tau(self) -> tuple[complex, complex]:
        """tau(u) = -2u + 2 pi(u), ascending coefficients."""
        return (2.0 * self.a, -2.0 * (self.b + 1.0))

    def phi_exponents(self) -> tuple[complex, complex]:
        """(e_minus, e_plus) with phi = (1-u)^{e_minus} (1+u)^{e_plus}."""
        return ((self.b - self.a) / 2.0, (self.a + self.b) / 2.0)


def _csqrt(x: float) -> complex:
    """Principal square root of a real number, i*sqrt(-x) for x < 0."""
    if x >= 0.0:
        return complex(math.sqrt(x), 0.0)
    return complex(0.0, math.sqrt(-x))


def build_ghe(params: PotentialParams, eps: float) -> GhePolys:
    """Coefficient polynomials of the reduced equation at energy eps."""
    c = params.v0 * math.cosh(params.mu) ** 2
    t = math.tanh(params.mu)
    return GhePolys(
        tau_tilde=(0.0, -2.0),
        sigma=(1.0, 0.0, -1.0),
        sigma_tilde=(eps - c * t * t, 2.0 * c * t, -c),
    )


def solve_pi_branches(params: PotentialParams, eps: float) -> list[PiBranch]:
    """All four (pi_j, k_j, lam_j) branches at energy eps.

    kappa_pm = sqrt(v_pm - eps) on the principal branch, so the same
    expressions cover the bound region and both continuum regions.
    """
    kp = _csqrt(params.v_plus - eps)
    km = _csqrt(params.v_minus - eps)
    a1 = (kp - km) / 2.0
    b1 = (kp + km) / 2.0
    half = (eps + params.v0) / 2.0
    k1 = half - kp * km / 2.0
    k3 = half + kp * km / 2.0
    branches = [
        PiBranch(1, a1, b1, k1, k1 - b1),
        PiBranch(2, -a1, -b1, k1, k1 + b1),
        PiBranch(3, b1, a1, k3, k3 - a1),
        PiBranch(4, -b1, -a1, k3, k3 + a1),
    ]
    return branches


def branch_residual(params: PotentialParams, eps: float, branch: PiBranch) -> float:
    """Max coefficient residual of pi^2 + (tau_t - sigma')pi + sigma_t - k sigma.

    tau_t = sigma' here, so the middle term vanishes identically.
    """
    g = build_ghe(params, eps)
    a, b, k = branch.a, branch.b, branch.k
    r0 = a * a + g.sigma_tilde[0] - k * g.sigma[0]
    r1 = -2.0 * a * b + g.sigma_tilde[1] - k * g.sigma[1]
    r2 = b * b + g.sigma_tilde[2] - k * g.sigma[2]
    return max(abs(r0), abs(r1), abs(r2))


def tau_selects(branch: PiBranch) -> bool:
    """Bound-state pointer criterion: tau has a root inside (-1,1) and
    tau' < 0 (applied to the real parts; in the bound region all branch
    coefficients are real)."""
    c0, c1 = branch.tau()
    slope = c1.real
    if slope >= 0.0:
        return False
    root = -c0.real / c1.real
    return -1.0 < root < 1.0


def weight_admissible(branch: PiBranch) -> bool:
    """Whether the Pearson weight rho = phi^2 of the branch is bounded with
    vanishing boundary terms, i.e. both phi exponents have positive real
    part. This is the selection the bound-state theorem actually needs and
    it singles out branch 1."""
    em, ep = branch.phi_exponents()
    return em.real > 0.0 and ep.real > 0.0


def phi_multiplier(params: PotentialParams, eps: float, u: float) -> complex:
    """phi(u) = (1-u)^{kappa_-/2} (1+u)^{kappa_+/2} for u in (-1, 1)."""
    if not -1.0 < u < 1.0:
        raise DomainError(f"phi multiplier requires u in (-1,1), got {u}")
    kp = _csqrt(params.v_plus - eps)
    km = _csqrt(params.v_minus - eps)
    return cmath.exp(0.5 * km * math.log(1.0 - u) + 0.5 * kp * math.log(1.0 + u))
