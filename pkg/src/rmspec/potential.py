"""Potential definition and derived constants.

v(z) = v0 cosh^2(mu) (tanh z + tanh mu)^2, an asymmetric well between the
asymptotes v_minus = v0 e^{-2 mu} (z -> -inf) and v_plus = v0 e^{2 mu}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class PotentialParams:
    """Well amplitude v0 > 0 and asymmetry mu >= 0 (mu = 0 is the symmetric
    v0 tanh^2 z case)."""

    v0: float
    mu: float = 0.0

    def __post_init__(self):
        if not self.v0 > 0:
            raise DomainError(f"v0 must be positive, got {self.v0}")
        if self.mu < 0:
            raise DomainError(f"mu must be non-negative, got {self.mu}")

    @property
    def v_minus(self) -> float:
        return self.v0 * math.exp(-2.0 * self.mu)

    @property
    def v_plus(self) -> float:
        return self.v0 * math.exp(2.0 * self.mu)

    @property
    def v_c(self) -> float:
        """Critical amplitude: bound states exist iff v0 > v_c."""
        return math.exp(2.0 * self.mu) * math.tanh(self.mu)

    @property
    def depth_root(self) -> float:
        """sqrt(v0 cosh^2 mu + 1/4); sets the Jacobi index ladder."""
        return math.sqrt(self.v0 * math.cosh(self.mu) ** 2 + 0.25)

    @property
    def n_cap(self) -> float:
        """Bound-state count bound: indices n with n < n_cap are admissible."""
        return (self.depth_root
                - math.sqrt(0.5 * self.v0 * math.sinh(2.0 * self.mu)) - 0.5)

    @property
    def transition_k(self) -> float:
        """Momentum sqrt(v_plus - v_minus) where the continuum multiplicity
        changes from one to two."""
        return math.sqrt(max(self.v_plus - self.v_minus, 0.0))

    def v(self, z):
        """Potential value; accepts scalar or ndarray z."""
        t = np.tanh(z)
        return self.v0 * math.cosh(self.mu) ** 2 * (t + math.tanh(self.mu)) ** 2
