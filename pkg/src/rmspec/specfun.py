"""Special-function layer: complex gamma, Euler beta, Pochhammer symbols,
Gauss 2F1 for complex parameters and real argument in [0, 1), and Jacobi
polynomials.

Pure functions, no shared state. Heavy lifting is delegated to the
selected kernel backend (see :mod:`rmspec.kernel`).
"""

from __future__ import annotations

import math

import numpy as np

from . import kernel
from .errors import DegenerateGammaError, DomainError, PoleError

POLE_TOL = 1e-12


def gamma_complex(z: complex) -> complex:
    """Gamma(z) for complex z.

    Raises PoleError when z is within 1e-12 of a non-positive integer.
    """
    z = complex(z)
    if kernel.nonpos_int_distance(z) < POLE_TOL:
        raise PoleError(f"gamma pole at z={z}")
    return kernel.gamma(z)


def beta(a: float, b: float) -> float:
    """Euler beta B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b) for a, b > 0."""
    if not (a > 0 and b > 0):
        raise DomainError(f"beta requires positive arguments, got ({a}, {b})")
    # real positive arguments: work in log space to dodge overflow
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def pochhammer(a: complex, k: int) -> complex:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise DomainError("pochhammer order must be a non-negative integer")
    out = 1.0 + 0.0j
    a = complex(a)
    for i in range(k):
        out *= a + i
    return out


def hyp2f1(alpha: complex, beta_: complex, gamma_: complex, s) -> complex | np.ndarray:
    """Gauss hypergeometric F(alpha, beta; gamma; s) for real s in [0, 1).

    The direct series is used for s <= 1/2; beyond that the s -> 1-s
    linear transformation is applied, with the logarithmic limit form
    when gamma-alpha-beta is an integer. `s` may be a scalar or an
    ndarray (one shared parameter triple).
    """
    gamma_ = complex(gamma_)
    if kernel.nonpos_int_distance(gamma_) < POLE_TOL:
        raise DegenerateGammaError(
            f"2F1 undefined: gamma={gamma_} is a non-positive integer")
    if np.ndim(s) == 0:
        sf = float(s)
        if not 0.0 <= sf < 1.0:
            raise DomainError(f"hyp2f1 requires s in [0,1), got {sf}")
        return kernel.hyp2f1(alpha, beta_, gamma_, sf)
    s = np.asarray(s, dtype=np.float64)
    if s.size and (s.min() < 0.0 or s.max() >= 1.0):
        raise DomainError("hyp2f1 requires s in [0,1)")
    return kernel.hyp2f1_grid(alpha, beta_, gamma_, s)


def jacobi_poly(n: int, alpha: float, beta_: float, x) -> float | np.ndarray:
    """Jacobi polynomial P_n^{(alpha,beta)}(x) by three-term recurrence.

    Requires alpha, beta > -1 and accepts scalar or ndarray x in [-1, 1].
    """
    if n < 0:
        raise DomainError("jacobi_poly degree must be non-negative")
    if alpha <= -1.0 or beta_ <= -1.0:
        raise DomainError(
            f"jacobi_poly requires alpha, beta > -1, got ({alpha}, {beta_})")
    if np.ndim(x) == 0:
        return kernel.jacobi(n, float(alpha), float(beta_), float(x))
    return kernel.jacobi_grid(n, float(alpha), float(beta_), np.asarray(x, dtype=np.float64))


def jacobi_norm_sq(n: int, alpha: float, beta_: float) -> float:
    """Squared L2 norm of P_n^{(alpha,beta)} under the weight
    (1-x)^alpha (1+x)^beta on [-1, 1]."""
    if alpha <= -1.0 or beta_ <= -1.0:
        raise DomainError("jacobi_norm_sq requires alpha, beta > -1")
    if n == 0:
        # (alpha+beta+1) Gamma(alpha+beta+1) folded into Gamma(alpha+beta+2),
        # which stays positive for alpha, beta > -1
        return math.exp(
            (alpha + beta_ + 1.0) * math.log(2.0)
            + math.lgamma(alpha + 1.0) + math.lgamma(beta_ + 1.0)
            - math.lgamma(alpha + beta_ + 2.0))
    return math.exp(
        (alpha + beta_ + 1.0) * math.log(2.0)
        + math.lgamma(n + alpha + 1.0) + math.lgamma(n + beta_ + 1.0)
        - math.lgamma(n + 1.0) - math.log(2.0 * n + alpha + beta_ + 1.0)
        - math.lgamma(n + alpha + beta_ + 1.0))
