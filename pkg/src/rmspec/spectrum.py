"""Core spectral engine for the asymmetric well.

Covers energy-region classification, the discrete spectrum with
normalized eigenfunctions, bounded continuum eigenfunctions in both
unbound regions, the threshold states at the two asymptote energies,
Jost solutions with the transmission coefficient, and the completeness
expansion over the full eigenbasis.

Eigenfunction conventions
-------------------------
Bound states:  psi_n(z) = N_n e^{-a_n z} sech^{b_n} z P_n^{(b_n-a_n, b_n+a_n)}(-tanh z)
First unbound: psi_1(z) = e^{-a z} sech^{b} z F(alpha, beta; gamma; s),
               s = (1 - tanh z)/2
Second unbound (free region): psi_2 normalized so psi_1 = conj(psi_2)
               pointwise, i.e. 2^{a-b} e^{b z} cosh^a z
               F(alpha-gamma+1, beta-gamma+1; 2-gamma; s).
Jost pair:     f1 -> e^{-ikz} (z -> -inf), f2 -> e^{i k1 z} (z -> +inf)
               with k = sqrt(eps - v_minus), k1 = sqrt(eps - v_plus).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernel, specfun
from .errors import (
    DomainError,
    GridError,
    SecondSolutionUndefinedError,
    TransitionPointError,
)
from .potential import PotentialParams

EQ_RTOL = 1e-12          # eps == v_{+/-} detection, relative
VMINUS_INT_TOL = 1e-10   # N(mu, v0) integrality window
TRANSITION_TOL = 1e-8    # forbidden |k - transition_k| window
COUNT_GUARD = 1e-12      # strictness guard in n < N


class Region(Enum):
    ZERO_STATE = "zero"
    BOUND = "bound"
    SPECIAL_V_MINUS = "v_minus"
    REFLECTING = "reflecting"
    SPECIAL_V_PLUS = "v_plus"
    FREE = "free"


@dataclass(frozen=True)
class BoundState:
    """Discrete eigenstate: psi decays like e^{-(b+a)z} to the right and
    e^{(b-a)z} to the left; eps = v_minus - (b-a)^2."""

    n: int
    a: float
    b: float
    eps: float
    norm: float


@dataclass(frozen=True)
class ContinuumParams:
    eps: float
    region: Region
    kappa_plus: complex
    kappa_minus: complex
    a: complex
    b: complex
    k_coef: complex
    alpha: complex
    beta: complex
    gamma: complex


@dataclass(frozen=True)
class JostAssembly:
    k: float
    k1: complex
    eps: float
    gamma1: complex
    gamma2: complex
    gamma1_primed: complex
    gamma2_primed: complex
    c_k: complex


@dataclass(frozen=True)
class SpecialState:
    """Threshold eigenfunction at eps = v_minus or v_plus (unnormalized)."""

    eps: float
    region: Region
    degree: int | None
    _params: PotentialParams

    def __call__(self, z):
        if self.region is Region.SPECIAL_V_MINUS:
            a = 0.5 * self._params.transition_k
            zz = np.asarray(z, dtype=np.float64)
            val = np.exp(a * (_log_sech(zz) - zz)) * kernel.jacobi_grid(
                self.degree, 0.0, 2.0 * a, -np.tanh(zz))
            return val if np.ndim(z) else float(np.asarray(val).reshape(-1)[0])
        return eval_unbound(self._params, self.eps, 1, z)


# ---------------------------------------------------------------------------
# stable building blocks
# ---------------------------------------------------------------------------

def _csqrt(x: float) -> complex:
    if x >= 0.0:
        return complex(math.sqrt(x), 0.0)
    return complex(0.0, math.sqrt(-x))


def _log_sech(z: np.ndarray) -> np.ndarray:
    az = np.abs(z)
    return math.log(2.0) - az - np.log1p(np.exp(-2.0 * az))


def _log_s(z: np.ndarray) -> np.ndarray:
    """log s with s = (1 - tanh z)/2 = 1/(1 + e^{2z}), overflow-safe."""
    return np.where(z <= 0,
                    -np.log1p(np.exp(2.0 * np.minimum(z, 0.0))),
                    -2.0 * z - np.log1p(np.exp(-2.0 * np.maximum(z, 0.0))))


def _log_1ms(z: np.ndarray) -> np.ndarray:
    """log(1-s) = log(1/(1 + e^{-2z})), overflow-safe."""
    return np.where(z >= 0,
                    -np.log1p(np.exp(-2.0 * np.maximum(z, 0.0))),
                    2.0 * z - np.log1p(np.exp(2.0 * np.minimum(z, 0.0))))


def _maybe_scalar(value: np.ndarray, z) -> np.ndarray | complex | float:
    if np.ndim(z) == 0:
        v = value[()] if value.ndim == 0 else value.reshape(-1)[0]
        return complex(v) if np.iscomplexobj(value) else float(v)
    return value


# ---------------------------------------------------------------------------
# classification and discrete spectrum
# ---------------------------------------------------------------------------

def classify(params: PotentialParams, eps: float) -> Region:
    """Energy-region tag for eps >= 0; equality with the asymptote values
    is detected within 1e-12 relative tolerance."""
    if eps < 0.0:
        raise DomainError(f"energy must be non-negative, got {eps}")
    vm, vp = params.v_minus, params.v_plus
    if eps <= vm * 1e-15:
        return Region.ZERO_STATE
    if abs(eps - vm) <= EQ_RTOL * vm:
        return Region.SPECIAL_V_MINUS
    if abs(eps - vp) <= EQ_RTOL * vp:
        return Region.SPECIAL_V_PLUS
    if eps < vm:
        return Region.BOUND
    if eps < vp:
        return Region.REFLECTING
    return Region.FREE


def bound_states(params: PotentialParams) -> list[BoundState]:
    """All discrete eigenstates (possibly none), indexed n = 0, 1, ...

    b_n = sqrt(v0 cosh^2 mu + 1/4) - (n + 1/2), a_n b_n = v0 sinh(2mu)/2,
    eps_n = v_minus - (b_n - a_n)^2, and n runs while n < N(mu, v0).
    """
    cap = params.n_cap
    prod = 0.5 * params.v0 * math.sinh(2.0 * params.mu)
    states = []
    n = 0
    while n < cap - COUNT_GUARD:
        b = params.depth_root - (n + 0.5)
        a = prod / b
        eps = params.v_minus - (b - a) ** 2
        states.append(BoundState(n, a, b, eps, _norm_closed_form(n, a, b)))
        n += 1
    return states


def _norm_closed_form(n: int, a: float, b: float) -> float:
    """Normalization constant from the Beta-function sum.

    The squared polynomial is expanded through linearization coefficients
    c_{l,n} = (n+2b+1)_l (-b-a-n)_{n-l} / (l! (n-l)!); each power then
    integrates to a Beta function.
    """
    if n == 0:
        total = specfun.beta(b - a, b + a)
    else:
        c = np.empty(n + 1)
        for ell in range(n + 1):
            c[ell] = (specfun.pochhammer(n + 2.0 * b + 1.0, ell).real
                      * specfun.pochhammer(-b - a - n, n - ell).real
                      / (math.factorial(ell) * math.factorial(n - ell)))
        total = 0.0
        for kk in range(2 * n + 1):
            pi_k = sum(c[ell] * c[kk - ell]
                       for ell in range(max(0, kk - n), min(n, kk) + 1))
            total += pi_k * specfun.beta(b - a, b + a + kk)
    return math.sqrt(2.0 ** (1.0 - 2.0 * b) / total)


def normalize_bound(params: PotentialParams, state: BoundState) -> float:
    """Normalization constant N_n of a bound state (closed form)."""
    if state.b <= 0 or state.b - state.a <= 0:
        raise DomainError("not a valid bound state")
    return _norm_closed_form(state.n, state.a, state.b)


def eval_bound(params: PotentialParams, state: BoundState, z):
    """Normalized bound eigenfunction at z (scalar or ndarray)."""
    zz = np.asarray(z, dtype=np.float64)
    expo = -state.a * zz + state.b * _log_sech(zz)
    poly = kernel.jacobi_grid(state.n, state.b - state.a, state.b + state.a,
                              -np.tanh(zz))
    return _maybe_scalar(state.norm * np.exp(expo) * poly, z)


# ---------------------------------------------------------------------------
# continuum
# ---------------------------------------------------------------------------

def continuum_params(params: PotentialParams, eps: float) -> ContinuumParams:
    """Hypergeometric data at energy eps >= v_minus.

    Energies within tolerance of v_minus / v_plus are snapped exactly onto
    the asymptote so the special values (gamma = 1 at v_plus, terminating
    indices at v_minus) are hit exactly.
    """
    region = classify(params, eps)
    if region in (Region.ZERO_STATE, Region.BOUND):
        raise DomainError(
            f"eps={eps} is below the continuum threshold v_minus={params.v_minus}")
    if region is Region.SPECIAL_V_MINUS:
        eps = params.v_minus
    elif region is Region.SPECIAL_V_PLUS:
        eps = params.v_plus
    kp = _csqrt(params.v_plus - eps)
    km = _csqrt(params.v_minus - eps)
    a = (kp - km) / 2.0
    b = (kp + km) / 2.0
    k_coef = (eps + params.v0) / 2.0 - kp * km / 2.0
    b0 = params.depth_root
    return ContinuumParams(eps=eps, region=region, kappa_plus=kp,
                           kappa_minus=km, a=a, b=b, k_coef=k_coef,
                           alpha=b + 0.5 - b0, beta=b + 0.5 + b0,
                           gamma=a + b + 1.0)


def _psi1_grid(cp: ContinuumParams, zz: np.ndarray) -> np.ndarray:
    s = np.exp(_log_s(zz))
    w = np.exp(_log_1ms(zz))
    pref = np.exp(-cp.a * zz + cp.b * _log_sech(zz))
    return pref * kernel.hyp2f1_grid(cp.alpha, cp.beta, cp.gamma, s, w)


def _psi2_grid(cp: ContinuumParams, zz: np.ndarray) -> np.ndarray:
    s = np.exp(_log_s(zz))
    w = np.exp(_log_1ms(zz))
    pref = np.exp((cp.a - cp.b) * math.log(2.0)
                  + cp.b * zz - cp.a * _log_sech(zz))
    return pref * kernel.hyp2f1_grid(cp.alpha - cp.gamma + 1.0,
                                     cp.beta - cp.gamma + 1.0,
                                     2.0 - cp.gamma, s, w)


def eval_unbound(params: PotentialParams, eps: float, which: int, z):
    """Bounded continuum eigenfunction psi_1 (which=1) or the second
    solution psi_2 (which=2) at energy eps > v_minus.

    psi_2 is normalized so that psi_1 = conj(psi_2) pointwise in the free
    region; it is undefined at energies where 2-gamma is a non-positive
    integer.
    """
    cp = continuum_params(params, eps)
    zz = np.atleast_1d(np.asarray(z, dtype=np.float64))
    if which == 1:
        out = _psi1_grid(cp, zz)
    elif which == 2:
        if kernel.nonpos_int_distance(2.0 - cp.gamma) < 1e-10:
            raise SecondSolutionUndefinedError(
                f"2-gamma={2.0 - cp.gamma} is a non-positive integer at eps={eps}")
        out = _psi2_grid(cp, zz)
    else:
        raise DomainError("which must be 1 or 2")
    return _maybe_scalar(out, z)


def special_state_vminus(params: PotentialParams) -> SpecialState | None:
    """Threshold state at eps = v_minus, present iff N(mu, v0) is a
    non-negative integer l; then psi is proportional to
    e^{-a z} sech^a z P_l^{(0, 2a)}(-tanh z) with a = sqrt(v_plus-v_minus)/2."""
    cap = params.n_cap
    ell = round(cap)
    if ell < 0 or abs(cap - ell) > VMINUS_INT_TOL:
        return None
    return SpecialState(eps=params.v_minus, region=Region.SPECIAL_V_MINUS,
                        degree=ell, _params=params)


def special_state_vplus(params: PotentialParams) -> SpecialState:
    """Threshold state at eps = v_plus (gamma = 1), always bounded for
    mu > 0."""
    return SpecialState(eps=params.v_plus, region=Region.SPECIAL_V_PLUS,
                        degree=None, _params=params)


# ---------------------------------------------------------------------------
# Jost functions, transmission coefficient, spectral eigenfunctions
# ---------------------------------------------------------------------------

def _gamma_pair(alpha: complex, beta: complex, gam: complex) -> tuple[complex, complex]:
    g1 = (kernel.gamma(gam) * kernel.gamma(gam - alpha - beta)
          * kernel.recip_gamma(gam - alpha) * kernel.recip_gamma(gam - beta))
    g2 = (kernel.gamma(gam) * kernel.gamma(alpha + beta - gam)
          * kernel.recip_gamma(alpha) * kernel.recip_gamma(beta))
    return g1, g2


def jost_f1(params: PotentialParams, k: float, z):
    """Left Jost solution: f1 = e^{-ikz} + o(1) as z -> -inf."""
    cp = continuum_params(params, k * k + params.v_minus)
    zz = np.atleast_1d(np.asarray(z, dtype=np.float64))
    d = cp.gamma - cp.alpha - cp.beta  # = a - b = -ik
    expo = (-cp.a * zz + cp.b * _log_sech(zz) - cp.b * math.log(2.0)
            + d * _log_1ms(zz))
    w = np.exp(_log_1ms(zz))
    s = np.exp(_log_s(zz))
    f = kernel.hyp2f1_grid(cp.gamma - cp.alpha, cp.gamma - cp.beta, d + 1.0, w, s)
    return _maybe_scalar(np.exp(expo) * f, z)


def jost_f2(params: PotentialParams, k: float, z):
    """Right Jost solution: f2 = e^{i k1 z} + o(1) as z -> +inf."""
    cp = continuum_params(params, k * k + params.v_minus)
    zz = np.atleast_1d(np.asarray(z, dtype=np.float64))
    if k < params.transition_k:
        out = 2.0 ** (-cp.b) * _psi1_grid(cp, zz)
    else:
        s = np.exp(_log_s(zz))
        w = np.exp(_log_1ms(zz))
        expo = cp.a * math.log(2.0) + cp.b * zz - cp.a * _log_sech(zz)
        out = np.exp(expo) * kernel.hyp2f1_grid(cp.alpha - cp.gamma + 1.0,
                                                cp.beta - cp.gamma + 1.0,
                                                2.0 - cp.gamma, s, w)
    return _maybe_scalar(out, z)


_D1_STENCIL = ((1, 4.0 / 5.0), (2, -1.0 / 5.0), (3, 4.0 / 105.0), (4, -1.0 / 280.0))


def wronskian_c(params: PotentialParams, k: float, z0: float = 0.0) -> complex:
    """Transmission coefficient c(k) = W[f1, f2]/(2ik) with the Wronskian
    evaluated at z0 by 8th-order central differences."""
    h = 0.02 / max(1.0, k)
    offsets = np.array([z0 + j * h for j, _ in _D1_STENCIL]
                       + [z0 - j * h for j, _ in _D1_STENCIL] + [z0])
    f1v = jost_f1(params, k, offsets)
    f2v = jost_f2(params, k, offsets)
    d1 = sum(wj * (f1v[i] - f1v[i + 4]) for i, (j, wj) in enumerate(_D1_STENCIL)) / h
    d2 = sum(wj * (f2v[i] - f2v[i + 4]) for i, (j, wj) in enumerate(_D1_STENCIL)) / h
    w = f1v[8] * d2 - d1 * f2v[8]
    return w / (2.0j * k)


def jost(params: PotentialParams, k: float, z_ref: float = 0.0) -> JostAssembly:
    """Jost data at momentum k > 0 (k != transition momentum)."""
    if k <= 0.0:
        raise DomainError(f"momentum must be positive, got {k}")
    if abs(k - params.transition_k) < TRANSITION_TOL:
        raise TransitionPointError(
            f"k={k} too close to the multiplicity transition {params.transition_k}")
    eps = k * k + params.v_minus
    cp = continuum_params(params, eps)
    g1, g2 = _gamma_pair(cp.alpha, cp.beta, cp.gamma)
    g1p, g2p = _gamma_pair(cp.alpha - cp.gamma + 1.0, cp.beta - cp.gamma + 1.0,
                           2.0 - cp.gamma)
    return JostAssembly(k=k, k1=_csqrt(eps - params.v_plus), eps=eps,
                        gamma1=g1, gamma2=g2, gamma1_primed=g1p,
                        gamma2_primed=g2p,
                        c_k=wronskian_c(params, k, z_ref))


def continuum_eigenfunctions(params: PotentialParams, k: float, z,
                             assembly: JostAssembly | None = None) -> list:
    """Spectrally normalized eigenfunctions at momentum k: [u0] below the
    transition momentum (multiplicity one), [u1, u2] above it.

    The left-incident channel carries sqrt(k1/k)/c(k); the square root of
    the velocity ratio is what makes (1/2pi) int u1* u1 dz = delta(k-m)
    hold alongside the right-incident channel (checked numerically by
    synthesizing wave packets of known density).
    """
    ja = assembly if assembly is not None else jost(params, k)
    c = ja.c_k
    if k < params.transition_k:
        return [jost_f2(params, k, z) / c]
    u1 = (np.sqrt(ja.k1.real / k) / c) * np.asarray(jost_f1(params, k, z))
    u2 = np.asarray(jost_f2(params, k, z)) / c
    return [_maybe_scalar(np.atleast_1d(u1), z), _maybe_scalar(np.atleast_1d(u2), z)]


# ---------------------------------------------------------------------------
# completeness expansion
# ---------------------------------------------------------------------------

@dataclass
class ExpansionResult:
    bound_coeffs: np.ndarray
    k_single: np.ndarray
    coeff_u0: np.ndarray
    k_double: np.ndarray
    coeff_u1: np.ndarray
    coeff_u2: np.ndarray
    reconstruction: np.ndarray
    rel_l2_error: float

    @property
    def max_continuum_coeff(self) -> float:
        mags = [np.abs(c).max(initial=0.0)
                for c in (self.coeff_u0, self.coeff_u1, self.coeff_u2)]
        return max(mags)


def _simpson_weights(n: int, h: float) -> np.ndarray:
    w = np.zeros(n)
    if n < 2:
        raise GridError("need at least two samples")
    m = n if n % 2 == 1 else n - 1
    w[0:m:2] += 2.0
    w[1:m:2] += 4.0
    w[0] -= 1.0
    w[m - 1] -= 1.0
    w[:m] *= h / 3.0
    if m != n:  # trapezoid patch on the last interval
        w[-2] += h / 2.0
        w[-1] += h / 2.0
    return w


def _trapezoid_weights(k: np.ndarray, fallback_step: float) -> np.ndarray:
    if k.size == 1:
        return np.array([fallback_step])
    w = np.empty(k.size)
    w[1:-1] = (k[2:] - k[:-2]) / 2.0
    w[0] = (k[1] - k[0]) / 2.0
    w[-1] = (k[-1] - k[-2]) / 2.0
    return w


def expand(params: PotentialParams, z: np.ndarray, phi: np.ndarray,
           kgrid: np.ndarray) -> ExpansionResult:
    """Expand a sampled square-integrable function over the eigenbasis and
    reconstruct it.

    Coefficients are quadratures over the supplied uniform z grid; the
    continuum is resummed with the 1/(2 pi) dk measure. Returns the
    coefficients, the reconstruction on the same grid and the relative L2
    error.
    """
    z = np.asarray(z, dtype=np.float64)
    phi = np.asarray(phi)
    kgrid = np.asarray(kgrid, dtype=np.float64)
    if z.ndim != 1 or z.size < 8 or phi.shape != z.shape:
        raise GridError("z and phi must be matching 1-D arrays")
    dz = np.diff(z)
    if dz.min() <= 0 or (dz.max() - dz.min()) > 1e-9 * dz.mean():
        raise GridError("z grid must be uniform and increasing")
    if kgrid.size and kgrid.min() <= 0.0:
        raise GridError("kgrid must be strictly positive")
    kap = params.transition_k
    if kgrid.size and np.abs(kgrid - kap).min() < TRANSITION_TOL:
        raise GridError("kgrid contains the multiplicity-transition momentum")

    wz = _simpson_weights(z.size, float(dz.mean()))
    recon = np.zeros(z.size, dtype=np.complex128)

    states = bound_states(params)
    bound_coeffs = np.empty(len(states), dtype=np.complex128)
    for i, st in enumerate(states):
        psi = eval_bound(params, st, z)
        c_n = np.sum(wz * psi * phi)
        bound_coeffs[i] = c_n
        recon += c_n * psi

    k_single = kgrid[kgrid < kap]
    k_double = kgrid[kgrid > kap]
    coeff_u0 = np.zeros(k_single.size, dtype=np.complex128)
    coeff_u1 = np.zeros(k_double.size, dtype=np.complex128)
    coeff_u2 = np.zeros(k_double.size, dtype=np.complex128)

    kstep = float(np.median(np.diff(kgrid))) if kgrid.size > 1 else 1.0
    wk0 = _trapezoid_weights(k_single, kstep) if k_single.size else np.empty(0)
    for i, k in enumerate(k_single):
        (u0,) = continuum_eigenfunctions(params, float(k), z)
        c0 = np.sum(wz * np.conj(u0) * phi)
        coeff_u0[i] = c0
        recon += (wk0[i] / (2.0 * math.pi)) * c0 * u0

    wk1 = _trapezoid_weights(k_double, kstep) if k_double.size else np.empty(0)
    for i, k in enumerate(k_double):
        u1, u2 = continuum_eigenfunctions(params, float(k), z)
        c1 = np.sum(wz * np.conj(u1) * phi)
        c2 = np.sum(wz * np.conj(u2) * phi)
        coeff_u1[i] = c1
        coeff_u2[i] = c2
        recon += (wk1[i] / (2.0 * math.pi)) * (c1 * u1 + c2 * u2)

    norm = math.sqrt(float(np.sum(wz * np.abs(phi) ** 2)))
    if norm == 0.0:
        err = float(np.sqrt(np.sum(wz * np.abs(recon) ** 2)))
    else:
        err = float(np.sqrt(np.sum(wz * np.abs(phi - recon) ** 2))) / norm
    return ExpansionResult(bound_coeffs=bound_coeffs, k_single=k_single,
                           coeff_u0=coeff_u0, k_double=k_double,
                           coeff_u1=coeff_u1, coeff_u2=coeff_u2,
                           reconstruction=recon, rel_l2_error=err)
