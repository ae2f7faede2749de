"""Pure-Python/numpy kernel: complex gamma and digamma, Gauss 2F1 with
complex parameters and real argument in [0,1), Jacobi polynomials, and
Sturm-sequence counts for symmetric tridiagonal matrices.

This module mirrors the API of the compiled kernel ``_kernel_cy``; the
active backend is chosen in :mod:`rmspec.kernel`. Grid entry points are
vectorized with numpy so the fallback stays usable on large grids.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import NoConvergenceError

BACKEND = "python"

_EPS = 5e-16
_MAX_TERMS = 4096
_INT_TOL = 1e-8          # window for treating c-a-b as an integer
_TERMINATE_TOL = 1e-12   # window for treating a parameter as a non-positive integer

# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_TWO_PI = 2.5066282746310002
_EULER_GAMMA = 0.5772156649015328606

# Asymptotic digamma series: -B_{2n}/(2n) for z^{-2n}.
_DIGAMMA_ASY = (
    -1.0 / 12.0,
    1.0 / 120.0,
    -1.0 / 252.0,
    1.0 / 240.0,
    -1.0 / 132.0,
    691.0 / 32760.0,
    -1.0 / 12.0,
)


def gamma(z: complex) -> complex:
    """Gamma function for complex argument (Lanczos + reflection)."""
    z = complex(z)
    if z.real < 0.5:
        s = cmath.sin(cmath.pi * z)
        if s == 0:
            return complex(math.inf, 0.0)
        return cmath.pi / (s * gamma(1.0 - z))
    z -= 1.0
    x = complex(_LANCZOS[0])
    for i in range(1, 9):
        x += _LANCZOS[i] / (z + i)
    t = z + 7.5
    return _SQRT_TWO_PI * t ** (z + 0.5) * cmath.exp(-t) * x


def nonpos_int_distance(z: complex) -> float:
    """Distance from z to the nearest non-positive integer."""
    n = round(z.real)
    if n > 0:
        n = 0
    return abs(z - n)


def recip_gamma(z: complex) -> complex:
    """1/Gamma(z); returns 0 at (numerical) poles."""
    if nonpos_int_distance(complex(z)) < 1e-14:
        return 0.0 + 0.0j
    return 1.0 / gamma(z)


def digamma(z: complex) -> complex:
    """Digamma for complex argument via reflection, recurrence and the
    asymptotic series."""
    z = complex(z)
    if z.real < 0.5:
        return digamma(1.0 - z) - cmath.pi / cmath.tan(cmath.pi * z)
    acc = 0.0 + 0.0j
    while z.real < 9.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    tail = 0.0 + 0.0j
    p = inv2
    for c in _DIGAMMA_ASY:
        tail += c * p
        p *= inv2
    return acc + cmath.log(z) - 0.5 / z + tail


def _terminating_degree(a: complex) -> int | None:
    """Degree if `a` is (within tolerance) a non-positive integer, else None."""
    if abs(a.imag) > _TERMINATE_TOL:
        return None
    n = round(a.real)
    if n > 0 or abs(a.real - n) > _TERMINATE_TOL:
        return None
    return -n


def _near_int(z: complex) -> int | None:
    if abs(z.imag) > _INT_TOL:
        return None
    n = round(z.real)
    if abs(z.real - n) > _INT_TOL:
        return None
    return n


# ---------------------------------------------------------------------------
# scalar 2F1
# ---------------------------------------------------------------------------

def _series(a, b, c, s, nmax=None):
    """Direct power series; `nmax` forces a terminating cut."""
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    limit = _MAX_TERMS if nmax is None else nmax
    small = 0
    for n in range(limit):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * s
        total += term
        if nmax is None:
            small = small + 1 if abs(term) <= _EPS * (abs(total) + 1e-300) else 0
            if small >= 2:
                return total
    if nmax is not None:
        return total
    raise NoConvergenceError(
        f"2F1 series did not converge in {_MAX_TERMS} terms (s={s})")


def _log_series(a, b, c, w, m):
    """Limit form of the s -> 1-s connection when c - a - b = m >= 0;
    `w` is the (stably computed) complement 1-s."""
    lnw = math.log(w)
    head = 0.0 + 0.0j
    if m > 0:
        coef = 1.0 + 0.0j
        for j in range(m):
            head += coef
            if j < m - 1:
                coef *= (a + j) * (b + j) / ((j + 1.0) * (j + 1.0 - m)) * w
        head *= gamma(m) * gamma(c) * recip_gamma(a + m) * recip_gamma(b + m)
    # series term T_j = (a+m)_j (b+m)_j / (j! (j+m)!) w^j, bracket updated
    # incrementally from digamma recurrences
    t = recip_gamma(m + 1.0)  # 1/m!
    psi1 = -_EULER_GAMMA
    psi2 = digamma(m + 1.0)
    psia = digamma(a + m)
    psib = digamma(b + m)
    total = 0.0 + 0.0j
    wj = 1.0
    for j in range(_MAX_TERMS):
        bracket = lnw - psi1 - psi2 + psia + psib
        total += t * wj * bracket
        scale = abs(t) * wj * (abs(lnw) + abs(psi1 + psi2 - psia - psib))
        if j > 2 and scale <= _EPS * (abs(total) + 1e-300):
            break
        t *= (a + m + j) * (b + m + j) / ((j + 1.0) * (j + m + 1.0))
        wj *= w
        psi1 += 1.0 / (j + 1.0)
        psi2 += 1.0 / (j + m + 1.0)
        psia += 1.0 / (a + m + j)
        psib += 1.0 / (b + m + j)
    else:
        raise NoConvergenceError("2F1 logarithmic series did not converge")
    sign = -1.0 if m % 2 else 1.0
    total *= sign * gamma(c) * recip_gamma(a) * recip_gamma(b) * w ** m
    return head - total


def hyp2f1(a: complex, b: complex, c: complex, s: float,
           one_minus_s: float | None = None) -> complex:
    """Gauss 2F1 with complex parameters and real s in [0, 1].

    Uses the direct series for s <= 1/2 and the s -> 1-s connection
    formulas beyond, including the logarithmic limit when c-a-b is an
    integer. Terminating series are summed exactly. Callers that know
    1-s to full precision (s close to 1) should pass it as
    `one_minus_s`; otherwise it is recomputed from s.
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    s = float(s)
    w = (1.0 - s) if one_minus_s is None else float(one_minus_s)
    if s == 0.0:
        return 1.0 + 0.0j
    degs = [d for d in (_terminating_degree(a), _terminating_degree(b))
            if d is not None]
    if degs:
        return _series(a, b, c, s, nmax=min(degs))
    if s <= 0.5:
        return _series(a, b, c, s)
    d = c - a - b
    m = _near_int(d)
    if m is None:
        c1 = gamma(c) * gamma(d) * recip_gamma(c - a) * recip_gamma(c - b)
        c2 = gamma(c) * gamma(-d) * recip_gamma(a) * recip_gamma(b)
        return (c1 * _series(a, b, 1.0 - d, w)
                + c2 * cmath.exp(d * math.log(w)) * _series(c - a, c - b, 1.0 + d, w))
    if m >= 0:
        return _log_series(a, b, c, w, m)
    # c-a-b a negative integer: Euler transformation flips its sign
    return cmath.exp(d * math.log(w)) * hyp2f1(c - a, c - b, c, s, w)


# ---------------------------------------------------------------------------
# vectorized 2F1 over a grid of s values (shared parameters)
# ---------------------------------------------------------------------------

def _series_grid(a, b, c, s, nmax=None):
    total = np.ones(s.shape, dtype=np.complex128)
    term = np.ones(s.shape, dtype=np.complex128)
    limit = _MAX_TERMS if nmax is None else nmax
    small = 0
    for n in range(limit):
        term *= ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * s
        total += term
        if nmax is None:
            if np.all(np.abs(term) <= _EPS * (np.abs(total) + 1e-300)):
                small += 1
                if small >= 2:
                    return total
            else:
                small = 0
    if nmax is not None:
        return total
    raise NoConvergenceError(
        f"2F1 series did not converge in {_MAX_TERMS} terms (max s={s.max()})")


def _log_series_grid(a, b, c, w, m):
    lnw = np.log(w)
    head = np.zeros(w.shape, dtype=np.complex128)
    if m > 0:
        coef = 1.0 + 0.0j
        wj = np.ones(w.shape, dtype=np.complex128)
        for j in range(m):
            head += coef * wj
            if j < m - 1:
                coef *= (a + j) * (b + j) / ((j + 1.0) * (j + 1.0 - m))
                wj *= w
        head *= gamma(m) * gamma(c) * recip_gamma(a + m) * recip_gamma(b + m)
    t = recip_gamma(m + 1.0)
    psi1 = -_EULER_GAMMA
    psi2 = digamma(m + 1.0)
    psia = digamma(a + m)
    psib = digamma(b + m)
    log_sum = np.zeros(w.shape, dtype=np.complex128)   # multiplies ln w
    const_sum = np.zeros(w.shape, dtype=np.complex128)
    wj = np.ones(w.shape, dtype=np.float64)
    for j in range(_MAX_TERMS):
        cj = psi1 + psi2 - psia - psib
        log_sum += t * wj
        const_sum += (t * cj) * wj
        scale = np.abs(t * wj) * (np.abs(lnw) + abs(cj))
        if j > 2 and np.all(scale <= _EPS * (np.abs(log_sum * lnw - const_sum) + 1e-300)):
            break
        t *= (a + m + j) * (b + m + j) / ((j + 1.0) * (j + m + 1.0))
        wj *= w
        psi1 += 1.0 / (j + 1.0)
        psi2 += 1.0 / (j + m + 1.0)
        psia += 1.0 / (a + m + j)
        psib += 1.0 / (b + m + j)
    else:
        raise NoConvergenceError("2F1 logarithmic series did not converge")
    sign = -1.0 if m % 2 else 1.0
    total = (log_sum * lnw - const_sum)
    total *= sign * gamma(c) * recip_gamma(a) * recip_gamma(b) * np.exp(m * np.log(w))
    return head - total


def hyp2f1_grid(a: complex, b: complex, c: complex, s: np.ndarray,
                one_minus_s: np.ndarray | None = None) -> np.ndarray:
    """2F1 with fixed complex parameters over an array of real s in [0,1].

    `one_minus_s`, when given, supplies 1-s to full precision for points
    close to 1 (see :func:`hyp2f1`).
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    s = np.asarray(s, dtype=np.float64)
    ws = (1.0 - s) if one_minus_s is None else np.asarray(one_minus_s, dtype=np.float64)
    out = np.empty(s.shape, dtype=np.complex128)
    degs = [d for d in (_terminating_degree(a), _terminating_degree(b))
            if d is not None]
    if degs:
        return _series_grid(a, b, c, s, nmax=min(degs))
    lo = s <= 0.5
    if np.any(lo):
        out[lo] = _series_grid(a, b, c, s[lo])
    hi = ~lo
    if np.any(hi):
        w = ws[hi]
        d = c - a - b
        m = _near_int(d)
        if m is None:
            c1 = gamma(c) * gamma(d) * recip_gamma(c - a) * recip_gamma(c - b)
            c2 = gamma(c) * gamma(-d) * recip_gamma(a) * recip_gamma(b)
            out[hi] = (c1 * _series_grid(a, b, 1.0 - d, w)
                       + c2 * np.exp(d * np.log(w)) * _series_grid(c - a, c - b, 1.0 + d, w))
        elif m >= 0:
            out[hi] = _log_series_grid(a, b, c, w, m)
        else:
            out[hi] = np.exp(d * np.log(w)) * hyp2f1_grid(c - a, c - b, c, s[hi], w)
    return out


# ---------------------------------------------------------------------------
# Jacobi polynomials
# ---------------------------------------------------------------------------

def jacobi_grid(n: int, alpha: float, beta: float, x) -> np.ndarray:
    """P_n^{(alpha,beta)} by the three-term recurrence, vectorized over x."""
    x = np.asarray(x, dtype=np.float64)
    p_prev = np.ones(x.shape, dtype=np.float64)
    if n == 0:
        return p_prev
    p = (alpha + 1.0) + (alpha + beta + 2.0) * 0.5 * (x - 1.0)
    for k in range(2, n + 1):
        den = 2.0 * k * (k + alpha + beta) * (2.0 * k + alpha + beta - 2.0)
        c1 = 2.0 * k + alpha + beta - 1.0
        c2 = (2.0 * k + alpha + beta) * (2.0 * k + alpha + beta - 2.0)
        c3 = alpha * alpha - beta * beta
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + alpha + beta)
        p, p_prev = (c1 * (c2 * x + c3) * p - c4 * p_prev) / den, p
    return p


def jacobi(n: int, alpha: float, beta: float, x: float) -> float:
    return float(jacobi_grid(n, alpha, beta, np.asarray([x]))[0])


# ---------------------------------------------------------------------------
# Sturm sequence count for symmetric tridiagonal matrices
# ---------------------------------------------------------------------------

def sturm_count(diag: np.ndarray, off: np.ndarray, lam: float) -> int:
    """Number of eigenvalues strictly below `lam` (LDL^T sign count)."""
    d = np.asarray(diag, dtype=np.float64)
    e = np.asarray(off, dtype=np.float64)
    n = d.shape[0]
    count = 0
    q = d[0] - lam
    if q < 0.0:
        count += 1
    tiny = 1e-300
    for i in range(1, n):
        if q == 0.0:
            q = tiny
        q = d[i] - lam - e[i - 1] * e[i - 1] / q
        if q < 0.0:
            count += 1
    return count
