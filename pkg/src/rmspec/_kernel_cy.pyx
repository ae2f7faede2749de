# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: scalar loops in C for the hot paths (complex 2F1,
Jacobi recurrence, Sturm counts). API mirrors ``_kernel_py``."""

import numpy as np

from .errors import NoConvergenceError

from libc.math cimport atan2, cos, cosh, exp, fabs, hypot, log, sin, sinh, sqrt

BACKEND = "cython"

cdef double _EPS = 5e-16
cdef int _MAX_TERMS = 4096
cdef double _INT_TOL = 1e-8
cdef double _TERMINATE_TOL = 1e-12
cdef double _SQRT_TWO_PI = 2.5066282746310002
cdef double _EULER_GAMMA = 0.5772156649015328606
cdef double _PI = 3.141592653589793238462643383279503

cdef double[9] _LANCZOS = [
    0.99999999999980993, 676.5203681218851, -1259.1392167224028,
    771.32342877765313, -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7]

cdef double[7] _DIGAMMA_ASY = [
    -1.0 / 12.0, 1.0 / 120.0, -1.0 / 252.0, 1.0 / 240.0,
    -1.0 / 132.0, 691.0 / 32760.0, -1.0 / 12.0]


cdef inline double complex c_exp(double complex z) noexcept:
    cdef double m = exp(z.real)
    return m * cos(z.imag) + 1j * (m * sin(z.imag))

cdef inline double complex c_log(double complex z) noexcept:
    return log(hypot(z.real, z.imag)) + 1j * atan2(z.imag, z.real)

cdef inline double complex c_pow(double complex base, double complex expo) noexcept:
    return c_exp(expo * c_log(base))

cdef inline double complex c_sin(double complex z) noexcept:
    return sin(z.real) * cosh(z.imag) + 1j * (cos(z.real) * sinh(z.imag))

cdef inline double complex c_cos(double complex z) noexcept:
    return cos(z.real) * cosh(z.imag) - 1j * (sin(z.real) * sinh(z.imag))

cdef inline double c_abs(double complex z) noexcept:
    return hypot(z.real, z.imag)


cdef double complex _gamma_c(double complex z) noexcept:
    cdef double complex s, x, t
    cdef int i
    if z.real < 0.5:
        s = c_sin(_PI * z)
        if s == 0:
            return 1e308  # pole; callers guard via recip/nonpos checks
        return _PI / (s * _gamma_c(1.0 - z))
    z = z - 1.0
    x = _LANCZOS[0]
    for i in range(1, 9):
        x = x + _LANCZOS[i] / (z + i)
    t = z + 7.5
    return _SQRT_TWO_PI * c_pow(t, z + 0.5) * c_exp(-t) * x


cdef double _nonpos_int_distance(double complex z) noexcept:
    cdef long r = <long> (z.real + (0.5 if z.real >= 0 else -0.5))
    if r > 0:
        r = 0
    return hypot(z.real - r, z.imag)


cdef double complex _recip_gamma_c(double complex z) noexcept:
    if _nonpos_int_distance(z) < 1e-14:
        return 0.0
    return 1.0 / _gamma_c(z)


cdef double complex _digamma_c(double complex z) noexcept:
    cdef double complex acc = 0.0, inv2, tail, p, t
    cdef int i
    if z.real < 0.5:
        t = c_sin(_PI * z) / c_cos(_PI * z)
        return _digamma_c(1.0 - z) - _PI / t
    while z.real < 9.0:
        acc = acc - 1.0 / z
        z = z + 1.0
    inv2 = 1.0 / (z * z)
    tail = 0.0
    p = inv2
    for i in range(7):
        tail = tail + _DIGAMMA_ASY[i] * p
        p = p * inv2
    return acc + c_log(z) - 0.5 / z + tail


def gamma(z):
    """Gamma function for complex argument (Lanczos + reflection)."""
    return complex(_gamma_c(complex(z)))


def digamma(z):
    return complex(_digamma_c(complex(z)))


def recip_gamma(z):
    return complex(_recip_gamma_c(complex(z)))


def nonpos_int_distance(z):
    return _nonpos_int_distance(complex(z))


cdef int _terminating_degree(double complex a) noexcept:
    """-degree-1 coding: returns degree >= 0, or -1 if not terminating."""
    cdef long n
    if fabs(a.imag) > _TERMINATE_TOL:
        return -1
    n = <long> (a.real + (0.5 if a.real >= 0 else -0.5))
    if n > 0 or fabs(a.real - n) > _TERMINATE_TOL:
        return -1
    return <int> (-n)


cdef int _near_int(double complex z, int* out) noexcept:
    cdef long n
    if fabs(z.imag) > _INT_TOL:
        return 0
    n = <long> (z.real + (0.5 if z.real >= 0 else -0.5))
    if fabs(z.real - n) > _INT_TOL:
        return 0
    out[0] = <int> n
    return 1


cdef int _series_c(double complex a, double complex b, double complex c,
                   double s, int nmax, double complex* out) noexcept:
    cdef double complex total = 1.0, term = 1.0
    cdef int n, small = 0
    cdef int limit = _MAX_TERMS if nmax < 0 else nmax
    for n in range(limit):
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * s
        total = total + term
        if nmax < 0:
            if c_abs(term) <= _EPS * (c_abs(total) + 1e-300):
                small += 1
                if small >= 2:
                    out[0] = total
                    return 0
            else:
                small = 0
    out[0] = total
    if nmax >= 0:
        return 0
    return 1  # not converged


cdef int _log_series_c(double complex a, double complex b, double complex c,
                       double w, int m, double complex* out) noexcept:
    cdef double lnw = log(w)
    cdef double complex head = 0.0, coef, t, psi1, psi2, psia, psib
    cdef double complex total = 0.0, bracket
    cdef double wj = 1.0, scale
    cdef int j
    if m > 0:
        coef = 1.0
        for j in range(m):
            head = head + coef
            if j < m - 1:
                coef = coef * (a + j) * (b + j) / ((j + 1.0) * (j + 1.0 - m)) * w
        head = head * _gamma_c(m + 0j) * _gamma_c(c) * _recip_gamma_c(a + m) * _recip_gamma_c(b + m)
    t = _recip_gamma_c(m + 1.0 + 0j)
    psi1 = -_EULER_GAMMA
    psi2 = _digamma_c(m + 1.0 + 0j)
    psia = _digamma_c(a + m)
    psib = _digamma_c(b + m)
    for j in range(_MAX_TERMS):
        bracket = lnw - psi1 - psi2 + psia + psib
        total = total + t * wj * bracket
        scale = c_abs(t) * wj * (fabs(lnw) + c_abs(psi1 + psi2 - psia - psib))
        if j > 2 and scale <= _EPS * (c_abs(total) + 1e-300):
            break
        t = t * (a + m + j) * (b + m + j) / ((j + 1.0) * (j + m + 1.0))
        wj = wj * w
        psi1 = psi1 + 1.0 / (j + 1.0)
        psi2 = psi2 + 1.0 / (j + m + 1.0)
        psia = psia + 1.0 / (a + m + j)
        psib = psib + 1.0 / (b + m + j)
    else:
        return 1
    if m % 2:
        total = -total
    total = total * _gamma_c(c) * _recip_gamma_c(a) * _recip_gamma_c(b) * exp(m * log(w))
    out[0] = head - total
    return 0


cdef int _hyp2f1_c(double complex a, double complex b, double complex c,
                   double s, double w, double complex* out) noexcept:
    """w carries 1-s to full precision (callers may know it more accurately
    than 1.0 - s evaluates)."""
    cdef int da, db, deg, m, rc
    cdef double complex d, c1, c2, f1, f2, inner
    if s == 0.0:
        out[0] = 1.0
        return 0
    da = _terminating_degree(a)
    db = _terminating_degree(b)
    if da >= 0 or db >= 0:
        deg = da if db < 0 else (db if da < 0 else (da if da < db else db))
        return _series_c(a, b, c, s, deg, out)
    if s <= 0.5:
        return _series_c(a, b, c, s, -1, out)
    d = c - a - b
    if _near_int(d, &m):
        if m >= 0:
            return _log_series_c(a, b, c, w, m, out)
        rc = _hyp2f1_c(c - a, c - b, c, s, w, &inner)
        out[0] = c_exp(d * log(w)) * inner
        return rc
    c1 = _gamma_c(c) * _gamma_c(d) * _recip_gamma_c(c - a) * _recip_gamma_c(c - b)
    c2 = _gamma_c(c) * _gamma_c(-d) * _recip_gamma_c(a) * _recip_gamma_c(b)
    rc = _series_c(a, b, 1.0 - d, w, -1, &f1)
    rc = rc | _series_c(c - a, c - b, 1.0 + d, w, -1, &f2)
    out[0] = c1 * f1 + c2 * c_exp(d * log(w)) * f2
    return rc


def hyp2f1(a, b, c, double s, one_minus_s=None):
    """Gauss 2F1 with complex parameters and real s in [0, 1]."""
    cdef double complex out
    cdef double w = (1.0 - s) if one_minus_s is None else <double> one_minus_s
    if _hyp2f1_c(complex(a), complex(b), complex(c), s, w, &out):
        raise NoConvergenceError(
            f"2F1 series did not converge in {_MAX_TERMS} terms (s={s})")
    return complex(out)


def hyp2f1_grid(a, b, c, s, one_minus_s=None):
    """2F1 with fixed complex parameters over an array of real s in [0,1]."""
    cdef double complex ca = complex(a), cb = complex(b), cc = complex(c)
    shape = np.shape(s)
    s_arr = np.ascontiguousarray(s, dtype=np.float64)
    if one_minus_s is None:
        w_arr = 1.0 - s_arr
    else:
        w_arr = np.ascontiguousarray(one_minus_s, dtype=np.float64)
    out_arr = np.empty(s_arr.shape, dtype=np.complex128)
    cdef double[::1] sv = s_arr.ravel()
    cdef double[::1] wv = w_arr.ravel()
    cdef double complex[::1] ov = out_arr.reshape(-1)
    cdef Py_ssize_t i, n = sv.shape[0]
    cdef double complex val
    cdef int bad = 0
    for i in range(n):
        if _hyp2f1_c(ca, cb, cc, sv[i], wv[i], &val):
            bad = 1
            break
        ov[i] = val
    if bad:
        raise NoConvergenceError(
            f"2F1 series did not converge in {_MAX_TERMS} terms (s={sv[i]})")
    return out_arr.reshape(shape)


cdef double _jacobi_c(int n, double alpha, double beta, double x) noexcept:
    cdef double p_prev = 1.0, p, nxt
    cdef double den, c1, c2, c3, c4
    cdef int k
    if n == 0:
        return 1.0
    p = (alpha + 1.0) + (alpha + beta + 2.0) * 0.5 * (x - 1.0)
    for k in range(2, n + 1):
        den = 2.0 * k * (k + alpha + beta) * (2.0 * k + alpha + beta - 2.0)
        c1 = 2.0 * k + alpha + beta - 1.0
        c2 = (2.0 * k + alpha + beta) * (2.0 * k + alpha + beta - 2.0)
        c3 = alpha * alpha - beta * beta
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + alpha + beta)
        nxt = (c1 * (c2 * x + c3) * p - c4 * p_prev) / den
        p_prev = p
        p = nxt
    return p


def jacobi(int n, double alpha, double beta, double x):
    return _jacobi_c(n, alpha, beta, x)


def jacobi_grid(int n, double alpha, double beta, x):
    shape = np.shape(x)
    x_arr = np.ascontiguousarray(x, dtype=np.float64)
    out_arr = np.empty(x_arr.shape, dtype=np.float64)
    cdef double[::1] xv = x_arr.ravel()
    cdef double[::1] ov = out_arr.reshape(-1)
    cdef Py_ssize_t i, m = xv.shape[0]
    for i in range(m):
        ov[i] = _jacobi_c(n, alpha, beta, xv[i])
    return out_arr.reshape(shape)


def sturm_count(diag, off, double lam):
    """Number of eigenvalues strictly below `lam` (LDL^T sign count)."""
    d_arr = np.ascontiguousarray(diag, dtype=np.float64)
    e_arr = np.ascontiguousarray(off, dtype=np.float64)
    cdef double[::1] d = d_arr
    cdef double[::1] e = e_arr
    cdef Py_ssize_t i, n = d.shape[0]
    cdef int count = 0
    cdef double q = d[0] - lam
    if q < 0.0:
        count += 1
    for i in range(1, n):
        if q == 0.0:
            q = 1e-300
        q = d[i] - lam - e[i - 1] * e[i - 1] / q
        if q < 0.0:
            count += 1
    return count
