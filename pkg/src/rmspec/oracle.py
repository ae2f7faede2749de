"""Independent numerical verification tools.

A second-order finite-difference discretization of the Schrodinger
operator with Dirichlet boxes, a Sturm-sequence bisection eigensolver for
the resulting symmetric tridiagonal matrices, operator-residual checks,
and adaptive Gauss-Kronrod quadrature. Everything here deliberately
avoids the analytic machinery it is used to verify.
"""

from __future__ import annotations

import heapq
import math
import os
from dataclasses import dataclass

import numpy as np

from . import kernel
from .errors import GridError, NoConvergenceError
from .potential import PotentialParams


def default_tolerance() -> float:
    """Default quadrature tolerance, overridable via RMSPEC_TOL."""
    return float(os.environ.get("RMSPEC_TOL", "1e-10"))


@dataclass(frozen=True)
class FdGrid:
    z_min: float
    z_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 3:
            raise GridError("need at least three grid points")
        if not self.z_min < self.z_max:
            raise GridError("z_min must be below z_max")

    @property
    def h(self) -> float:
        return (self.z_max - self.z_min) / (self.n_points - 1)

    def zs(self) -> np.ndarray:
        return np.linspace(self.z_min, self.z_max, self.n_points)


@dataclass(frozen=True)
class TridiagonalSystem:
    diagonal: np.ndarray
    off_diagonal: np.ndarray


def discretize(params: PotentialParams, grid: FdGrid) -> TridiagonalSystem:
    """Second-order discretization -psi'' + v psi with psi = 0 outside the
    box: diagonal 2/h^2 + v(z_i), off-diagonal -1/h^2."""
    h = grid.h
    diag = 2.0 / h**2 + params.v(grid.zs())
    off = np.full(grid.n_points - 1, -1.0 / h**2)
    return TridiagonalSystem(diagonal=diag, off_diagonal=off)


def count_below(system: TridiagonalSystem, lam: float) -> int:
    """Number of eigenvalues strictly below lam (one Sturm pass)."""
    return kernel.sturm_count(system.diagonal, system.off_diagonal, lam)


def eigenvalues_below(system: TridiagonalSystem, cutoff: float) -> list[float]:
    """All matrix eigenvalues below `cutoff`, ascending, by Sturm-sequence
    bisection."""
    if not math.isfinite(cutoff):
        raise GridError("cutoff must be finite")
    d = np.asarray(system.diagonal, dtype=np.float64)
    e = np.asarray(system.off_diagonal, dtype=np.float64)
    r = np.zeros(d.size)
    r[:-1] += np.abs(e)
    r[1:] += np.abs(e)
    lo = float(np.min(d - r))
    m = kernel.sturm_count(d, e, cutoff)
    out = []
    for j in range(m):
        a, b = lo, cutoff
        while b - a > 1e-11 * max(1.0, abs(a), abs(b)):
            mid = 0.5 * (a + b)
            if kernel.sturm_count(d, e, mid) >= j + 1:
                b = mid
            else:
                a = mid
        out.append(0.5 * (a + b))
    return out


def residual(params: PotentialParams, eps: float, psi, grid: FdGrid) -> float:
    """Relative finite-difference residual of the eigenvalue equation:
    max_i |(psi_{i+1} - 2 psi_i + psi_{i-1})/h^2 - (v_i - eps) psi_i| / max|psi|.

    `psi` is either a callable or an array sampled on grid.zs().
    """
    zs = grid.zs()
    vals = np.asarray(psi(zs) if callable(psi) else psi)
    if vals.shape != zs.shape:
        raise GridError("sampled psi does not match the grid")
    h = grid.h
    second = (vals[2:] - 2.0 * vals[1:-1] + vals[:-2]) / h**2
    res = second - (params.v(zs[1:-1]) - eps) * vals[1:-1]
    scale = float(np.max(np.abs(vals)))
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(res))) / scale


# ---------------------------------------------------------------------------
# adaptive Gauss-Kronrod quadrature (G7, K15)
# ---------------------------------------------------------------------------

_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f, a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fc = f(mid)
    integral_k = _WGK[7] * fc
    integral_g = _WG[3] * fc
    for i in range(7):
        x = half * _XGK[i]
        fsum = f(mid - x) + f(mid + x)
        integral_k += _WGK[i] * fsum
        if i % 2 == 1:  # odd Kronrod indices are the Gauss-7 nodes
            integral_g += _WG[i // 2] * fsum
    integral_k *= half
    integral_g *= half
    err = abs(integral_k - integral_g)
    if err > 0.0:
        err = min(err, (200.0 * err) ** 1.5)
    return integral_k, err


def integrate(f, z_min: float, z_max: float, tol: float | None = None,
              limit: int = 2000):
    """Adaptive Gauss-Kronrod integral of a real- or complex-valued callable.

    Subdivides the worst interval until the summed error estimate drops
    below tol * max(1, |I|); raises NoConvergenceError at the subdivision
    limit.
    """
    if tol is None:
        tol = default_tolerance()
    if tol <= 0:
        raise GridError("tolerance must be positive")
    if not z_min < z_max:
        raise GridError("empty integration interval")
    # seed with a handful of panels so narrow features are not missed
    seeds = np.linspace(z_min, z_max, 9)
    heap = []
    total = 0.0
    tick = 0
    for a, b in zip(seeds[:-1], seeds[1:]):
        val, err = _gk15(f, a, b)
        total += val
        heapq.heappush(heap, (-err, tick, float(a), float(b), val))
        tick += 1
    for _ in range(limit):
        err_sum = -sum(item[0] for item in heap)
        if err_sum <= tol * max(1.0, abs(total)):
            return total
        _, _, a, b, val = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        v1, e1 = _gk15(f, a, mid)
        v2, e2 = _gk15(f, mid, b)
        total += v1 + v2 - val
        heapq.heappush(heap, (-e1, tick, a, mid, v1))
        heapq.heappush(heap, (-e2, tick + 1, mid, b, v2))
        tick += 2
    raise NoConvergenceError(
        f"quadrature failed to reach tol={tol} within {limit} subdivisions")
