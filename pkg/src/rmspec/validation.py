"""Self-contained validation suite behind the `rmspec validate` command.

Each check pits the analytic engine against the independent
finite-difference / quadrature oracle or against closed-form fixtures.
Returns structured results; the CLI turns them into pass/fail lines and
an exit code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kink, nu_reduction, oracle, spectrum
from .potential import PotentialParams


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name, passed, detail=""):
    return CheckResult(name=name, passed=bool(passed), detail=detail)


EX1 = PotentialParams(v0=1.0, mu=math.log(2.0) / 2.0)
EX2 = PotentialParams(v0=2.0 / 3.0, mu=math.log(2.0) / 2.0)


def check_fixture_one() -> CheckResult:
    sts = spectrum.bound_states(EX1)
    eps0 = (2.0 * math.sqrt(22.0) - 5.0) / 9.0
    ok = (abs(EX1.v_minus - 0.5) < 1e-14 and abs(EX1.v_plus - 2.0) < 1e-14
          and len(sts) == 1 and abs(sts[0].eps - eps0) < 1e-14
          and spectrum.special_state_vminus(EX1) is None)
    return _check("fixture-one", ok,
                  f"n_b={len(sts)}, eps0 err={abs(sts[0].eps - eps0):.2e}")


def check_fixture_two() -> CheckResult:
    sts = spectrum.bound_states(EX2)
    special = spectrum.special_state_vminus(EX2)
    ok = (len(sts) == 0 and abs(EX2.n_cap) < 1e-12 and special is not None
          and special.degree == 0)
    if ok:
        z = np.linspace(-6, 6, 41)
        ref = np.exp(-z / 2.0) / np.cosh(z) ** 0.5
        got = special(z)
        ratio = got / ref
        ok = np.max(np.abs(ratio - ratio[0])) < 1e-10
    return _check("fixture-two", ok, f"N={EX2.n_cap:.2e}")


def check_fd_eigenvalue() -> CheckResult:
    grid = oracle.FdGrid(-30.0, 30.0, 4000)
    sysm = oracle.discretize(EX1, grid)
    vals = oracle.eigenvalues_below(sysm, EX1.v_minus)
    eps0 = spectrum.bound_states(EX1)[0].eps
    ok = len(vals) == 1 and abs(vals[0] - eps0) < 1e-4
    return _check("fd-eigenvalue", ok,
                  f"fd={vals[0]:.8f} analytic={eps0:.8f}" if vals else "no eigenvalue")


def check_sturm_counts(n_random: int = 20, seed: int = 7) -> CheckResult:
    rng = np.random.default_rng(seed)
    grid = oracle.FdGrid(-30.0, 30.0, 2000)
    bad = []
    for _ in range(n_random):
        mu = rng.uniform(0.02, 0.8)
        v0 = rng.uniform(0.2, 12.0)
        params = PotentialParams(v0=v0, mu=mu)
        n_b = len(spectrum.bound_states(params))
        n_fd = oracle.count_below(oracle.discretize(params, grid), params.v_minus)
        if n_b != n_fd:
            bad.append((v0, mu, n_b, n_fd))
    return _check("sturm-counts", not bad, f"mismatches={bad}")


def check_normalization() -> CheckResult:
    params = PotentialParams(v0=20.0, mu=0.1)
    worst = 0.0
    for st in spectrum.bound_states(params):
        val = oracle.integrate(lambda z: spectrum.eval_bound(params, st, z) ** 2,
                               -40.0, 40.0, tol=1e-11)
        worst = max(worst, abs(val - 1.0))
    return _check("normalization", worst < 1e-9, f"worst |int-1|={worst:.2e}")


def check_residuals() -> CheckResult:
    grid = oracle.FdGrid(-8.0, 8.0, 8001)
    st = spectrum.bound_states(EX1)[0]
    r_bound = oracle.residual(EX1, st.eps, lambda z: spectrum.eval_bound(EX1, st, z), grid)
    r_r2 = oracle.residual(EX1, 1.1, lambda z: spectrum.eval_unbound(EX1, 1.1, 1, z), grid)
    r_r3 = oracle.residual(EX1, 3.7, lambda z: spectrum.eval_unbound(EX1, 3.7, 2, z), grid)
    worst = max(r_bound, r_r2, r_r3)
    return _check("ode-residuals", worst < 1e-4,
                  f"bound={r_bound:.1e} r2={r_r2:.1e} r3={r_r3:.1e}")


def check_jost() -> CheckResult:
    k = 2.0
    ja = spectrum.jost(EX1, k)
    a1 = abs(spectrum.jost_f1(EX1, k, -15.0) * np.exp(1j * k * -15.0) - 1.0)
    a2 = abs(spectrum.jost_f2(EX1, k, 15.0) * np.exp(-1j * ja.k1 * 15.0) - 1.0)
    cs = [spectrum.wronskian_c(EX1, k, z0) for z0 in (-2.0, 0.0, 2.0)]
    spread = max(abs(c - cs[1]) for c in cs)
    ok = a1 < 1e-3 and a2 < 1e-3 and spread < 1e-8
    return _check("jost", ok, f"|f1 asym|={a1:.1e} |f2 asym|={a2:.1e} spread={spread:.1e}")


def check_nu_branches(seed: int = 3) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(25):
        params = PotentialParams(v0=rng.uniform(0.1, 30.0), mu=rng.uniform(0.0, 1.5))
        eps = rng.uniform(0.0, 2.0 * params.v_plus)
        for br in nu_reduction.solve_pi_branches(params, eps):
            worst = max(worst, nu_reduction.branch_residual(params, eps, br))
    return _check("nu-branches", worst < 1e-10, f"worst residual={worst:.1e}")


def check_kink() -> CheckResult:
    bad = []
    for p in range(2, 11):
        m = kink.KinkModel(p=p)
        rep = kink.analyze(m)
        eps0 = float(m.goldstone_eps)
        if not (rep.n_bound == 1 and abs(rep.goldstone_eps - eps0) < 1e-12
                and abs(rep.goldstone_omega_sq) < 1e-12 and rep.stable):
            bad.append(p)
    return _check("kink-suite", not bad, f"failed p={bad}")


def check_critical_curve(n: int = 60, seed: int = 5) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    signs_ok = True
    for _ in range(n):
        mu = rng.uniform(0.01, 2.5)
        vc = math.exp(2.0 * mu) * math.tanh(mu)
        worst = max(worst, abs(PotentialParams(v0=vc, mu=mu).n_cap))
        signs_ok &= PotentialParams(v0=1.01 * vc, mu=mu).n_cap > 0
        signs_ok &= PotentialParams(v0=0.99 * vc, mu=mu).n_cap < 0
    return _check("critical-curve", worst < 1e-10 and signs_ok, f"worst |N|={worst:.1e}")


ALL_CHECKS = (
    check_fixture_one,
    check_fixture_two,
    check_fd_eigenvalue,
    check_sturm_counts,
    check_normalization,
    check_residuals,
    check_jost,
    check_nu_branches,
    check_kink,
    check_critical_curve,
)


def run_all() -> list[CheckResult]:
    return [fn() for fn in ALL_CHECKS]
