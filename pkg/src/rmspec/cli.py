"""Command-line interface.

Subcommands: spectrum, eigenfunction, continuum, jost, expand, nu-reduce,
kink, validate. Output is JSON (default) or CSV; complex numbers
serialize as {"re": ..., "im": ...} objects / paired CSV columns, and CSV
floats carry 17 significant digits so re-reading is bit-exact.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import kink as kink_mod
from . import nu_reduction, spectrum, validation
from .errors import DomainError, NoConvergenceError, RmspecError
from .kernel import BACKEND
from .potential import PotentialParams


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _cplx(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _parse_grid(spec: str) -> np.ndarray:
    try:
        lo_s, hi_s, n_s = spec.split(":")
        lo, hi, n = float(lo_s), float(hi_s), int(n_s)
    except ValueError:
        raise DomainError(f"grid must be 'min:max:count', got {spec!r}") from None
    if n < 2 or not lo < hi:
        raise DomainError(f"bad grid {spec!r}")
    return np.linspace(lo, hi, n)


def _emit(args, payload, csv_rows=None, csv_header=None):
    out = sys.stdout if args.output is None else open(args.output, "w")
    try:
        if args.output_format == "json" or csv_rows is None:
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            out.write(",".join(csv_header) + "\n")
            for row in csv_rows:
                out.write(",".join(_fmt(v) for v in row) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _params_from(args) -> PotentialParams:
    mu = math.log(2.0) / 2.0 if args.mu_ln2_half else args.mu
    if mu is None:
        raise DomainError("--mu (or --mu-ln2-half) is required")
    if args.v0 is None:
        raise DomainError("--v0 is required")
    return PotentialParams(v0=args.v0, mu=mu)


def _spectrum_payload(params: PotentialParams) -> dict:
    states = spectrum.bound_states(params)
    special = spectrum.special_state_vminus(params)
    return {
        "params": {"v0": params.v0, "mu": params.mu},
        "derived": {
            "v_minus": params.v_minus,
            "v_plus": params.v_plus,
            "v_c": params.v_c,
            "n_cap": params.n_cap,
            "transition_k": params.transition_k,
        },
        "discrete": [
            {"n": s.n, "a": s.a, "b": s.b, "eps": s.eps, "norm": s.norm}
            for s in states
        ],
        "continuum_info": {
            "n_b": len(states),
            "sigma_contains_v_minus": special is not None,
            "v_minus_degree": None if special is None else special.degree,
            "alpha_at_v_minus": -params.n_cap,
            "multiplicity_two_above": params.v_plus,
        },
        "diagnostics": {"backend": BACKEND},
    }


def _cmd_spectrum(args) -> int:
    params = _params_from(args)
    payload = _spectrum_payload(params)
    rows = [(s["n"], s["a"], s["b"], s["eps"], s["norm"]) for s in payload["discrete"]]
    _emit(args, payload, rows, ["n", "a", "b", "eps", "norm"])
    return 0


def _cmd_eigenfunction(args) -> int:
    params = _params_from(args)
    states = spectrum.bound_states(params)
    if args.n is None or not 0 <= args.n < len(states):
        raise DomainError(
            f"--n must index a bound state (have {len(states)})")
    z = _parse_grid(args.grid)
    psi = spectrum.eval_bound(params, states[args.n], z)
    payload = {
        "params": {"v0": params.v0, "mu": params.mu, "n": args.n},
        "state": {"eps": states[args.n].eps, "norm": states[args.n].norm},
        "z": list(z),
        "psi": [_cplx(v) for v in np.asarray(psi, dtype=complex)],
    }
    rows = [(zi, float(np.real(vi)), float(np.imag(vi))) for zi, vi in zip(z, np.atleast_1d(psi))]
    _emit(args, payload, rows, ["z", "psi_re", "psi_im"])
    return 0


def _cmd_continuum(args) -> int:
    params = _params_from(args)
    if args.eps is None:
        raise DomainError("--eps is required")
    z = _parse_grid(args.grid)
    psi = spectrum.eval_unbound(params, args.eps, args.which, z)
    cp = spectrum.continuum_params(params, args.eps)
    payload = {
        "params": {"v0": params.v0, "mu": params.mu, "eps": args.eps,
                   "which": args.which},
        "region": cp.region.value,
        "hypergeometric": {k: _cplx(getattr(cp, k))
                           for k in ("a", "b", "alpha", "beta", "gamma")},
        "z": list(z),
        "psi": [_cplx(v) for v in np.asarray(psi, dtype=complex)],
    }
    rows = [(zi, vi.real, vi.imag) for zi, vi in zip(z, np.asarray(psi, dtype=complex))]
    _emit(args, payload, rows, ["z", "psi_re", "psi_im"])
    return 0


def _cmd_jost(args) -> int:
    params = _params_from(args)
    if args.k is not None:
        ks = [args.k]
    elif args.grid:
        ks = [float(k) for k in _parse_grid(args.grid)]
    else:
        raise DomainError("provide --k or --grid kmin:kmax:count")
    assemblies = [spectrum.jost(params, k) for k in ks]
    payload = {
        "params": {"v0": params.v0, "mu": params.mu,
                   "transition_k": params.transition_k},
        "jost": [
            {"k": ja.k, "eps": ja.eps, "k1": _cplx(ja.k1), "c": _cplx(ja.c_k),
             "gamma1": _cplx(ja.gamma1), "gamma2": _cplx(ja.gamma2),
             "gamma1_primed": _cplx(ja.gamma1_primed),
             "gamma2_primed": _cplx(ja.gamma2_primed)}
            for ja in assemblies
        ],
    }
    rows = [(ja.k, ja.c_k.real, ja.c_k.imag) for ja in assemblies]
    _emit(args, payload, rows, ["k", "c_re", "c_im"])
    return 0


def _cmd_expand(args) -> int:
    params = _params_from(args)
    z = _parse_grid(args.grid)
    if args.testfn == "gaussian":
        phi = np.exp(-np.asarray(z) ** 2)
    else:
        states = spectrum.bound_states(params)
        if not states:
            raise DomainError("no bound state to expand")
        phi = spectrum.eval_bound(params, states[0], z)
    kgrid = np.arange(args.kstep, args.kmax + 0.5 * args.kstep, args.kstep)
    result = spectrum.expand(params, z, phi, kgrid)
    payload = {
        "params": {"v0": params.v0, "mu": params.mu, "testfn": args.testfn,
                   "kmax": args.kmax, "kstep": args.kstep},
        "bound_coeffs": [_cplx(c) for c in result.bound_coeffs],
        "max_continuum_coeff": result.max_continuum_coeff,
        "rel_l2_error": result.rel_l2_error,
    }
    _emit(args, payload)
    return 0


def _cmd_nu_reduce(args) -> int:
    params = _params_from(args)
    if args.eps is None:
        raise DomainError("--eps is required")
    ghe = nu_reduction.build_ghe(params, args.eps)
    branches = nu_reduction.solve_pi_branches(params, args.eps)
    payload = {
        "params": {"v0": params.v0, "mu": params.mu, "eps": args.eps},
        "ghe": {"tau_tilde": list(ghe.tau_tilde), "sigma": list(ghe.sigma),
                "sigma_tilde": list(ghe.sigma_tilde)},
        "branches": [
            {"j": br.j, "a": _cplx(br.a), "b": _cplx(br.b), "k": _cplx(br.k),
             "lambda": _cplx(br.lam),
             "residual": nu_reduction.branch_residual(params, args.eps, br),
             "tau_criterion": nu_reduction.tau_selects(br),
             "weight_admissible": nu_reduction.weight_admissible(br)}
            for br in branches
        ],
    }
    _emit(args, payload)
    return 0


def _cmd_kink(args) -> int:
    if args.p is None:
        raise DomainError("--p is required")
    model = kink_mod.KinkModel(p=args.p, phi1=args.phi1)
    report = kink_mod.analyze(model)
    payload = {
        "params": {"p": model.p, "phi1": model.phi1},
        "mapped": {"v0": float(model.mapped_v0), "mu": model.mapped_mu,
                   "v_minus": float(model.mapped_v_minus),
                   "v_plus": float(model.mapped_v_plus),
                   "eps_shift": float(model.eps_shift)},
        "report": {
            "n_bound": report.n_bound,
            "eps0": report.goldstone_eps,
            "goldstone_omega_sq": report.goldstone_omega_sq,
            "continuum_floor_omega_sq": report.continuum_floor_omega_sq,
            "discrete_omega_sq": list(report.discrete_omega_sq),
            "stable": report.stable,
        },
    }
    _emit(args, payload)
    return 0


def _cmd_validate(args) -> int:
    results = validation.run_all()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.name}: {r.detail}")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed "
          f"(backend: {BACKEND})")
    return 0 if not failed else 3


def _build_parser() -> _Parser:
    parser = _Parser(prog="rmspec",
                     description="Spectral data of the asymmetric "
                                 "Rosen-Morse well and kink stability")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, grid_default=None):
        p.add_argument("--v0", type=float, help="well amplitude v0 > 0")
        p.add_argument("--mu", type=float, help="asymmetry parameter mu >= 0")
        p.add_argument("--mu-ln2-half", action="store_true",
                       help="shortcut for mu = ln(2)/2")
        p.add_argument("--output-format", choices=("json", "csv"),
                       default="json")
        p.add_argument("--output", default=None, help="write to file")
        if grid_default is not None:
            p.add_argument("--grid", default=grid_default,
                           help="grid as min:max:count")

    p = sub.add_parser("spectrum", help="derived constants and discrete levels")
    add_common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("eigenfunction", help="tabulate a bound eigenfunction")
    add_common(p, grid_default="-10:10:401")
    p.add_argument("--n", type=int, help="bound-state index")
    p.set_defaults(func=_cmd_eigenfunction)

    p = sub.add_parser("continuum", help="tabulate a continuum eigenfunction")
    add_common(p, grid_default="-10:10:401")
    p.add_argument("--eps", type=float, help="energy > v_minus")
    p.add_argument("--which", type=int, choices=(1, 2), default=1)
    p.set_defaults(func=_cmd_continuum)

    p = sub.add_parser("jost", help="Jost data and transmission coefficient")
    add_common(p)
    p.add_argument("--k", type=float, default=None, help="single momentum")
    p.add_argument("--grid", default=None, help="momentum grid kmin:kmax:count")
    p.set_defaults(func=_cmd_jost)

    p = sub.add_parser("expand", help="completeness expansion of a test function")
    add_common(p, grid_default="-40:40:3201")
    p.add_argument("--testfn", choices=("gaussian", "bound"), default="gaussian")
    p.add_argument("--kmax", type=float, default=4.0)
    p.add_argument("--kstep", type=float, default=0.05)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("nu-reduce", help="hypergeometric reduction branches")
    add_common(p)
    p.add_argument("--eps", type=float, help="energy")
    p.set_defaults(func=_cmd_nu_reduce)

    p = sub.add_parser("kink", help="phi^{2p+2} kink stability report")
    p.add_argument("--p", type=int, help="field-theory exponent index (>= 2)")
    p.add_argument("--phi1", type=float, default=1.0)
    p.add_argument("--output-format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_kink)

    p = sub.add_parser("validate", help="run the oracle validation suite")
    p.set_defaults(func=_cmd_validate)
    return parser


def _inline_grid_values(argv):
    """Join `--grid -5:5:101` into `--grid=-5:5:101` so argparse does not
    mistake a negative lower bound for a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--grid":
            val = next(it, None)
            if val is None:
                out.append(tok)
            else:
                out.append(f"--grid={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_inline_grid_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"rmspec: domain error: {exc}", file=sys.stderr)
        return 2
    except NoConvergenceError as exc:
        print(f"rmspec: numerical failure: {exc}", file=sys.stderr)
        return 3
    except RmspecError as exc:
        print(f"rmspec: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
