"""rmspec: complete spectral data of the one-dimensional Schrodinger
problem with the asymmetric Rosen-Morse well, plus the phi^{2p+2}
kink-stability application built on it."""

from .errors import (
    DegenerateGammaError,
    DomainError,
    GridError,
    NoConvergenceError,
    PoleError,
    RmspecError,
    SecondSolutionUndefinedError,
    TransitionPointError,
)
from .kernel import BACKEND
from .potential import PotentialParams
from .spectrum import (
    BoundState,
    ContinuumParams,
    ExpansionResult,
    JostAssembly,
    Region,
    SpecialState,
    bound_states,
    classify,
    continuum_eigenfunctions,
    continuum_params,
    eval_bound,
    eval_unbound,
    expand,
    jost,
    jost_f1,
    jost_f2,
    normalize_bound,
    special_state_vminus,
    special_state_vplus,
    wronskian_c,
)
from .kink import KinkModel, StabilityReport, analyze, static_kink

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundState",
    "ContinuumParams",
    "DegenerateGammaError",
    "DomainError",
    "ExpansionResult",
    "GridError",
    "JostAssembly",
    "KinkModel",
    "NoConvergenceError",
    "PoleError",
    "PotentialParams",
    "Region",
    "RmspecError",
    "SecondSolutionUndefinedError",
    "SpecialState",
    "StabilityReport",
    "TransitionPointError",
    "analyze",
    "bound_states",
    "classify",
    "continuum_eigenfunctions",
    "continuum_params",
    "eval_bound",
    "eval_unbound",
    "expand",
    "jost",
    "jost_f1",
    "jost_f2",
    "normalize_bound",
    "special_state_vminus",
    "special_state_vplus",
    "static_kink",
    "wronskian_c",
    "__version__",
]
