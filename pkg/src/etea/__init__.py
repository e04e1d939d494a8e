"""ETEA: excision of exponential transients from noisy 1-D signals.

Decomposes a sampled signal into a lowpass baseline, a sparse
piecewise-exponential transient component, and residual noise, by
majorization-minimization over banded linear systems.
"""

from .banded import (
    BandedMatrix,
    NotPositiveDefiniteError,
    banded_add,
    banded_mul,
    banded_mul_vec,
    banded_solve_spd,
    banded_transpose,
)
from .penalty import Penalty
from .filters import ZeroPhaseFilter, design_highpass, impulse_response_cascade
from .operators import SparsifyingOperator, rate_from_halflife
from .solver import SolverConfig, Decomposition, cost, mm_step, solve
from .tuning import OptimalityReport, select_lambda, estimate_sigma, optimality_report
from .synth import SyntheticSpec, generate, rmse

__all__ = [
    "BandedMatrix",
    "NotPositiveDefiniteError",
    "banded_add",
    "banded_mul",
    "banded_mul_vec",
    "banded_solve_spd",
    "banded_transpose",
    "Penalty",
    "ZeroPhaseFilter",
    "design_highpass",
    "impulse_response_cascade",
    "SparsifyingOperator",
    "rate_from_halflife",
    "SolverConfig",
    "Decomposition",
    "cost",
    "mm_step",
    "solve",
    "OptimalityReport",
    "select_lambda",
    "estimate_sigma",
    "optimality_report",
    "SyntheticSpec",
    "generate",
    "rmse",
]

__version__ = "0.1.0"
