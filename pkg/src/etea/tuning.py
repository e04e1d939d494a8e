"""Regularization weight selection and optimality diagnostics.

The weight rule scales the noise level by the 2-norm of the impulse
response of the squared highpass divided by the sparsifying recursion; on
pure noise it keeps the transient estimate essentially zero. The
diagnostic vector ``p`` certifies a solution: at an optimum each entry
equals ``lam`` times the penalty derivative at the corresponding
differenced-transient entry, and in particular stays inside
``[-lam, lam]``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .filters import impulse_response_cascade

OPTIMALITY_TOL = 1e-6


def default_cascade_length(r):
    """Response length long enough for the pole at ``r`` to decay out."""
    if r < 1.0:
        return max(4096, math.ceil(20.0 / (1.0 - r)))
    return 4096


def select_lambda(sigma_w, filt, op, n=None, multiplier=2.5):
    """Noise-scaled regularization weight ``multiplier * sigma_w * 2 * ||h||_2``.

    ``h`` is the impulse response of the squared highpass driven through
    the inverse recursion (length ``n``, defaulting to
    :func:`default_cascade_length`). The multiplier is a statistical rule
    of thumb; raise it to suppress more, lower it to keep weaker transients.
    """
    if sigma_w < 0:
        raise ValueError(f"noise level must be >= 0, got {sigma_w}")
    if n is None:
        n = default_cascade_length(op.r)
    h = impulse_response_cascade(filt, op, n)
    return float(multiplier * sigma_w * 2.0 * np.linalg.norm(h))


def estimate_sigma(y, filt):
    """Robust noise-level estimate from the first-difference sequence.

    Median absolute first difference, calibrated for white Gaussian noise;
    differencing suppresses the baseline and all but the jump samples of
    the transients.
    """
    y = np.asarray(y, dtype=float)
    if len(y) <= 2 * filt.d + 2:
        raise ValueError(f"signal too short ({len(y)} samples) to estimate noise")
    return float(np.median(np.abs(np.diff(y))) / (0.6745 * np.sqrt(2.0)))


@dataclass
class OptimalityReport:
    """Stationarity diagnostic for a computed solution.

    ``p[n]`` should trace ``lam * penalty.deriv(v[n])``; entries with
    ``|p[n]| > lam`` (beyond ``tol_opt``) are counted as violations.
    """

    p: np.ndarray
    v: np.ndarray
    lam: float
    max_abs_p: float
    violation_count: int


def optimality_report(y, x_star, cfg, tol_opt=OPTIMALITY_TOL):
    """Evaluate the stationarity diagnostic for solution ``x_star``.

    ``p`` is twice the transposed-inverse image of the data-term gradient
    of the residual ``y - x_star``; it does not require re-solving the
    problem.
    """
    y = np.asarray(y, dtype=float)
    x_star = np.asarray(x_star, dtype=float)
    if x_star.shape != y.shape:
        raise ValueError(f"length mismatch: x {x_star.shape} vs y {y.shape}")
    ap = cfg.filt.applicator(len(y))
    p = 2.0 * cfg.operator.invert_transpose(ap.gram(y - x_star))
    v = cfg.operator.apply(x_star)
    return OptimalityReport(
        p=p,
        v=v,
        lam=cfg.lam,
        max_abs_p=float(np.abs(p).max()),
        violation_count=int(np.count_nonzero(np.abs(p) > cfg.lam * (1.0 + tol_opt))),
    )
