"""Zero-phase highpass filtering via banded matrix pencils.

The filter is the rational function of two symmetric banded Toeplitz
matrices, ``H = B A^{-1}``. Both matrices share the bandwidth ``d`` and are
built from symmetric tap sequences, so applying H is one banded SPD solve
plus one banded product, linear in the signal length. The response is real
(zero phase), vanishes at DC, equals 1 at the Nyquist frequency, and 1/2 at
the cutoff.
"""

import numpy as np
from scipy.signal import lfilter

from .banded import BandedMatrix, banded_mul_vec, spd_factorize


def _self_convolve(kernel, times):
    out = np.array([1.0])
    for _ in range(times):
        out = np.convolve(out, kernel)
    return out


class ZeroPhaseFilter:
    """Zero-phase highpass filter of order parameter ``d`` and cutoff ``fc``.

    Use :func:`design_highpass` to construct. ``a_taps`` and ``b_taps`` hold
    the center-outward taps (length d + 1) of the denominator and numerator;
    the corresponding length-n banded matrices come from ``a_matrix(n)`` and
    ``b_matrix(n)``.
    """

    def __init__(self, d, fc, a_taps, b_taps):
        self.d = d
        self.fc = fc
        self.a_taps = np.asarray(a_taps, dtype=float)
        self.b_taps = np.asarray(b_taps, dtype=float)

    def a_matrix(self, n):
        return BandedMatrix.symmetric_toeplitz(n, self.a_taps)

    def b_matrix(self, n):
        return BandedMatrix.symmetric_toeplitz(n, self.b_taps)

    def frequency_response(self, omega):
        """Real response at angular frequency ``omega`` (radians/sample)."""
        omega = np.asarray(omega, dtype=float)
        k = np.arange(1, self.d + 1)
        cos_terms = 2.0 * np.cos(np.multiply.outer(omega, k))
        num = self.b_taps[0] + cos_terms @ self.b_taps[1:]
        den = self.a_taps[0] + cos_terms @ self.a_taps[1:]
        return num / den

    def applicator(self, n):
        """Prefactored filter operations at signal length ``n``."""
        return FilterApplicator(self, n)

    def apply(self, v):
        """Highpass ``B @ solve(A, v)``; edge samples are approximate."""
        return self.applicator(len(v))(v)

    def __repr__(self):
        return f"ZeroPhaseFilter(d={self.d}, fc={self.fc})"


class FilterApplicator:
    """Filter operations at a fixed length, sharing one factorization of A."""

    def __init__(self, filt, n):
        if n <= 2 * filt.d + 1:
            raise ValueError(
                f"signal length {n} too short for filter order d={filt.d}"
            )
        self.a = filt.a_matrix(n)
        self.b = filt.b_matrix(n)
        self.solve_a = spd_factorize(self.a)

    def __call__(self, v):
        """H v."""
        return banded_mul_vec(self.b, self.solve_a(np.asarray(v, dtype=float)))

    def gram(self, v):
        """(H^T H) v, the data-term gradient operator; B is symmetric."""
        t = self.solve_a(np.asarray(v, dtype=float))
        t = banded_mul_vec(self.b, t)
        t = banded_mul_vec(self.b, t)
        return self.solve_a(t)


def design_highpass(d, fc):
    """Design the zero-phase highpass filter for order ``d`` and cutoff ``fc``.

    Parameters
    ----------
    d : int
        Order parameter, >= 1; the banded matrices have bandwidth d.
    fc : float
        Cutoff in cycles/sample, strictly between 0 and 0.5; the response
        passes through 1/2 there.

    Returns
    -------
    ZeroPhaseFilter
    """
    d = int(d)
    if d < 1:
        raise ValueError(f"filter order d must be >= 1, got {d}")
    if not 0.0 < fc < 0.5:
        raise ValueError(f"cutoff fc must lie in (0, 0.5) cycles/sample, got {fc}")
    # numerator (-z + 2 - z^-1)^d has a d-fold zero at DC; the denominator
    # adds alpha * (z + 2 + z^-1)^d, which pins the response to 1/2 at fc
    # and to 1 at Nyquist
    b_full = _self_convolve([-1.0, 2.0, -1.0], d)
    lp_full = _self_convolve([1.0, 2.0, 1.0], d)
    alpha = np.tan(np.pi * fc) ** (2 * d)
    a_full = b_full + alpha * lp_full
    return ZeroPhaseFilter(d, fc, a_taps=a_full[d:], b_taps=b_full[d:])


def inverse_recursion(v, r, order):
    """Run the causal recursion ``y[k] = v[k] + r y[k-1]``, ``order`` times."""
    out = np.asarray(v, dtype=float)
    for _ in range(order):
        out = lfilter([1.0], [1.0, -r], out)
    return out


def impulse_response_cascade(filt, op, n):
    """Impulse response of the squared highpass driven through the
    inverse of the sparsifying recursion.

    Applies the filter twice to a centered unit impulse, then runs the
    causal recursion with rate ``op.r`` once per operator order. The
    response must have decayed in the last 1% of samples (magnitude at most
    1e-9 of the peak), otherwise ``n`` is too short and a ValueError is
    raised.
    """
    n = int(n)
    apply_h = filt.applicator(n)
    u = np.zeros(n)
    u[n // 2] = 1.0
    h = apply_h(apply_h(u))
    h = inverse_recursion(h, op.r, op.order)
    tail = max(1, n // 100)
    peak = np.abs(h).max()
    if np.abs(h[-tail:]).max() > 1e-9 * peak:
        raise ValueError(
            f"impulse response has not decayed within {n} samples; increase n"
        )
    return h
