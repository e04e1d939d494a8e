"""Recursive-difference operators that sparsify exponential transients.

The first-order operator maps a step exponential with matching decay rate
to a single impulse; the second-order operator does the same for
ramp-times-exponential pulses. Both are short banded stencils, and their
causal inverses are plain one-pole recursions, so nothing dense is ever
materialized.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .banded import BandedMatrix
from .filters import inverse_recursion

RECOMMENDED_RATE_RANGE = (0.90, 0.98)


@dataclass(frozen=True)
class SparsifyingOperator:
    """Banded sparsifying operator of the given order and decay rate.

    Parameters
    ----------
    order : {1, 2}
        1 targets abrupt jumps with exponential decay; 2 targets smooth
        ramp-decay protuberances.
    r : float
        Decay rate per sample in [0, 1]. Production use expects
        0 < r < 1; r = 1 degenerates to the plain first/second
        difference, r = 0 to a shift. For order 2, rates outside
        (0.90, 0.98) trigger a warning rather than an error.
    """

    order: int = 1
    r: float = 0.94

    def __post_init__(self):
        if self.order not in (1, 2):
            raise ValueError(f"order must be 1 or 2, got {self.order}")
        if not 0.0 <= self.r <= 1.0:
            raise ValueError(f"decay rate must lie in [0, 1], got {self.r}")
        lo, hi = RECOMMENDED_RATE_RANGE
        if self.order == 2 and not lo < self.r < hi:
            warnings.warn(
                f"decay rate {self.r} outside the recommended range "
                f"({lo}, {hi}) for order 2",
                stacklevel=3,
            )

    def stencil(self):
        """Per-row coefficients: (-r, 1) for order 1, (r^2, -2r, 1) for order 2."""
        if self.order == 1:
            return np.array([-self.r, 1.0])
        return np.array([self.r * self.r, -2.0 * self.r, 1.0])

    def as_banded(self, n):
        """(n - order) x n banded matrix applying the stencil to each row."""
        n = int(n)
        if n < self.order + 1:
            raise ValueError(f"signal length {n} too short for order {self.order}")
        stencil = self.stencil()
        m = BandedMatrix(n - self.order, n, 0, self.order)
        for k, c in enumerate(stencil):
            m.data[k, k:k + n - self.order] = c
        return m

    def apply(self, x):
        """Forward stencil, same entries as ``as_banded(len(x)) @ x``."""
        x = np.asarray(x, dtype=float)
        if self.order == 1:
            return x[1:] - self.r * x[:-1]
        return x[2:] - 2.0 * self.r * x[1:-1] + self.r * self.r * x[:-2]

    def invert(self, v):
        """Causal inverse: returns x of length ``len(v) + order`` with
        ``apply(x) == v``.

        Boundary convention: the inverse carries ``order`` leading zero
        samples, then the one-pole recursion run ``order`` times over v.
        """
        v = np.asarray(v, dtype=float)
        return np.concatenate([np.zeros(self.order), inverse_recursion(v, self.r, self.order)])

    def invert_transpose(self, e):
        """Transpose of :meth:`invert` as a linear map; output has
        ``len(e) - order`` samples.

        Computed by time-reversing e, running the causal recursion
        ``order`` times, reversing back, and dropping the first ``order``
        samples (the transposed images of the leading zero rows of the
        inverse).
        """
        e = np.asarray(e, dtype=float)
        y = inverse_recursion(e[::-1], self.r, self.order)[::-1]
        return y[self.order:]

    def __repr__(self):
        return f"SparsifyingOperator(order={self.order}, r={self.r})"


def rate_from_halflife(n_half):
    """Decay rate whose transient halves over ``n_half`` samples.

    When several transients are measured, average their half-lives first.
    """
    if not n_half > 0:
        raise ValueError(f"half-life must be positive, got {n_half}")
    return 0.5 ** (1.0 / n_half)
