"""Sparsity-promoting penalties with smoothing and a quadratic majorizer.

Each penalty is a smoothed version of a non-smooth sparsity penalty: the
argument is passed through ``sqrt(u^2 + eps)`` so the result is
differentiable everywhere, which keeps the reweighting step of the MM
solver free of divide-by-zero issues. Three families are provided:

==== ==================================  =========================
kind  non-smooth form                    shape parameter
==== ==================================  =========================
abs   ``|u|``                            (ignored)
log   ``log(1 + a*|u|) / a``             ``a > 0``
atan  rescaled arctan, concave on u>=0   ``a > 0``
==== ==================================  =========================

``log`` and ``atan`` are non-convex; they sharpen recovery of jump
amplitudes but large ``a`` can create local minima in the overall
objective.
"""

from dataclasses import dataclass

import numpy as np

KINDS = ("abs", "log", "atan")


@dataclass(frozen=True)
class Penalty:
    """Smoothed penalty descriptor.

    Parameters
    ----------
    kind : {'abs', 'log', 'atan'}
        Penalty family.
    a : float
        Positive shape parameter; controls non-convexity for 'log'/'atan'.
    eps : float
        Strictly positive smoothing parameter. Small values (default
        1e-10) make the smoothed penalty numerically indistinguishable
        from the non-smooth one away from zero.
    """

    kind: str = "abs"
    a: float = 2.0
    eps: float = 1e-10

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown penalty kind {self.kind!r}; use one of {KINDS}")
        if not self.a > 0:
            raise ValueError(f"shape parameter a must be positive, got {self.a}")
        if not self.eps > 0:
            raise ValueError(f"smoothing eps must be strictly positive, got {self.eps}")

    # raw penalty and derivative, evaluated at nonnegative arguments
    def _raw(self, s):
        a = self.a
        if self.kind == "abs":
            return s
        if self.kind == "log":
            return np.log1p(a * s) / a
        return (2.0 / (a * np.sqrt(3.0))) * (
            np.arctan((1.0 + 2.0 * a * s) / np.sqrt(3.0)) - np.pi / 6.0
        )

    def _raw_deriv(self, s):
        a = self.a
        if self.kind == "abs":
            return np.ones_like(np.asarray(s, dtype=float))
        if self.kind == "log":
            return 1.0 / (1.0 + a * s)
        return 1.0 / (1.0 + a * s + a * a * s * s)

    def nonsmooth(self, u):
        """Non-smooth penalty value (the eps -> 0 limit of ``value``)."""
        return self._raw(np.abs(u))

    def value(self, u):
        """Smoothed penalty, even and differentiable everywhere."""
        return self._raw(np.sqrt(u * u + self.eps))

    def deriv(self, u):
        """Derivative of ``value``; odd, continuous, bounded."""
        s = np.sqrt(u * u + self.eps)
        return (u / s) * self._raw_deriv(s)

    def weight(self, v):
        """Majorizer denominator ``v / deriv(v)``, in closed form.

        Strictly positive for every v (including 0, where the quotient
        form would be 0/0), so it is safe as a reweighting divisor.
        """
        s = np.sqrt(v * v + self.eps)
        a = self.a
        if self.kind == "abs":
            return s
        if self.kind == "log":
            return s * (1.0 + a * s)
        return s * (1.0 + a * s + a * a * s * s)

    def majorizer(self, u, v):
        """Quadratic-in-u upper bound of ``value(u)`` that touches at u = v."""
        return (
            u * u / (2.0 * self.weight(v))
            + self.value(v)
            - 0.5 * v * self.deriv(v)
        )
