"""Synthetic test signals: lowpass baseline + exponential transients + noise.

Transient type codes follow the artifact taxonomy used throughout the
package: type 1 is an abrupt jump followed by an exponential decay, type 0
a smooth protuberance (ramp times exponential, the inverse image of the
order-2 recursion). Noise is white Gaussian, drawn from numpy's PCG64
generator seeded with ``spec.seed``, so every signal is reproducible.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SyntheticSpec:
    """Recipe for one synthetic signal.

    Parameters
    ----------
    n : int
        Number of samples.
    baseline : tuple of (amplitude, frequency, phase)
        Sinusoids ``amp * sin(2*pi*freq*k + phase)`` with frequency in
        cycles/sample; keep frequencies below the analysis cutoff.
    transients : tuple of (type, onset, amplitude, rate)
        Type 0 or 1, onset in [0, n), decay rate in (0, 1).
    sigma_w : float
        Noise standard deviation.
    seed : int
        Seed for the PCG64 noise generator.
    """

    n: int
    baseline: tuple = ()
    transients: tuple = ()
    sigma_w: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.sigma_w < 0:
            raise ValueError(f"sigma_w must be >= 0, got {self.sigma_w}")
        object.__setattr__(
            self, "baseline", tuple(tuple(map(float, t)) for t in self.baseline)
        )
        object.__setattr__(self, "transients", tuple(map(tuple, self.transients)))
        for typ, onset, _, rate in self.transients:
            if typ not in (0, 1):
                raise ValueError(f"transient type must be 0 or 1, got {typ}")
            if not 0 <= int(onset) < self.n:
                raise ValueError(f"onset {onset} outside [0, {self.n})")
            if not 0.0 < rate < 1.0:
                raise ValueError(f"transient rate must lie in (0, 1), got {rate}")


def generate(spec):
    """Realize a spec; returns ``(y, parts)`` with ``parts`` holding the
    exact ``f`` (baseline), ``x`` (transients), and ``w`` (noise) such that
    ``y = f + x + w`` bit for bit."""
    k = np.arange(spec.n)
    f = np.zeros(spec.n)
    for amp, freq, phase in spec.baseline:
        f += amp * np.sin(2.0 * np.pi * freq * k + phase)
    x = np.zeros(spec.n)
    for typ, onset, amp, rate in spec.transients:
        onset = int(onset)
        m = np.arange(spec.n - onset)
        tail = amp * rate ** m
        if typ == 0:
            tail *= m + 1
        x[onset:] += tail
    w = spec.sigma_w * np.random.default_rng(spec.seed).standard_normal(spec.n)
    return f + x + w, {"f": f, "x": x, "w": w}


def rmse(a, b):
    """Root-mean-square difference of two equal-length signals."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return float(np.sqrt(np.mean((a - b) ** 2)))


def step_transient_spec(seed=0, n=1000, sigma_w=0.20, rate=0.94):
    """Default jump-decay test signal: two slow sinusoids plus three
    alternating-sign step exponentials in white noise."""
    return SyntheticSpec(
        n=n,
        baseline=((1.0, 0.002, 0.0), (0.5, 0.005, 0.0)),
        transients=(
            (1, int(0.15 * n), 2.0, rate),
            (1, int(0.45 * n), -1.5, rate),
            (1, int(0.72 * n), 1.8, rate),
        ),
        sigma_w=sigma_w,
        seed=seed,
    )


def smooth_pulse_spec(seed=0, n=2000, sigma_w=0.30, rate=0.950):
    """Default smooth-pulse test signal: pulses of differing heights and
    signs built from the order-2 inverse recursion, over a slow baseline."""
    return SyntheticSpec(
        n=n,
        baseline=((1.0, 0.002, 0.0), (0.5, 0.005, 0.0)),
        transients=(
            (0, int(0.15 * n), 0.40, rate),
            (0, int(0.35 * n), -0.25, rate),
            (0, int(0.55 * n), 0.55, rate),
            (0, int(0.80 * n), 0.30, rate),
        ),
        sigma_w=sigma_w,
        seed=seed,
    )
