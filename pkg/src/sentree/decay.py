"""Long-term decay envelope of rotary position embeddings.

For model dimension d (even) and frequency base b, the relative
attenuation of the rotary inner product at distance m is bounded by the
normalized phasor sum

    c(m) = | sum_{j=0}^{d/2-1} exp(i * m * theta_j) | / (d/2),
    theta_j = b^(-2j/d)

so c(0) = 1 and 0 < c(m) <= 1. The curve oscillates, so decay holds for
windowed averages rather than pointwise: :func:`check_decay` compares the
mean over a near window against the mean over a far window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidDimension, InvalidWindow

#: Inclusive integer window (low, high) of relative distances.
Window = tuple[int, int]


@dataclass(frozen=True)
class DecayCurve:
    dim: int
    base: float
    values: tuple[float, ...]  # values[m] = c(m), m = 0..max_dist

    @property
    def max_dist(self) -> int:
        return len(self.values) - 1


def decay_curve(dim: int, max_dist: int, base: float = 10000.0) -> DecayCurve:
    """Evaluate c(m) for m = 0..max_dist.

    Deterministic: frequencies are summed in fixed order j = 0..d/2-1
    (sequential accumulation), so repeated runs agree bit for bit.
    """
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 2 or dim % 2:
        raise InvalidDimension(f"dim must be an even integer >= 2, got {dim!r}")
    if max_dist < 1:
        raise ValueError(f"max_dist must be >= 1, got {max_dist!r}")
    if not base > 0:
        raise ValueError(f"base must be positive, got {base!r}")

    half = dim // 2
    theta = float(base) ** (-2.0 * np.arange(half) / dim)
    phasors = np.exp(1j * np.arange(max_dist + 1)[:, None] * theta[None, :])
    totals = np.cumsum(phasors, axis=1)[:, -1]
    # |sum| <= d/2 analytically; float rounding can overshoot by one ulp.
    values = np.minimum(np.abs(totals) / half, 1.0)
    return DecayCurve(dim, float(base), tuple(float(v) for v in values))


def _check_window(curve: DecayCurve, window: Window, name: str) -> Window:
    try:
        low, high = window
    except (TypeError, ValueError):
        raise InvalidWindow(f"{name} window must be a (low, high) pair") from None
    for bound in (low, high):
        if isinstance(bound, bool) or not isinstance(bound, (int, float)):
            raise InvalidWindow(f"{name} window bounds must be numbers")
    if low != int(low) or high != int(high):
        raise InvalidWindow(f"{name} window bounds must be integers")
    low, high = int(low), int(high)
    if not (1 <= low <= high <= curve.max_dist):
        raise InvalidWindow(
            f"{name} window [{low}, {high}] not within [1, {curve.max_dist}]"
        )
    return low, high


def window_mean(curve: DecayCurve, window: Window) -> float:
    """Mean of c over an inclusive distance window."""
    low, high = _check_window(curve, window, "requested")
    span = curve.values[low : high + 1]
    return sum(span) / len(span)


def check_decay(curve: DecayCurve, near_window: Window, far_window: Window) -> bool:
    """True iff the near-window mean strictly exceeds the far-window mean.

    Windows must be disjoint with the near window entirely before the far
    one; anything else raises :class:`InvalidWindow`.
    """
    near = _check_window(curve, near_window, "near")
    far = _check_window(curve, far_window, "far")
    if near[1] >= far[0]:
        raise InvalidWindow(
            f"near window {near} must end before far window {far} begins"
        )
    return window_mean(curve, near) > window_mean(curve, far)
