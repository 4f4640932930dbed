"""Hardy-Littlewood and nontangential (cone) maximal operators.

The interval sweep runs over all windows whose sample count is a power of
two, at every offset: O(n log n) via monotone sliding maxima, and within a
factor two of the supremum over all sample-aligned intervals (covering any
interval by two power-of-two windows shows the discrete sup is bracketed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.ndimage import maximum_filter1d

from .grid import (HalfPlaneField, LOG_GROWTH, PreconditionError,
                   SampledFunction)


@dataclass(frozen=True)
class Cone:
    """Aperture-one cone {u+iy : |u-apex| < y, 0 < y <= y_max}."""

    apex: float
    y_max: float
    aperture: float = 1.0

    def __post_init__(self):
        if self.aperture != 1.0:
            raise PreconditionError("cone aperture is fixed to 1")
        if not self.y_max > 0:
            raise PreconditionError("cone truncation height must be positive")

    def contains(self, u: float, y: float) -> bool:
        return 0.0 < y <= self.y_max and abs(u - self.apex) < y


def _trailing_window_max(a: np.ndarray, size: int) -> np.ndarray:
    """out[j] = max(a[max(0, j-size+1) .. j])."""
    if size == 1:
        return a.copy()
    # positive origin shifts the filter window onto trailing indices
    return maximum_filter1d(a, size=size, mode="constant", cval=-np.inf,
                            origin=(size - 1) // 2)


def max_interval_average(values: np.ndarray) -> np.ndarray:
    """Per-node sup of window averages of |values| over power-of-two windows.

    Internal sweep without the decay gate; hl_maximal is the public wrapper.
    """
    a = np.abs(np.asarray(values))
    n = a.size
    prefix = np.concatenate(([0.0], np.cumsum(a)))
    best = a.copy()
    size = 2
    while size <= n:
        avgs = (prefix[size:] - prefix[:-size]) / size
        padded = np.concatenate((avgs, np.full(size - 1, -np.inf)))
        np.maximum(best, _trailing_window_max(padded, size), out=best)
        size *= 2
    return best


def hl_maximal(f0: SampledFunction) -> SampledFunction:
    """Uncentered maximal function over sample-aligned windows containing x.

    Dominates |f0| pointwise and is exactly sublinear.  Output carries the
    no-decay marker: maximal functions of integrable data decay only like
    1/x and are never integrated downstream.
    """
    if f0.decay.tag == "log_growth" and f0.bounded is not True:
        raise PreconditionError(
            "maximal averages of unbounded log_growth data diverge; rejected")
    out = max_interval_average(f0.values)
    return SampledFunction(f0.grid, out, LOG_GROWTH, bounded=True)


def nontangential_max(field: HalfPlaneField, y_max: float | None = None
                      ) -> SampledFunction:
    """Cone maximal function f*(x_j) = sup |field| over ladder points in the
    aperture-one cone above x_j, truncated at y_max (default: ladder top)."""
    grid, ladder = field.grid, field.ladder
    if y_max is None:
        y_max = ladder.levels[-1]
    if not y_max > 0:
        raise PreconditionError("y_max must be positive")
    if y_max * (1.0 + 1e-12) < ladder.levels[0]:
        raise PreconditionError("y_max truncates below the lowest ladder level")
    mags = np.abs(field.values)
    best = np.full(grid.n, -np.inf)
    tol = 1.0 + 1e-12
    for k, y in enumerate(ladder.levels):
        if y > y_max * tol:
            break
        # offsets with |i|*dx < y, strictly
        half = int(np.ceil(y / grid.dx - 1e-12)) - 1
        row = mags[k]
        if half > 0:
            row = maximum_filter1d(row, size=2 * half + 1, mode="constant",
                                   cval=-np.inf)
        np.maximum(best, row, out=best)
    return SampledFunction(grid, best, field.decay, bounded=True)
