"""Norms and seminorms: the logarithmic Musielak weights and their Luxemburg
gauges, mean oscillation (BMO) with its augmented norm, sup-over-heights
Hardy norms, and Carleson-type tent energies with and without the
logarithmic weight.

Suprema over intervals run over a finite two-part family: every window whose
sample count is a power of two at every offset, plus node-centered windows
with radii from a 16-step logarithmic ladder.  The family is fixed and the
sweeps reduce in a deterministic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

import numpy as np

from .grid import (Grid1D, HalfPlaneField, NonIntegrableError,
                   PreconditionError, SampledFunction, integrate_window)

E = float(np.e)

_RADIUS_LADDER_STEPS = 16
_OSC_CHUNK = 1 << 22     # elements per sliding-window chunk


class BracketError(PreconditionError):
    """Luxemburg bracketing failed to enclose the unit-integral scale."""


# ---------------------------------------------------------------------------
# Musielak weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MusielakWeight:
    """One of the three position-dependent integrands.

    theta(x,t)  = t / (1 + log+|x| + 0.5*log+ t)
    theta0(x,t) = theta(x, t^2)
    theta1(x,t) = theta(x, t)^2
    """

    kind: str

    def __post_init__(self):
        if self.kind not in ("theta", "theta0", "theta1"):
            raise PreconditionError(f"unknown weight kind {self.kind!r}")


THETA = MusielakWeight("theta")
THETA0 = MusielakWeight("theta0")
THETA1 = MusielakWeight("theta1")


def _log_plus(s):
    return np.log(np.maximum(s, 1.0))


def _theta(x, t):
    return t / (1.0 + _log_plus(np.abs(x)) + 0.5 * _log_plus(t))


def weight_eval(w: MusielakWeight, x, t):
    """Evaluate the weight; scalar or broadcast arrays, t >= 0 required."""
    x = np.asarray(x, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    if np.any(t < 0):
        raise PreconditionError("weights are defined for t >= 0 only")
    if w.kind == "theta":
        out = _theta(x, t)
    elif w.kind == "theta0":
        out = _theta(x, t * t)
    else:
        out = _theta(x, t) ** 2
    return out if out.ndim else float(out)


# ---------------------------------------------------------------------------
# intervals, tents, reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """I(x0, r) = (x0 - r, x0 + r)."""

    x0: float
    r: float

    def __post_init__(self):
        if not self.r > 0:
            raise PreconditionError("interval radius must be positive")


@dataclass(frozen=True)
class Tent:
    """Carleson box over the base interval: |x-x0| < r, 0 < y < r."""

    base: Interval


@dataclass
class NormReport:
    """A computed norm value with solver/sweep diagnostics."""

    value: float
    attaining_parameter: object = None
    iterations: int = 0
    tolerance: float = 0.0
    flags: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if not (np.isfinite(self.value) and self.value >= 0):
            raise PreconditionError("norm value must be finite and nonnegative")

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "attaining_parameter": self.attaining_parameter,
            "iterations": self.iterations,
            "tolerance": self.tolerance,
            **({"flags": self.flags} if self.flags else {}),
        }


# ---------------------------------------------------------------------------
# Luxemburg gauge
# ---------------------------------------------------------------------------

def weight_integral(grid: Grid1D, magnitudes: np.ndarray, decay,
                    w: MusielakWeight, lam: float) -> float:
    """Integral of w(x, |f(x)|/lam) dx with the power-tail correction.

    The composed integrand decays at least as fast as |f| itself (the weight
    is dominated by t), so reusing the declared exponent overestimates the
    tail slightly; the bias is conservative and far below solver tolerance.
    """
    vals = weight_eval(w, grid.nodes, magnitudes / lam)
    total = grid.dx * (vals.sum() - 0.5 * (vals[0] + vals[-1]))
    if decay.tag == "power":
        x = grid.nodes
        total += (vals[0] * abs(x[0]) + vals[-1] * abs(x[-1])) / (decay.p - 1.0)
    return float(total)


def luxemburg_norm(f0: SampledFunction, w: MusielakWeight = THETA,
                   tol: float = 1e-8, max_doublings: int = 200) -> NormReport:
    """Gauge norm inf{lam > 0 : integral of w(x, |f|/lam) <= 1}.

    The defining integral is continuous and strictly decreasing in lam where
    f is nonzero, so a doubling bracket plus bisection converges; the report
    carries the bracket and the achieved integral.
    """
    if not f0.decay.integrable:
        raise NonIntegrableError("Luxemburg gauge needs integrable decay")
    mags = np.abs(f0.values)
    if not mags.any():
        return NormReport(0.0, attaining_parameter=None, iterations=0,
                          tolerance=tol)
    grid = f0.grid

    def phi(lam):
        return weight_integral(grid, mags, f0.decay, w, lam)

    guess = grid.dx * mags.sum() + 1e-300
    lo = hi = guess
    its = 0
    if phi(guess) > 1.0:
        while phi(hi) > 1.0:
            hi *= 2.0
            its += 1
            if its > max_doublings:
                raise BracketError("no upper bracket after 200 doublings")
    else:
        while phi(lo) <= 1.0:
            lo *= 0.5
            its += 1
            if its > max_doublings:
                raise BracketError("no lower bracket after 200 doublings")
    # invariant: phi(lo) > 1 >= phi(hi)
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        val = phi(mid)
        its += 1
        if abs(val - 1.0) <= tol:
            break
        if val > 1.0:
            lo = mid
        else:
            hi = mid
    return NormReport(float(mid), attaining_parameter=None, iterations=its,
                      tolerance=tol,
                      flags={"integral": phi(mid), "bracket": [lo, hi]})


# ---------------------------------------------------------------------------
# mean oscillation
# ---------------------------------------------------------------------------

def _window_counts(grid: Grid1D) -> list[int]:
    counts = set()
    c = 2
    while c <= grid.n:
        counts.add(c)
        c *= 2
    for r in np.geomspace(grid.dx, 2.0 * grid.L, _RADIUS_LADDER_STEPS):
        odd = 2 * int(np.floor(r / grid.dx)) + 1
        counts.add(min(max(odd, 3), grid.n))
    return sorted(counts)


def _class_oscillation(vals: np.ndarray, count: int):
    """Max mean|f - mean| over all windows of `count` samples; (max, offset)."""
    n = vals.size
    prefix = np.concatenate((np.zeros(1, dtype=vals.dtype), np.cumsum(vals)))
    means = (prefix[count:] - prefix[:-count]) / count
    best = -1.0
    best_off = 0
    chunk = max(1, _OSC_CHUNK // count)
    windows = np.lib.stride_tricks.sliding_window_view(vals, count)
    for start in range(0, n - count + 1, chunk):
        stop = min(start + chunk, n - count + 1)
        osc = np.abs(windows[start:stop] -
                     means[start:stop, None]).mean(axis=1)
        k = int(np.argmax(osc))
        if osc[k] > best:
            best = float(osc[k])
            best_off = start + k
    return best, best_off


def bmo_norm(f0: SampledFunction) -> NormReport:
    """Mean-oscillation seminorm: sup over the interval family of the window
    average of |f - window mean|.  Vanishes exactly on constants."""
    vals = f0.values.real if f0.is_real else f0.values
    grid = f0.grid
    best, best_iv, scanned = 0.0, None, 0
    for count in _window_counts(grid):
        osc, off = _class_oscillation(vals, count)
        scanned += grid.n - count + 1
        if osc > best:
            best = osc
            x0 = grid.nodes[off] + (count - 1) * grid.dx / 2.0
            best_iv = {"x0": float(x0), "r": count * grid.dx / 2.0}
    return NormReport(best, attaining_parameter=best_iv, iterations=scanned)


def bmo_plus_norm(f0: SampledFunction) -> NormReport:
    """Mean oscillation plus the L1 mass on (-1, 1), making a genuine norm."""
    rep = bmo_norm(f0)
    local = integrate_window(f0.grid, np.abs(f0.values), -1.0, 1.0)
    return NormReport(rep.value + local, attaining_parameter=rep.attaining_parameter,
                      iterations=rep.iterations,
                      flags={"oscillation": rep.value, "local_mass": local})


# ---------------------------------------------------------------------------
# sup-over-heights norms
# ---------------------------------------------------------------------------

def _lp_slice_integral(grid: Grid1D, slice_vals: np.ndarray, decay,
                       p: float) -> float:
    mags = np.abs(slice_vals) ** p
    total = grid.dx * (mags.sum() - 0.5 * (mags[0] + mags[-1]))
    if decay.tag == "power":
        q = decay.p * p
        if q <= 1.0:
            raise NonIntegrableError(
                f"|f|^{p:g} with tail exponent {q:g} is not integrable")
        x = grid.nodes
        total += (mags[0] * abs(x[0]) + mags[-1] * abs(x[-1])) / (q - 1.0)
    return float(total)


def hp_norm(field: HalfPlaneField, p: float) -> NormReport:
    """sup over ladder heights of the slice L^p integral, to the power 1/p."""
    if not p > 0:
        raise PreconditionError("p must be positive")
    if not field.decay.integrable:
        raise NonIntegrableError("field slices are not integrable")
    best, best_y = -1.0, None
    for k, y in enumerate(field.ladder.levels):
        j = _lp_slice_integral(field.grid, field.values[k], field.decay, p)
        if j > best:
            best, best_y = j, y
    return NormReport(best ** (1.0 / p), attaining_parameter=best_y,
                      iterations=field.ladder.count)


def hlog_norm(field: HalfPlaneField) -> NormReport:
    """sup over ladder heights of the slice Luxemburg gauge with theta."""
    best, best_y, its = -1.0, None, 0
    for k, y in enumerate(field.ladder.levels):
        rep = luxemburg_norm(field.slice_at(k))
        its += rep.iterations
        if rep.value > best:
            best, best_y = rep.value, y
    return NormReport(best, attaining_parameter=best_y, iterations=its,
                      tolerance=1e-8)


# ---------------------------------------------------------------------------
# tent energies
# ---------------------------------------------------------------------------

def spectral_derivative(field: HalfPlaneField) -> np.ndarray:
    """d/dx of each slice via the i*xi multiplier on the grid window.

    Exact for band-limited slices; for a holomorphic field this is the
    complex derivative."""
    xi = 2.0 * np.pi * np.fft.fftfreq(field.grid.n, d=field.grid.dx)
    spec = np.fft.fft(field.values, axis=1)
    return np.fft.ifft(spec * (1j * xi)[None, :], axis=1)


def _height_weights(levels: np.ndarray, r: float) -> Optional[np.ndarray]:
    """Quadrature weights for integral_0^r G(y) dy on ladder points below r.

    Linear-from-zero below the lowest point (the integrand carries a factor
    y, so G(0) = 0), trapezoid between points, constant hold up to r."""
    ys = levels[levels < r]
    if ys.size == 0:
        return None
    w = np.zeros(ys.size)
    if ys.size == 1:
        w[0] = 0.5 * ys[0] + (r - ys[0])
        return w
    gaps = np.diff(ys)
    w[0] = 0.5 * ys[0] + 0.5 * gaps[0]
    w[1:-1] = 0.5 * (gaps[:-1] + gaps[1:])
    w[-1] = 0.5 * gaps[-1] + (r - ys[-1])
    return w


def _tent_sweep(field: HalfPlaneField, energy: np.ndarray, ratio_fn):
    """sup over the interval family of ratio_fn applied to box integrals.

    energy[k, j] already contains the Jacobian factor y_k; ratio_fn maps
    (box_integrals, x0s, r) to per-offset ratios."""
    grid = field.grid
    levels = field.ladder.y
    prefix = np.concatenate(
        (np.zeros((levels.size, 1)), np.cumsum(energy, axis=1)), axis=1)
    best, best_iv, scanned = 0.0, None, 0
    for count in _window_counts(grid):
        r = count * grid.dx / 2.0
        w = _height_weights(levels, r)
        if w is None:
            continue
        sums = prefix[:w.size, count:] - prefix[:w.size, :-count]
        boxes = (w @ sums) * grid.dx
        x0s = grid.nodes[:boxes.size] + (count - 1) * grid.dx / 2.0
        ratios = ratio_fn(boxes, x0s, r)
        k = int(np.argmax(ratios))
        scanned += boxes.size
        if ratios[k] > best:
            best = float(ratios[k])
            best_iv = {"x0": float(x0s[k]), "r": r}
    return best, best_iv, scanned


def carleson_ratio(g_field: HalfPlaneField) -> NormReport:
    """sup over intervals of (1/|I|) integral over the box of |g'|^2 y dxdy."""
    d = spectral_derivative(g_field)
    energy = (np.abs(d) ** 2) * g_field.ladder.y[:, None]
    best, best_iv, scanned = _tent_sweep(
        g_field, energy, lambda boxes, x0s, r: boxes / (2.0 * r))
    return NormReport(best, attaining_parameter=best_iv, iterations=scanned)


def bmoa_log_seminorm(b_field: HalfPlaneField) -> NormReport:
    """Logarithmically weighted tent condition:
    sup (|log r| + log(e+|x0|))/r * box integral of |grad b|^2 y dxdy,
    with |grad b|^2 taken as 2|b'|^2 for holomorphic b."""
    d = spectral_derivative(b_field)
    energy = 2.0 * (np.abs(d) ** 2) * b_field.ladder.y[:, None]

    def ratio(boxes, x0s, r):
        return boxes * (abs(np.log(r)) + np.log(E + np.abs(x0s))) / r

    best, best_iv, scanned = _tent_sweep(b_field, energy, ratio)
    return NormReport(best, attaining_parameter=best_iv, iterations=scanned)
