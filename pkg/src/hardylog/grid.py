"""Uniform real-line sampling, tail-corrected quadrature, and the height ladder.

Everything here is immutable after construction and all operations are pure,
so concurrent use is safe.  Reductions are plain left-to-right numpy sums,
which keeps results bit-for-bit reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np


class PreconditionError(ValueError):
    """An operation was called with data violating its contract."""


class NonIntegrableError(PreconditionError):
    """Raised when quadrature is requested for a non-integrable decay class."""


# ---------------------------------------------------------------------------
# decay classes
# ---------------------------------------------------------------------------

_VALID_TAGS = ("rapid", "power", "log_growth")


@dataclass(frozen=True)
class DecayClass:
    """Tail behaviour of a sampled function beyond the grid window.

    ``rapid``      tails are numerically zero (Gaussians, compact support).
    ``power``      |f(x)| ~ |f(edge)| * (edge/|x|)**p with p > 1, so tails
                   integrate to a finite closed-form correction.
    ``log_growth`` no decay at all (may grow logarithmically); such functions
                   are never integrated directly and operations requiring
                   integrability reject them.
    """

    tag: str
    p: Optional[float] = None

    def __post_init__(self):
        if self.tag not in _VALID_TAGS:
            raise PreconditionError(f"unknown decay tag {self.tag!r}")
        if self.tag == "power":
            if self.p is None or not self.p > 1.0:
                raise PreconditionError("power decay requires p > 1")
        elif self.p is not None:
            raise PreconditionError(f"decay tag {self.tag!r} takes no exponent")

    @property
    def integrable(self) -> bool:
        return self.tag != "log_growth"

    def __str__(self) -> str:
        return f"power:{self.p:g}" if self.tag == "power" else self.tag

    @classmethod
    def parse(cls, text: str) -> "DecayClass":
        if text.startswith("power:"):
            return cls("power", float(text.split(":", 1)[1]))
        return cls(text)


RAPID = DecayClass("rapid")
LOG_GROWTH = DecayClass("log_growth")


def power_decay(p: float) -> DecayClass:
    return DecayClass("power", p)


# ---------------------------------------------------------------------------
# grid
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Grid1D:
    """Uniform symmetric grid x_j = -L + j*dx, j = 0..n-1, dx = 2L/n."""

    L: float
    n: int
    _nodes: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nodes = -self.L + self.dx * np.arange(self.n)
        nodes.setflags(write=False)
        object.__setattr__(self, "_nodes", nodes)

    @property
    def dx(self) -> float:
        return 2.0 * self.L / self.n

    @property
    def nodes(self) -> np.ndarray:
        return self._nodes

    def index_of(self, x: float) -> int:
        """Nearest-node index for a coordinate inside the window."""
        j = int(round((x + self.L) / self.dx))
        if not 0 <= j < self.n:
            raise PreconditionError(f"x={x} outside grid window [{-self.L}, {self.L})")
        return j


def make_grid(L: float, n: int) -> Grid1D:
    """Build the uniform grid; n must be a power of two, n >= 16, L > 0."""
    if not L > 0:
        raise PreconditionError(f"half-width must be positive, got {L}")
    if n < 16 or (n & (n - 1)) != 0:
        raise PreconditionError(f"sample count must be a power of two >= 16, got {n}")
    return Grid1D(float(L), int(n))


# ---------------------------------------------------------------------------
# sampled boundary functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SampledFunction:
    """Complex samples on a Grid1D with declared tail behaviour.

    ``continuation``, when given, evaluates the function off-grid in closed
    form; convolution-type operators use it to fill extended windows and
    analytic tails.  ``bounded`` flags sup-norm finiteness over the whole
    line (inferred for decaying classes, must be stated for log_growth).
    """

    grid: Grid1D
    values: np.ndarray
    decay: DecayClass
    continuation: Optional[Callable[[np.ndarray], np.ndarray]] = field(
        default=None, compare=False)
    bounded: Optional[bool] = None

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != (self.grid.n,):
            raise PreconditionError(
                f"value count {vals.shape} does not match grid n={self.grid.n}")
        if not np.all(np.isfinite(vals.view(np.float64))):
            raise PreconditionError("sampled values must all be finite")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        if self.bounded is None:
            object.__setattr__(self, "bounded", self.decay.integrable)

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.values.imag == 0.0))

    def with_values(self, values: np.ndarray, decay: Optional[DecayClass] = None,
                    continuation=None, bounded: Optional[bool] = None) -> "SampledFunction":
        return SampledFunction(self.grid, values,
                               self.decay if decay is None else decay,
                               continuation, bounded)

    def abs(self) -> "SampledFunction":
        cont = self.continuation
        return SampledFunction(
            self.grid, np.abs(self.values), self.decay,
            None if cont is None else (lambda u, c=cont: np.abs(c(u))),
            self.bounded)


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

def _trapezoid(values: np.ndarray, dx: float):
    """Composite trapezoid over the sampled window [-L, L-dx]."""
    return dx * (values.sum() - 0.5 * (values[0] + values[-1]))


def _power_tail(f: SampledFunction):
    """Closed-form tail integral assuming |f| ~ |f(edge)|*(edge/x)**p outside."""
    p = f.decay.p
    x = f.grid.nodes
    left = f.values[0] * abs(x[0]) / (p - 1.0)
    right = f.values[-1] * abs(x[-1]) / (p - 1.0)
    return left + right


def integrate(f: SampledFunction):
    """Quadrature of f over the whole line: trapezoid core plus analytic tail.

    Deterministic (fixed summation order).  Returns a float for real input,
    complex otherwise.  Rejects log_growth decay.
    """
    if not f.decay.integrable:
        raise NonIntegrableError("non-integrable decay class log_growth")
    total = _trapezoid(f.values, f.grid.dx)
    if f.decay.tag == "power":
        total = total + _power_tail(f)
    if f.is_real:
        return float(total.real)
    return complex(total)


def integrate_window(grid: Grid1D, values: np.ndarray, a: float, b: float) -> float:
    """Integral of the piecewise-linear interpolant of real samples over [a, b].

    Outside the sampled window the edge value is held constant (the window
    overhang is at most one cell in practice).
    """
    if b <= a:
        raise PreconditionError("empty integration window")
    vals = np.asarray(values, dtype=np.float64)
    x = grid.nodes
    inside = x[(x > a) & (x < b)]
    pts = np.concatenate(([a], inside, [b]))
    fv = np.interp(pts, x, vals)
    return float(np.trapezoid(fv, pts))


# ---------------------------------------------------------------------------
# height ladder and half-plane fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HeightLadder:
    """Strictly increasing positive heights, logarithmically spaced."""

    levels: tuple

    def __post_init__(self):
        y = np.asarray(self.levels, dtype=np.float64)
        if y.size < 8:
            raise PreconditionError("ladder needs at least 8 levels")
        if y[0] <= 0:
            raise PreconditionError("ladder heights must be positive")
        if not np.all(np.diff(y) > 0):
            raise PreconditionError("ladder heights must be strictly increasing")
        if y[-1] < 1.0:
            raise PreconditionError("ladder must reach y_max >= 1")
        object.__setattr__(self, "levels", tuple(float(v) for v in y))

    @property
    def y(self) -> np.ndarray:
        return np.asarray(self.levels)

    @property
    def count(self) -> int:
        return len(self.levels)


def make_ladder(y_min: float, y_max: float, count: int = 48) -> HeightLadder:
    """Logarithmically spaced ladder from y_min to y_max."""
    if y_min <= 0 or y_max <= y_min:
        raise PreconditionError("need 0 < y_min < y_max")
    return HeightLadder(tuple(np.geomspace(y_min, y_max, count)))


@dataclass(frozen=True)
class HalfPlaneField:
    """Values f(x_j + i*y_k) on grid x ladder; row k is the height-y_k slice."""

    grid: Grid1D
    ladder: HeightLadder
    values: np.ndarray
    decay: DecayClass

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != (self.ladder.count, self.grid.n):
            raise PreconditionError(
                f"field shape {vals.shape} does not match ladder x grid "
                f"({self.ladder.count}, {self.grid.n})")
        if not np.all(np.isfinite(vals.view(np.float64))):
            raise PreconditionError("field values must all be finite")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def slice_at(self, k: int) -> SampledFunction:
        return SampledFunction(self.grid, self.values[k], self.decay)


def sample_field(grid: Grid1D, ladder: HeightLadder,
                 fn: Callable[[np.ndarray], np.ndarray],
                 decay: DecayClass = RAPID) -> HalfPlaneField:
    """Evaluate a closed-form function of z = x + iy on grid x ladder."""
    z = grid.nodes[None, :] + 1j * ladder.y[:, None]
    return HalfPlaneField(grid, ladder, fn(z), decay)


# ---------------------------------------------------------------------------
# columnar serialization:  "# L=<real> n=<int> decay=<tag>" then "x re im"
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(
    r"^#\s*L=([^\s]+)\s+n=(\d+)\s+decay=([^\s]+)\s*$")


def save_function(f: SampledFunction, path) -> None:
    lines = [f"# L={f.grid.L:.17g} n={f.grid.n} decay={f.decay}"]
    for x, v in zip(f.grid.nodes, f.values):
        lines.append(f"{x:.17g} {v.real:.17g} {v.imag:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_function(path) -> SampledFunction:
    text = Path(path).read_text().strip().splitlines()
    if not text:
        raise PreconditionError(f"{path}: empty function file")
    m = _HEADER_RE.match(text[0])
    if not m:
        raise PreconditionError(f"{path}: malformed header {text[0]!r}")
    L, n, decay = float(m.group(1)), int(m.group(2)), DecayClass.parse(m.group(3))
    rows = [ln.split() for ln in text[1:] if ln.strip()]
    if len(rows) != n:
        raise PreconditionError(f"{path}: expected {n} samples, found {len(rows)}")
    vals = np.array([float(r[1]) + 1j * float(r[2]) for r in rows])
    return SampledFunction(make_grid(L, n), vals, decay)
