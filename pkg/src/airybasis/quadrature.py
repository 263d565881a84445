"""Uniform grids, sampled wavefunctions, and Simpson inner products.

The inner product is <f, g> = int conj(f) g dx by the composite Simpson
rule.  Simpson needs an even interval count; on an odd count the last
interval falls back to the trapezoid rule so any n_points >= 3 works.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DomainError

__all__ = [
    "Grid",
    "WaveFunction",
    "make_grid",
    "sample",
    "inner_product",
    "simpson_weights",
    "default_grid",
]


@dataclass(frozen=True)
class Grid:
    """Uniform real-axis grid; points are exactly x_min + i * spacing."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not (np.isfinite(self.x_min) and np.isfinite(self.x_max)):
            raise DomainError("grid endpoints must be finite")
        if not self.x_min < self.x_max:
            raise DomainError("grid needs x_min < x_max")
        if int(self.n_points) != self.n_points or self.n_points < 3:
            raise DomainError("grid needs an integer n_points >= 3")

    @property
    def spacing(self):
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @cached_property
    def points(self):
        pts = self.x_min + self.spacing * np.arange(self.n_points)
        pts.flags.writeable = False
        return pts

    @cached_property
    def weights(self):
        w = simpson_weights(self)
        w.flags.writeable = False
        return w

    def is_symmetric(self, tol=1e-12):
        return abs(self.x_min + self.x_max) <= tol * (self.x_max - self.x_min)


def make_grid(x_min, x_max, n_points):
    """Build a validated uniform grid."""
    return Grid(x_min=float(x_min), x_max=float(x_max), n_points=int(n_points))


def default_grid():
    """Production grid for lambda = 1 work, adequate through ~60 states."""
    return make_grid(-40.0, 40.0, 8001)


def simpson_weights(grid):
    """Composite Simpson weights; trapezoid patch on a leftover interval."""
    n = grid.n_points
    h = grid.spacing
    w = np.zeros(n)
    m = n - 1                     # interval count
    if m % 2 == 0:
        w[0] = w[-1] = 1.0
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w *= h / 3.0
    else:
        # Simpson over the first m-1 intervals, trapezoid over the last
        w[0] = w[m - 1] = 1.0
        w[1:m - 1:2] = 4.0
        w[2:m - 1:2] = 2.0
        w *= h / 3.0
        w[m - 1] += 0.5 * h
        w[m] += 0.5 * h
    return w


@dataclass
class WaveFunction:
    """Complex samples bound to the grid they were taken on."""

    grid: Grid
    samples: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.samples, dtype=complex)
        if vals.shape != (self.grid.n_points,):
            raise DomainError(
                f"samples shape {vals.shape} does not match grid "
                f"({self.grid.n_points} points)"
            )
        if not np.all(np.isfinite(vals)):
            raise DomainError("samples must be finite")
        self.samples = vals

    def norm(self):
        """Quadrature L2 norm."""
        return float(np.sqrt(np.real(inner_product(self, self))))


def sample(fn, grid):
    """Sample a callable on a grid; accepts vectorized or scalar callables."""
    pts = grid.points
    try:
        vals = np.asarray(fn(pts), dtype=complex)
        if vals.shape != pts.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([fn(x) for x in pts], dtype=complex)
    return WaveFunction(grid=grid, samples=vals)


def inner_product(f, g):
    """<f, g> = int conj(f) g dx on the shared grid."""
    if f.grid != g.grid:
        raise DomainError("inner product requires a shared grid")
    return complex(np.sum(f.grid.weights * np.conj(f.samples) * g.samples))
