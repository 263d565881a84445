"""Spectral time evolution of wave packets in V = lambda |x|.

A packet is projected onto the eigenbasis once, then evolved by phase
rotation: phi(x, t) = sum_n c_n exp(-i t E_n) psi_n(x).  Because the
energies are incommensurate Airy-zero roots, the motion never repeats
exactly; the classical bounce decoheres into a plateau and later
revives when neighboring phase differences realign.

The mean position <x>(t) reproduces that cycle.  All propagation is
exact up to the quality of the projection; there is no time stepping
and no accumulating integration error.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PrecisionError
from .quadrature import WaveFunction, inner_product

__all__ = [
    "GaussianPacketParams",
    "SpectralCoefficients",
    "gaussian_packet",
    "project",
    "evolve",
    "mean_position",
    "trajectory",
]

_CLIP_TOL = 1e-12
_NORM_SLACK = 1e-6


@dataclass(frozen=True)
class GaussianPacketParams:
    """Center x0 and width sigma of (2/(pi sigma^2))^(1/4) e^(-(x-x0)^2/sigma^2)."""

    x0: float
    sigma: float

    def __post_init__(self):
        if not (np.isfinite(self.sigma) and self.sigma > 0.0):
            raise DomainError("packet width sigma must be positive")
        if not np.isfinite(self.x0):
            raise DomainError("packet center x0 must be finite")


@dataclass(frozen=True)
class SpectralCoefficients:
    """Expansion coefficients tied to the basis they were computed in."""

    basis_tag: str
    c: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.c, dtype=complex)
        if c.ndim != 1 or len(c) == 0:
            raise DomainError("coefficients must form a non-empty vector")
        if not np.all(np.isfinite(c)):
            raise DomainError("coefficients must be finite")
        object.__setattr__(self, "c", c)

    @property
    def weight(self):
        """Total captured probability sum |c_n|^2."""
        return float(np.sum(np.abs(self.c) ** 2))


def gaussian_packet(params, grid):
    """Unit-norm Gaussian; fails if the grid clips its tails."""
    arg = (grid.points - params.x0) / params.sigma
    vals = (2.0 / (np.pi * params.sigma**2)) ** 0.25 * np.exp(-(arg**2))
    if vals[0] >= _CLIP_TOL or vals[-1] >= _CLIP_TOL:
        raise PrecisionError(
            "gaussian packet is clipped by the grid: "
            f"edge values {vals[0]:.2e}, {vals[-1]:.2e} exceed {_CLIP_TOL:.0e}"
        )
    return WaveFunction(grid=grid, samples=vals.astype(complex))


def project(phi, basis):
    """Coefficients c_n = <psi_n|phi> of phi in the eigenbasis."""
    if phi.grid is not basis.grid and phi.grid != basis.grid:
        raise DomainError("wavefunction and basis use different grids")
    weighted = basis.grid.weights * phi.samples
    c = basis.psi_matrix @ weighted
    # Bessel: captured probability cannot exceed the input norm
    if np.sum(np.abs(c) ** 2) > np.sum(
        basis.grid.weights * np.abs(phi.samples) ** 2
    ) * (1.0 + 1e-8):
        raise PrecisionError("projection exceeds the input norm; grid too coarse")
    return SpectralCoefficients(basis_tag=basis.tag, c=c)


def _check_tag(coeffs, basis):
    if coeffs.basis_tag != basis.tag:
        raise DomainError(
            f"coefficients belong to basis {coeffs.basis_tag!r}, "
            f"not {basis.tag!r}"
        )
    if len(coeffs.c) != len(basis.states):
        raise DomainError("coefficient count does not match basis size")


def evolve(coeffs, basis, t):
    """phi(x, t) = sum_n c_n exp(-i t E_n) psi_n(x)."""
    _check_tag(coeffs, basis)
    phases = np.exp(-1j * t * basis.energies)
    samples = (coeffs.c * phases) @ basis.psi_matrix
    return WaveFunction(grid=basis.grid, samples=samples.astype(complex))


def mean_position(phi):
    """<x> = int x |phi|^2 dx for unit-norm phi.

    A norm within 1e-6 of unity is renormalized silently (quadrature
    drift); anything worse is treated as a caller error.
    """
    w = phi.grid.weights
    dens = np.abs(phi.samples) ** 2
    nrm2 = float(np.sum(w * dens))
    if abs(nrm2 - 1.0) >= _NORM_SLACK:
        raise DomainError(
            f"mean_position needs a unit-norm state, got norm^2 = {nrm2:.8f}"
        )
    return float(np.sum(w * phi.grid.points * dens) / nrm2)


def trajectory(params, basis, times, batch=256):
    """Mean position of an evolving Gaussian packet at each time.

    Composition of gaussian_packet, project, evolve and mean_position,
    batched over times so long scans stay cheap.
    """
    coeffs = project(gaussian_packet(params, basis.grid), basis)
    t_arr = np.asarray(times, dtype=float)
    if t_arr.ndim != 1:
        raise DomainError("times must be a flat sequence")

    w = basis.grid.weights
    xw = basis.grid.weights * basis.grid.points
    means = np.empty(len(t_arr))
    for lo in range(0, len(t_arr), batch):
        hi = min(lo + batch, len(t_arr))
        phases = np.exp(
            -1j * t_arr[lo:hi, None] * basis.energies[None, :]
        )
        block = (coeffs.c[None, :] * phases) @ basis.psi_matrix
        dens = block.real**2 + block.imag**2
        nrm2 = dens @ w
        if np.max(np.abs(nrm2 - 1.0)) >= _NORM_SLACK:
            raise DomainError("evolved norm drifted beyond 1e-6; grid too coarse")
        means[lo:hi] = (dens @ xw) / nrm2
    return list(zip(t_arr.tolist(), means.tolist()))
