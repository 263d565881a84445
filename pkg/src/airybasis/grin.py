"""Paraxial beam propagation in a symmetric linear GRIN medium.

A graded index n(x)^2 = n0^2 (1 - alpha|x|) reduces, to first order in
the paraxial expansion, to a Schrodinger equation in the propagation
coordinate z with kappa = k n0 playing the role of mass and
2 lambda = k^2 n0^2 alpha setting the potential slope.  Propagation is
therefore the spectral evolution of the eigenbasis of V = lambda|x|
with z = -kappa t:

    E(x, z) = e^(-i kappa z) sum_n c_n e^(+i z E_n / kappa) psi_n(x).

The symmetric Airy-type wavelet sqrt(C) Ai(x+q) Ai(-x+q) is the
initial field of interest; propagated, it splits into two transverse
lobes that interfere and periodically refocus.
"""

from dataclasses import dataclass

import numpy as np

from .airy import ai_values
from .errors import DomainError, PrecisionError
from .quadrature import WaveFunction, inner_product
from .dynamics import project

__all__ = [
    "GrinMedium",
    "WaveletParams",
    "airy_wavelet",
    "propagate_grin",
    "intensity_map",
]

_TAIL_TOL = 1e-8


@dataclass(frozen=True)
class GrinMedium:
    """Wavenumber kappa = k n0 and slope lambda of the reduced problem."""

    kappa: float
    lam: float

    def __post_init__(self):
        if not (np.isfinite(self.kappa) and self.kappa > 0.0):
            raise DomainError("kappa must be positive")
        if not (np.isfinite(self.lam) and self.lam > 0.0):
            raise DomainError("lambda must be positive")


@dataclass(frozen=True)
class WaveletParams:
    """Shift parameter q of the wavelet Ai(x+q) Ai(-x+q)."""

    q: float

    def __post_init__(self):
        if not np.isfinite(self.q):
            raise DomainError("shift parameter q must be finite")


def airy_wavelet(params, grid):
    """Unit-norm samples of sqrt(C) Ai(x+q) Ai(-x+q).

    The grid must be symmetric so the even symmetry of the product is
    exact in floating point, and wide enough that the field has decayed
    below 1e-8 at the ends.
    """
    if not grid.is_symmetric():
        raise DomainError("airy wavelet needs a symmetric grid")
    x = grid.points
    vals = ai_values(x + params.q) * ai_values(-x + params.q)
    nrm = np.sqrt(np.sum(grid.weights * vals**2))
    if abs(vals[0]) / nrm >= _TAIL_TOL or abs(vals[-1]) / nrm >= _TAIL_TOL:
        raise PrecisionError("wavelet tail has not decayed at the grid edge")
    return WaveFunction(grid=grid, samples=(vals / nrm).astype(complex))


_MIN_CAPTURE = 0.99


def _project_field(field0, medium, basis):
    if medium.lam != basis.lam:
        raise DomainError(
            f"medium slope {medium.lam!r} does not match basis slope "
            f"{basis.lam!r}"
        )
    coeffs = project(field0, basis)
    if coeffs.weight < _MIN_CAPTURE:
        raise PrecisionError(
            f"basis captures only {coeffs.weight:.4f} of the field power; "
            "enlarge the basis or the grid"
        )
    return coeffs


def propagate_grin(field0, medium, basis, z):
    """Field at depth z of the first-order paraxial propagator.

    Returns the raw truncated spectral field, identical to backward
    time evolution at t = -z/kappa times the plane-wave phase; any
    power the basis fails to capture (at most 1 percent) stays missing
    here.  intensity_map is the place that renormalizes.
    """
    coeffs = _project_field(field0, medium, basis)
    phases = np.exp(1j * (z / medium.kappa) * basis.energies)
    samples = np.exp(-1j * medium.kappa * z) * (
        (coeffs.c * phases) @ basis.psi_matrix
    )
    return WaveFunction(grid=basis.grid, samples=samples.astype(complex))


def intensity_map(field0, medium, basis, z_samples, batch=256):
    """Rows of |E(x, z)|^2, one per z sample, each of unit power.

    The global phase drops out of the intensity.  The projection loses
    a little power to basis truncation; since the propagator itself is
    unitary, rows are renormalized by the captured weight so each
    integrates to 1.
    """
    coeffs = _project_field(field0, medium, basis)
    z_arr = np.asarray(z_samples, dtype=float)
    if z_arr.ndim != 1:
        raise DomainError("z_samples must be a flat sequence")
    scaled = coeffs.c / np.sqrt(coeffs.weight)
    out = np.empty((len(z_arr), len(basis.grid.points)))
    for lo in range(0, len(z_arr), batch):
        hi = min(lo + batch, len(z_arr))
        phases = np.exp(
            1j * (z_arr[lo:hi, None] / medium.kappa) * basis.energies[None, :]
        )
        block = (scaled[None, :] * phases) @ basis.psi_matrix
        out[lo:hi] = block.real**2 + block.imag**2
    return out
