"""Continuum Airy states of the linear potential V(x) = |k| x.

The energy-E eigenstate of -(1/2) d^2/dx^2 + |k| x is

    psi_E(x) = (2|k|)^(1/6) Ai((2|k|)^(1/3) (x - E/|k|)),

delta-normalized in energy.  The same profile is a squeezed and
displaced copy of the bare Airy function: with squeeze
S(r): f(x) -> e^(r/2) f(e^r x) and displacement
D(alpha): f(x) -> f(x - sqrt(2) alpha),

    psi_E = D(E / (sqrt(2)|k|)) S(ln (2|k|)^(1/3)) Ai.

Displaced profiles Ai(x - gamma) are eigenfunctions of p^2 + x with
eigenvalue gamma, and under V = |k| x a gamma-displacement costs
energy E' = ((2|k|)^(2/3)/2) gamma + E.  The family is complete:
smearing a localized f through the Ai(x - gamma) kernel returns f.
Reflection x -> -x maps the problem onto the slope -|k| one, so the
spectrum does not depend on the sign of the slope.
"""

from dataclasses import dataclass

import numpy as np

from .airy import ai_values
from .errors import DomainError
from .quadrature import Grid, WaveFunction

__all__ = [
    "LinearPotentialParams",
    "DisplacedAiryParams",
    "SqueezeDisplaceParams",
    "psi_E",
    "displaced_airy",
    "shifted_energy",
    "apply_displaced_squeeze",
    "parity_reflect",
    "completeness_smear",
]


@dataclass(frozen=True)
class LinearPotentialParams:
    """Slope |k| and continuum eigenvalue E of V = |k| x."""

    k_abs: float
    energy: float

    def __post_init__(self):
        if not (np.isfinite(self.k_abs) and self.k_abs > 0.0):
            raise DomainError("potential slope k_abs must be positive")
        if not np.isfinite(self.energy):
            raise DomainError("energy must be finite")


@dataclass(frozen=True)
class DisplacedAiryParams:
    """Displacement eigenvalue gamma of the p^2 + x eigenproblem."""

    gamma: float

    def __post_init__(self):
        if not np.isfinite(self.gamma):
            raise DomainError("displacement gamma must be finite")


@dataclass(frozen=True)
class SqueezeDisplaceParams:
    """Squeeze r then displacement alpha, applied as D(alpha) S(r)."""

    r: float
    alpha: float

    def __post_init__(self):
        if not (np.isfinite(self.r) and np.isfinite(self.alpha)):
            raise DomainError("squeeze and displacement must be finite")

    @classmethod
    def for_linear_potential(cls, params):
        """Parameters that turn the bare Ai into psi_E."""
        return cls(
            r=np.log((2.0 * params.k_abs) ** (1.0 / 3.0)),
            alpha=params.energy / (np.sqrt(2.0) * params.k_abs),
        )


def psi_E(params, grid):
    """Continuum eigenstate at energy E; delta-normalized, not unit-norm."""
    scale = (2.0 * params.k_abs) ** (1.0 / 3.0)
    vals = (2.0 * params.k_abs) ** (1.0 / 6.0) * ai_values(
        scale * (grid.points - params.energy / params.k_abs)
    )
    return WaveFunction(grid=grid, samples=vals.astype(complex))


def displaced_airy(params, grid):
    """Ai(x - gamma); eigenprofile of p^2 + x with eigenvalue gamma."""
    return WaveFunction(
        grid=grid,
        samples=ai_values(grid.points - params.gamma).astype(complex),
    )


def shifted_energy(energy, k_abs, gamma):
    """Energy of the gamma-displaced state: ((2|k|)^(2/3)/2) gamma + E."""
    if not (np.isfinite(k_abs) and k_abs > 0.0):
        raise DomainError("potential slope k_abs must be positive")
    return 0.5 * (2.0 * k_abs) ** (2.0 / 3.0) * gamma + energy


def apply_displaced_squeeze(f, params):
    """D(alpha) S(r) acting on a profile generator.

    Given callable f, returns x -> e^(r/2) f(e^r (x - sqrt(2) alpha)).
    """
    er = np.exp(params.r)
    amp = np.exp(0.5 * params.r)
    shift = np.sqrt(2.0) * params.alpha

    def transformed(x):
        return amp * f(er * (np.asarray(x, dtype=float) - shift))

    return transformed


def parity_reflect(wf):
    """Samples of x -> -x; needs a symmetric grid, where reversal is exact."""
    if not wf.grid.is_symmetric():
        raise DomainError("parity reflection needs a symmetric grid")
    return WaveFunction(grid=wf.grid, samples=wf.samples[::-1].copy())


def completeness_smear(f, gamma_grid, chunk=512):
    """Resolve f through the displaced-Airy family and rebuild it.

    g(x) = int dgamma Ai(x - gamma) [int dy Ai(y - gamma) f(y)].  With a
    gamma window wide enough for f's support, g approximates f; the
    deficit measures how much of the identity the window misses.
    """
    x = f.grid.points
    wx = f.grid.weights
    gam = gamma_grid.points
    wg = gamma_grid.weights

    fv = f.samples * wx
    coeff = np.empty(len(gam), dtype=complex)
    out = np.zeros(len(x), dtype=complex)
    # kernel rows Ai(x_i - gamma_j) are built in gamma-chunks and used
    # for both passes to keep memory flat
    for lo in range(0, len(gam), chunk):
        hi = min(lo + chunk, len(gam))
        kern = ai_values(x[None, :] - gam[lo:hi, None])
        coeff[lo:hi] = kern @ fv
        out += (wg[lo:hi] * coeff[lo:hi]) @ kern
    return WaveFunction(grid=f.grid, samples=out)
