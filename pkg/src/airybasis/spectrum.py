"""Bound spectrum of H = p^2/2 + lambda |x| on the whole line.

Matching Ai branches at the origin quantizes the energies through the
negative Airy zeros:

    even:  E_2m     = -(lambda^2/2)^(1/3) a'_{m+1}      (Ai' zero at x=0)
    odd:   E_2m+1   = -(lambda^2/2)^(1/3) a_{m+1}       (Ai zero at x=0)

with eigenfunctions

    psi_2m(x)   = N Ai((2 lambda)^(1/3) (|x| - E/lambda))
    psi_2m+1(x) = N sgn(x) Ai((2 lambda)^(1/3) (|x| - E/lambda)),

sgn(0) = 0, and N > 0 fixed by unit quadrature norm.  With N > 0 the
tail beyond the rightmost sign change is positive for every state.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .airy import ai_values, airy_prime_zero, airy_zero, zero_table
from .errors import DomainError, PrecisionError
from .quadrature import Grid, WaveFunction

__all__ = [
    "EigenState",
    "SpectralBasis",
    "even_energy",
    "odd_energy",
    "eigenfunction",
    "build_basis",
]

_BOUNDARY_TOL = 1e-8
_DECAY_MARGIN = 8.0


def _energy_scale(lam):
    if not (np.isfinite(lam) and lam > 0.0):
        raise DomainError("potential slope lambda must be positive")
    return (0.5 * lam * lam) ** (1.0 / 3.0)


def even_energy(n, lam):
    """Energy of even state 2n (n = 0, 1, ...)."""
    if int(n) != n or n < 0:
        raise DomainError("state index must be a non-negative integer")
    return -_energy_scale(lam) * airy_prime_zero(int(n) + 1)


def odd_energy(n, lam):
    """Energy of odd state 2n+1 (n = 0, 1, ...)."""
    if int(n) != n or n < 0:
        raise DomainError("state index must be a non-negative integer")
    return -_energy_scale(lam) * airy_zero(int(n) + 1)


@dataclass
class EigenState:
    """One normalized bound state."""

    n: int
    energy: float
    parity: str                      # 'even' or 'odd'
    normalization: float             # N > 0
    samples: WaveFunction = field(repr=False)


def _check_symmetric(grid):
    if not grid.is_symmetric():
        raise DomainError("eigenfunctions need a symmetric grid (x_min = -x_max)")


def _raw_state(n, lam, grid, energy):
    """Unnormalized samples and turning-point adequacy check."""
    scale = (2.0 * lam) ** (1.0 / 3.0)
    turning = energy / lam
    if grid.x_max < turning + _DECAY_MARGIN / scale:
        raise PrecisionError(
            f"grid ends at {grid.x_max} but state {n} needs "
            f">= {turning + _DECAY_MARGIN / scale:.2f} to decay"
        )
    x = grid.points
    vals = ai_values(scale * (np.abs(x) - turning))
    if n % 2 == 1:
        vals = np.sign(x) * vals
    return vals


def _finalize_state(n, lam, grid, energy):
    vals = _raw_state(n, lam, grid, energy)
    norm_const = 1.0 / np.sqrt(float(np.sum(grid.weights * vals * vals)))
    vals = norm_const * vals
    edge = max(abs(vals[0]), abs(vals[-1]))
    if edge >= _BOUNDARY_TOL:
        raise PrecisionError(
            f"state {n} has |psi| = {edge:.2e} at the grid edge; widen the grid"
        )
    return EigenState(
        n=n,
        energy=float(energy),
        parity="even" if n % 2 == 0 else "odd",
        normalization=float(norm_const),
        samples=WaveFunction(grid=grid, samples=vals.astype(complex)),
    )


def eigenfunction(n, lam, grid):
    """Normalized bound state n on a symmetric grid.

    Raises PrecisionError when the grid cannot hold the state: either
    the turning point plus decay margin falls outside, or the
    normalized samples exceed 1e-8 at the ends.
    """
    if int(n) != n or n < 0:
        raise DomainError("state index must be a non-negative integer")
    n = int(n)
    _check_symmetric(grid)
    energy = even_energy(n // 2, lam) if n % 2 == 0 else odd_energy(n // 2, lam)
    return _finalize_state(n, lam, grid, energy)


@dataclass
class SpectralBasis:
    """The first n_states bound states on a shared grid."""

    lam: float
    grid: Grid
    states: list

    @cached_property
    def energies(self):
        e = np.array([s.energy for s in self.states])
        e.flags.writeable = False
        return e

    @cached_property
    def psi_matrix(self):
        """Real samples, one row per state."""
        m = np.array([np.real(s.samples.samples) for s in self.states])
        m.flags.writeable = False
        return m

    @property
    def n_states(self):
        return len(self.states)

    @cached_property
    def tag(self):
        g = self.grid
        return (
            f"lam={self.lam!r};n={self.n_states};"
            f"grid=({g.x_min!r},{g.x_max!r},{g.n_points})"
        )


def build_basis(lam, n_states, grid):
    """Build states 0..n_states-1; energies strictly increasing."""
    if int(n_states) != n_states or n_states < 1:
        raise DomainError("n_states must be a positive integer")
    n_states = int(n_states)
    _check_symmetric(grid)
    scale = _energy_scale(lam)
    table = zero_table((n_states + 1) // 2)

    states = []
    for n in range(n_states):
        k = n // 2
        if n % 2 == 0:
            energy = -scale * table.ai_prime_zeros[k]
        else:
            energy = -scale * table.ai_zeros[k]
        states.append(_finalize_state(n, lam, grid, energy))

    energies = [s.energy for s in states]
    if not all(b > a for a, b in zip(energies, energies[1:])):
        raise PrecisionError("energies failed to come out strictly increasing")
    return SpectralBasis(lam=float(lam), grid=grid, states=states)
