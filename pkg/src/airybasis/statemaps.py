"""Maps between Airy states, position eigenstates, and Fock space.

In the momentum representation the Airy state is a pure phase,
<p|Ai> = exp(i p^3/3)/sqrt(2 pi), so

    Ai(x) = (1/2 pi) int dp exp(i(p^3/3 + x p)),

and unwinding that phase with exp(-i p^3/3) exp(-i x p) turns the Airy
state into a position eigenstate at x.  Both integrals are oscillatory
and are tamed with a raised-cosine window over the outer fifth of a
finite momentum range; truncation is monitored by re-evaluating on a
widened, refined window.

On the Fock side, |x> = e^(-x^2/2)/pi^(1/4) exp(-a+^2/2 + sqrt(2) x a+)|0>.
Expanding the exponential gives the two-term recurrence

    c_(n+1) = (sqrt(2) x c_n - sqrt(n) c_(n-1)) / sqrt(n+1),

whose solution c_n(x) is exactly the n-th harmonic-oscillator
eigenfunction at x, truncated at n_max.
"""

from dataclasses import dataclass

import numpy as np

from .airy import ai_values
from .errors import DomainError, PrecisionError
from .quadrature import Grid, WaveFunction

__all__ = [
    "MomentumGrid",
    "FockVector",
    "default_momentum_grid",
    "raised_cosine_window",
    "airy_from_momentum",
    "position_from_airy",
    "fock_position_state",
    "quadrature_expectation",
]

_WINDOW_FRACTION = 0.2
_REFINE_TOL = 5e-4


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform momentum samples on a window symmetric about 0."""

    p_min: float
    p_max: float
    n_points: int

    def __post_init__(self):
        if not (np.isfinite(self.p_min) and np.isfinite(self.p_max)):
            raise DomainError("momentum bounds must be finite")
        if not self.p_min < self.p_max:
            raise DomainError("momentum window must have p_min < p_max")
        if self.p_min != -self.p_max:
            raise DomainError("momentum window must be symmetric about 0")
        if self.n_points < 16:
            raise DomainError("momentum grid needs at least 16 points")

    @property
    def points(self):
        return np.linspace(self.p_min, self.p_max, self.n_points)

    @property
    def spacing(self):
        return (self.p_max - self.p_min) / (self.n_points - 1)

    def refined(self, widen=1.25, densify=2):
        """Wider, denser grid used for convergence monitoring."""
        return MomentumGrid(
            p_min=self.p_min * widen,
            p_max=self.p_max * widen,
            n_points=densify * self.n_points,
        )


def default_momentum_grid():
    """Window adequate for Ai on [-6, 3] to about 1e-4."""
    return MomentumGrid(p_min=-12.0, p_max=12.0, n_points=2**14)


def raised_cosine_window(p, p_max, fraction=_WINDOW_FRACTION):
    """1 on the inner part, cosine rolloff to 0 over the outer fraction."""
    p = np.abs(np.asarray(p, dtype=float))
    flat_edge = (1.0 - fraction) * p_max
    w = 0.5 * (1.0 + np.cos(np.pi * (p - flat_edge) / (fraction * p_max)))
    w[p <= flat_edge] = 1.0
    w[p >= p_max] = 0.0
    return w


def _windowed_phase_integral(x_target, pgrid):
    # window is 0 at the endpoints, so the plain Riemann sum already
    # carries trapezoidal accuracy
    p = pgrid.points
    w = raised_cosine_window(p, pgrid.p_max)
    ph = np.exp(1j * (p**3 / 3.0 + x_target * p))
    return pgrid.spacing * np.sum(w * ph) / (2.0 * np.pi)


def airy_from_momentum(x_target, pgrid=None):
    """Ai(x_target) recovered from the flat-phase momentum profile.

    The windowed integral is re-evaluated on a widened and refined
    window; disagreement beyond 5e-4 means the window was too small
    for this argument.
    """
    if pgrid is None:
        pgrid = default_momentum_grid()
    if not np.isfinite(x_target):
        raise DomainError("x_target must be finite")
    coarse = _windowed_phase_integral(x_target, pgrid)
    fine = _windowed_phase_integral(x_target, pgrid.refined())
    if abs(fine - coarse) > _REFINE_TOL:
        raise PrecisionError(
            f"momentum window not converged at x = {x_target!r}: "
            f"refinement moved the value by {abs(fine - coarse):.2e}"
        )
    return complex(coarse)


def position_from_airy(x, grid, pgrid=None, chunk=512):
    """Windowed position eigenstate at x built from the Airy state.

    exp(-i p^3/3) exp(-i x p) cancels the Airy phase, leaving the flat
    profile e^{-ixp}/sqrt(2 pi); transforming back gives a narrow
    kernel concentrated at x whose width scales as 1/p_max.  Not
    unit-norm: its height grows with the window.
    """
    if pgrid is None:
        pgrid = default_momentum_grid()
    if not np.isfinite(x):
        raise DomainError("position x must be finite")
    p = pgrid.points
    wp = raised_cosine_window(p, pgrid.p_max) * pgrid.spacing / (2.0 * np.pi)
    y = grid.points
    out = np.empty(len(y), dtype=complex)
    for lo in range(0, len(y), chunk):
        hi = min(lo + chunk, len(y))
        out[lo:hi] = np.exp(1j * np.outer(y[lo:hi] - x, p)) @ wp
    return WaveFunction(grid=grid, samples=out)


@dataclass(frozen=True)
class FockVector:
    """Real number-basis coefficients up to truncation n_max."""

    n_max: int
    coeffs: np.ndarray

    def __post_init__(self):
        co = np.asarray(self.coeffs, dtype=float)
        if self.n_max < 1 or co.shape != (self.n_max + 1,):
            raise DomainError("coefficients must have length n_max + 1")
        if not np.all(np.isfinite(co)):
            raise DomainError("coefficients must be finite")
        object.__setattr__(self, "coeffs", co)

    def norm_squared(self):
        return float(np.sum(self.coeffs**2))


def fock_position_state(x, n_max):
    """Truncated number-basis expansion of the position eigenstate |x>.

    Requires the truncation to sit beyond the classical turning point
    of the highest retained oscillator state, sqrt(2 n_max + 1), with
    two units of slack; below that the recurrence has not entered its
    decaying regime and the truncation error is uncontrolled.
    """
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    if not np.isfinite(x):
        raise DomainError("position x must be finite")
    if np.sqrt(2.0 * n_max + 1.0) < abs(x) + 2.0:
        raise PrecisionError(
            f"n_max = {n_max} too small for |x| = {abs(x)}: "
            "truncation falls inside the classically allowed region"
        )
    c = np.empty(n_max + 1)
    c[0] = np.exp(-0.5 * x * x) / np.pi**0.25
    c[1] = np.sqrt(2.0) * x * c[0]
    for n in range(1, n_max):
        c[n + 1] = (np.sqrt(2.0) * x * c[n] - np.sqrt(n) * c[n - 1]) / np.sqrt(
            n + 1.0
        )
    return FockVector(n_max=n_max, coeffs=c)


def quadrature_expectation(vec):
    """<(a + a+)/sqrt(2)> on the truncated, renormalized vector."""
    c = vec.coeffs
    s = np.sum(c**2)
    if s <= 0.0:
        raise DomainError("zero vector has no quadrature expectation")
    n = np.arange(len(c) - 1)
    return float(np.sqrt(2.0) * np.sum(np.sqrt(n + 1.0) * c[:-1] * c[1:]) / s)
