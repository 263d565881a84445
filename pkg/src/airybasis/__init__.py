"""Airy eigenbasis of the symmetric linear potential V = lambda|x|.

Evaluation of Ai and its zeros, the discrete eigenbasis they generate,
spectral wave-packet dynamics (bounces, collapse, revival), paraxial
GRIN beam maps, continuum Airy states, and the operator maps tying
Airy, position, and Fock representations together.
"""

from .errors import DomainError, PrecisionError
from .airy import (
    AiryEval,
    ZeroTable,
    ai_values,
    ai_prime_values,
    airy_ai,
    airy_ai_prime,
    airy_zero,
    airy_prime_zero,
    zero_table,
)
from .quadrature import (
    Grid,
    WaveFunction,
    make_grid,
    default_grid,
    simpson_weights,
    sample,
    inner_product,
)
from .spectrum import (
    EigenState,
    SpectralBasis,
    even_energy,
    odd_energy,
    eigenfunction,
    build_basis,
)
from .continuum import (
    LinearPotentialParams,
    DisplacedAiryParams,
    SqueezeDisplaceParams,
    psi_E,
    displaced_airy,
    shifted_energy,
    apply_displaced_squeeze,
    parity_reflect,
    completeness_smear,
)
from .dynamics import (
    GaussianPacketParams,
    SpectralCoefficients,
    gaussian_packet,
    project,
    evolve,
    mean_position,
    trajectory,
)
from .grin import (
    GrinMedium,
    WaveletParams,
    airy_wavelet,
    propagate_grin,
    intensity_map,
)
from .statemaps import (
    MomentumGrid,
    FockVector,
    default_momentum_grid,
    raised_cosine_window,
    airy_from_momentum,
    position_from_airy,
    fock_position_state,
    quadrature_expectation,
)
from .oracle import TridiagonalOperator, build_hamiltonian, diagonalize

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "PrecisionError",
    "AiryEval",
    "ZeroTable",
    "ai_values",
    "ai_prime_values",
    "airy_ai",
    "airy_ai_prime",
    "airy_zero",
    "airy_prime_zero",
    "zero_table",
    "Grid",
    "WaveFunction",
    "make_grid",
    "default_grid",
    "simpson_weights",
    "sample",
    "inner_product",
    "EigenState",
    "SpectralBasis",
    "even_energy",
    "odd_energy",
    "eigenfunction",
    "build_basis",
    "LinearPotentialParams",
    "DisplacedAiryParams",
    "SqueezeDisplaceParams",
    "psi_E",
    "displaced_airy",
    "shifted_energy",
    "apply_displaced_squeeze",
    "parity_reflect",
    "completeness_smear",
    "GaussianPacketParams",
    "SpectralCoefficients",
    "gaussian_packet",
    "project",
    "evolve",
    "mean_position",
    "trajectory",
    "GrinMedium",
    "WaveletParams",
    "airy_wavelet",
    "propagate_grin",
    "intensity_map",
    "MomentumGrid",
    "FockVector",
    "default_momentum_grid",
    "raised_cosine_window",
    "airy_from_momentum",
    "position_from_airy",
    "fock_position_state",
    "quadrature_expectation",
    "TridiagonalOperator",
    "build_hamiltonian",
    "diagonalize",
]
