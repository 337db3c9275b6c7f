"""Quantized-field simulation of a coupled waveguide pair with balanced
gain and loss: transfer matrices, spontaneous photon generation, and
Hanbury-Brown-Twiss cross-correlations, each backed by an independent
brute-force oracle.
"""

__version__ = "0.1.0"

from .core import (
    Propagator,
    Regime,
    RegimeTag,
    SystemParams,
    classical_amplitudes,
    classify_regime,
    generator_matrix,
    propagator,
)
from .noise import (
    Method,
    NoiseMoments,
    NotInBrokenPhaseError,
    asymptotic_spontaneous,
    commutator_diagnostics,
    spontaneous_signals,
)
from .observables import (
    OutputObservables,
    UndefinedCorrelationError,
    hbt_vacuum,
    intensities,
    noon_coincidence,
    noon_g2,
)
from .oracle import (
    MomentVector,
    fourth_moment_expand,
    initial_moments,
    mean_photon_numbers,
    moment_ode_batch,
    moment_ode_solve,
    propagator_rk4,
)
from .quadrature import QuadratureNonConvergenceError, adaptive_simpson
from .selfcheck import CheckResult, run_self_check
from .states import InputState

__all__ = [
    "CheckResult",
    "InputState",
    "Method",
    "MomentVector",
    "NoiseMoments",
    "NotInBrokenPhaseError",
    "OutputObservables",
    "Propagator",
    "QuadratureNonConvergenceError",
    "Regime",
    "RegimeTag",
    "SystemParams",
    "UndefinedCorrelationError",
    "adaptive_simpson",
    "asymptotic_spontaneous",
    "classical_amplitudes",
    "classify_regime",
    "commutator_diagnostics",
    "fourth_moment_expand",
    "generator_matrix",
    "hbt_vacuum",
    "initial_moments",
    "intensities",
    "mean_photon_numbers",
    "moment_ode_batch",
    "moment_ode_solve",
    "noon_coincidence",
    "noon_g2",
    "propagator",
    "propagator_rk4",
    "run_self_check",
    "spontaneous_signals",
    "__version__",
]
