"""Core model: two evanescently coupled single-mode waveguides, one with gain
+G and one with matched loss -G, coupling J.

Conventions (dimensionless everywhere):
  g = G/J   gain-to-coupling ratio, >= 0
  l = J*z   propagation length in units of the coupling, >= 0

Field amplitudes evolve as d/dl (alpha, beta) = M (alpha, beta) with the
traceless generator

    M = [[ g, -i],
         [-i, -g]],      M^2 = (g^2 - 1) * I.

Because M squares to a multiple of the identity, the transfer matrix has the
closed form

    K(l) = exp(M l) = cosh(lam*l) I + sinh(lam*l)/lam * M,   lam^2 = g^2 - 1,

which is entire in lam^2: for g < 1 it is the cos/sin oscillatory coupler,
for g > 1 the cosh/sinh amplifier, and at g = 1 (the exceptional point,
where the eigenvalues coalesce) it degenerates to I + l*M with polynomial
growth.  All branches are evaluated through even entire functions of
t = (g^2 - 1) l^2 so nothing blows up near g = 1.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

# Width of the band around g = 1 that is reported as the exceptional point.
EXCEPTIONAL_BAND = 1e-6

# |t| below which the entire functions switch to their Taylor series.  The
# series are carried to 12 terms, far past the 6 needed for 1e-12 relative
# accuracy on this interval, so the branch switch is seamless.
_SERIES_CUTOFF = 0.25
_SERIES_TERMS = 12


def _cosh_sqrt(t: float) -> float:
    """cosh(sqrt(t)) continued through t < 0 as cos(sqrt(-t))."""
    if abs(t) < _SERIES_CUTOFF:
        acc, term = 0.0, 1.0
        for k in range(1, _SERIES_TERMS + 1):
            acc += term
            term *= t / ((2 * k - 1) * (2 * k))
        return acc
    r = math.sqrt(abs(t))
    return math.cosh(r) if t > 0.0 else math.cos(r)


def _sinhc_sqrt(t: float) -> float:
    """sinh(sqrt(t))/sqrt(t), continued through t < 0 as sin(r)/r."""
    if abs(t) < _SERIES_CUTOFF:
        acc, term = 0.0, 1.0
        for k in range(1, _SERIES_TERMS + 1):
            acc += term
            term *= t / ((2 * k) * (2 * k + 1))
        return acc
    r = math.sqrt(abs(t))
    return math.sinh(r) / r if t > 0.0 else math.sin(r) / r


def _coshm1_div(t: float) -> float:
    """(cosh(sqrt(t)) - 1)/t, finite at t = 0 (value 1/2)."""
    if abs(t) < _SERIES_CUTOFF:
        acc, term = 0.0, 0.5
        for k in range(1, _SERIES_TERMS + 1):
            acc += term
            term *= t / ((2 * k + 1) * (2 * k + 2))
        return acc
    return (_cosh_sqrt(t) - 1.0) / t


def _sinhcm1_div(t: float) -> float:
    """(sinhc(sqrt(t)) - 1)/t, finite at t = 0 (value 1/6)."""
    if abs(t) < _SERIES_CUTOFF:
        acc, term = 0.0, 1.0 / 6.0
        for k in range(1, _SERIES_TERMS + 1):
            acc += term
            term *= t / ((2 * k + 2) * (2 * k + 3))
        return acc
    return (_sinhc_sqrt(t) - 1.0) / t


@dataclass(frozen=True)
class SystemParams:
    """Dimensionless operating point (g, l) of the coupler."""

    g: float
    l: float

    def __post_init__(self):
        for name in ("g", "l"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            if value < 0.0:
                raise ValueError(f"{name} must be >= 0, got {value!r}")
        object.__setattr__(self, "g", float(self.g))
        object.__setattr__(self, "l", float(self.l))


class RegimeTag(Enum):
    UNBROKEN = "unbroken"
    EXCEPTIONAL = "exceptional"
    BROKEN = "broken"


@dataclass(frozen=True)
class Regime:
    """Spectral regime of the generator plus its characteristic rate.

    rate is sqrt(1 - g^2) (oscillation frequency) in the unbroken phase,
    sqrt(g^2 - 1) (growth rate) in the broken phase, and 0 at the
    exceptional point; it is continuous through g = 1.
    """

    tag: RegimeTag
    rate: float


def classify_regime(params: SystemParams) -> Regime:
    g = params.g
    if abs(g - 1.0) <= EXCEPTIONAL_BAND:
        return Regime(RegimeTag.EXCEPTIONAL, 0.0)
    if g < 1.0:
        return Regime(RegimeTag.UNBROKEN, math.sqrt(1.0 - g * g))
    return Regime(RegimeTag.BROKEN, math.sqrt(g * g - 1.0))


def generator_matrix(g: float) -> np.ndarray:
    """The 2x2 generator M for gain ratio g (amplitudes evolve as dv/dl = Mv)."""
    return np.array([[g, -1j], [-1j, -g]], dtype=complex)


@dataclass(frozen=True)
class Propagator:
    """Transfer matrix K(l) = exp(M l) acting on (alpha, beta).

    The diagonal entries are real and the off-diagonal ones purely imaginary
    for every g; det K = 1 exactly in the algebra since tr M = 0.
    """

    k_aa: complex
    k_ab: complex
    k_ba: complex
    k_bb: complex
    params: SystemParams

    @property
    def det(self) -> complex:
        return self.k_aa * self.k_bb - self.k_ab * self.k_ba

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.k_aa, self.k_ab], [self.k_ba, self.k_bb]])

    def apply(self, alpha0: complex, beta0: complex) -> tuple[complex, complex]:
        return (
            self.k_aa * alpha0 + self.k_ab * beta0,
            self.k_ba * alpha0 + self.k_bb * beta0,
        )


def propagator(params: SystemParams) -> Propagator:
    """Closed-form transfer matrix at (g, l), valid in all three regimes."""
    g, l = params.g, params.l
    t = (g * g - 1.0) * l * l
    c = _cosh_sqrt(t)
    s = l * _sinhc_sqrt(t)  # sinh(lam*l)/lam, -> l at the exceptional point
    return Propagator(
        k_aa=complex(c + g * s),
        k_ab=complex(0.0, -s),
        k_ba=complex(0.0, -s),
        k_bb=complex(c - g * s),
        params=params,
    )


def classical_amplitudes(
    params: SystemParams, alpha0: complex, beta0: complex
) -> tuple[complex, complex]:
    """Propagate classical mode amplitudes: (alpha(l), beta(l)) = K(l) (a0, b0).

    This is the noise-free transport, i.e. the "CL" reference curves: the
    mean-field prediction that ignores spontaneously generated photons.
    """
    return propagator(params).apply(alpha0, beta0)
