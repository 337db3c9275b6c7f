"""Spontaneously generated photon moments.

The gain medium's quantum noise enters only through the amplifying channel
(the lossy channel's bath is at zero temperature and drops out of normally
ordered moments), so every spontaneous moment is a weighted integral of
transfer-matrix entries over the propagation length:

    s_a(l)  = 2g * int_0^l |K_aa(x)|^2 dx     mean photons generated in A
    s_b(l)  = 2g * int_0^l |K_ba(x)|^2 dx     mean photons generated in B
    s_ab(l) = 2g * int_0^l K_aa*(x) K_ba(x) dx   cross moment <a^dag b>

Two independent evaluation routes are provided: analytic antiderivatives of
the cosh/sinh (or cos/sin) kernel products, and adaptive Simpson quadrature
of the kernels themselves.  They must agree; the test suite enforces it.
"""

import math
from dataclasses import dataclass
from enum import Enum

import mpmath as mp

from .core import (
    SystemParams,
    _coshm1_div,
    _sinhc_sqrt,
    _sinhcm1_div,
    propagator,
)
from .quadrature import adaptive_simpson

#: Relative tolerance mixed into the quadrature budget.  A purely absolute
#: 1e-10 target is unreachable in float64 once the integrand grows to ~1e12
#: (broken phase, large l), where roundoff alone exceeds it.
QUADRATURE_ATOL = 1e-10
QUADRATURE_RTOL = 1e-12


class Method(Enum):
    CLOSED_FORM = "closed-form"
    QUADRATURE = "quadrature"


class NotInBrokenPhaseError(ValueError):
    """Raised when a broken-phase asymptotic is requested at g <= 1."""


@dataclass(frozen=True)
class NoiseMoments:
    """Second moments of the spontaneously generated field.

    s_a and s_b are mean photon numbers (>= 0); s_ab is the cross moment,
    bounded by Cauchy-Schwarz: |s_ab|^2 <= s_a * s_b.
    """

    s_a: float
    s_b: float
    s_ab: complex

    @property
    def s_ba(self) -> complex:
        # <b^dag a> = <a^dag b>^*, forced by hermiticity
        return self.s_ab.conjugate()


def _kernel_integrals(g: float, l: float) -> tuple[float, float, float]:
    """int_0^l of cosh^2(lam x), cosh(lam x) sinh(lam x)/lam, (sinh(lam x)/lam)^2.

    All three are entire in lam^2 = g^2 - 1 and are evaluated through the
    same series-protected helpers as the propagator, so the exceptional
    point needs no special casing.
    """
    t4 = 4.0 * (g * g - 1.0) * l * l  # (2 lam l)^2
    i_cc = 0.5 * l * (1.0 + _sinhc_sqrt(t4))
    i_cs = l * l * _coshm1_div(t4)
    i_ss = 2.0 * l ** 3 * _sinhcm1_div(t4)
    return i_cc, i_cs, i_ss


def _closed_form(params: SystemParams) -> NoiseMoments:
    g, l = params.g, params.l
    i_cc, i_cs, i_ss = _kernel_integrals(g, l)
    s_a = 2.0 * g * (i_cc + 2.0 * g * i_cs + g * g * i_ss)
    s_b = 2.0 * g * i_ss
    s_ab = complex(0.0, -2.0 * g * (i_cs + g * i_ss))
    return NoiseMoments(s_a=s_a, s_b=s_b, s_ab=s_ab)


def _by_quadrature(
    params: SystemParams, atol: float = QUADRATURE_ATOL, rtol: float = QUADRATURE_RTOL
) -> NoiseMoments:
    g, l = params.g, params.l
    if g == 0.0 or l == 0.0:
        return NoiseMoments(0.0, 0.0, 0j)

    def kaa(x):
        return propagator(SystemParams(g, x)).k_aa

    def kba(x):
        return propagator(SystemParams(g, x)).k_ba

    s_a = adaptive_simpson(
        lambda x: 2.0 * g * abs(kaa(x)) ** 2, 0.0, l, atol=atol, rtol=rtol
    )
    s_b = adaptive_simpson(
        lambda x: 2.0 * g * abs(kba(x)) ** 2, 0.0, l, atol=atol, rtol=rtol
    )
    s_ab = adaptive_simpson(
        lambda x: 2.0 * g * kaa(x).conjugate() * kba(x), 0.0, l, atol=atol, rtol=rtol
    )
    return NoiseMoments(s_a=float(s_a), s_b=float(s_b), s_ab=complex(s_ab))


def spontaneous_signals(
    params: SystemParams, method: Method = Method.CLOSED_FORM
) -> NoiseMoments:
    """Spontaneous moments at (g, l) for vacuum input."""
    if method is Method.CLOSED_FORM:
        return _closed_form(params)
    if method is Method.QUADRATURE:
        return _by_quadrature(params)
    raise ValueError(f"unknown method {method!r}")


def asymptotic_spontaneous(g: float) -> tuple[float, float]:
    """Large-l behaviour in the broken phase: (growth rate, s_a/s_b limit).

    Both signals grow as exp(2 lam l) with lam = sqrt(g^2 - 1); their ratio
    tends to the dominant-eigenvector weight (lam + g)^2, which approaches
    4 g^2 from below as g grows.
    """
    if g <= 1.0:
        raise NotInBrokenPhaseError(f"need g > 1 for exponential growth, got g={g}")
    lam = math.sqrt(g * g - 1.0)
    return 2.0 * lam, (lam + g) ** 2


_COMMUTATOR_DPS = 50


def commutator_diagnostics(params: SystemParams) -> tuple[float, complex]:
    """Consistency check on the noise bookkeeping: ([a, a^dag], [a, b^dag]).

    The gain channel's noise commutes negatively (-2g per unit length) and
    the loss channel's positively (+2g), so the transported commutators

        c_aa = |k_aa|^2 + |k_ab|^2 - 2g int |k_aa|^2 + 2g int |k_ab|^2
        c_ab = k_aa k_ba^* + k_ab k_bb^* - 2g int k_aa k_ba^* + 2g int k_ab k_bb^*

    must come out exactly (1, 0) for any (g, l).  The combination cancels
    terms of size exp(2 lam l) down to order one, which float64 cannot do
    past lam*l ~ 14, so it is evaluated in 50-digit arithmetic and rounded
    at the end.  A wrong kernel or integral would still show up many orders
    of magnitude above the returned precision.
    """
    with mp.workdps(_COMMUTATOR_DPS):
        g = mp.mpf(params.g)
        l = mp.mpf(params.l)
        lam2 = g * g - 1
        if lam2 == 0:
            c, s = mp.mpf(1), l  # cosh(lam l), sinh(lam l)/lam at lam = 0
            i_cc, i_cs, i_ss = l, l ** 2 / 2, l ** 3 / 3
        else:
            lam = mp.sqrt(mp.mpc(lam2))
            c = mp.re(mp.cosh(lam * l))
            s = mp.re(mp.sinh(lam * l) / lam)
            i_cc = mp.re(l / 2 + mp.sinh(2 * lam * l) / (4 * lam))
            i_cs = mp.re((mp.cosh(2 * lam * l) - 1) / (4 * lam ** 2))
            i_ss = mp.re((mp.sinh(2 * lam * l) - 2 * lam * l) / (4 * lam ** 3))
        k_aa = c + g * s
        k_bb = c - g * s
        k_ab = -1j * s  # == k_ba
        int_aa = i_cc + 2 * g * i_cs + g * g * i_ss  # int |k_aa|^2
        int_ab = i_ss  # int |k_ab|^2 == int |k_ba|^2
        int_a_ba = 1j * (i_cs + g * i_ss)  # int k_aa conj(k_ba)
        int_ab_bb = -1j * (i_cs - g * i_ss)  # int k_ab conj(k_bb)
        c_aa = (
            abs(k_aa) ** 2 + abs(k_ab) ** 2 - 2 * g * int_aa + 2 * g * int_ab
        )
        c_ab = (
            k_aa * mp.conj(k_ab)
            + k_ab * mp.conj(k_bb)
            - 2 * g * int_a_ba
            + 2 * g * int_ab_bb
        )
        return float(c_aa), complex(c_ab)
