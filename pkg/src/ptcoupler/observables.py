"""Output observables: mean photon numbers and intensity cross-correlations.

Every observable splits into a stimulated part (input amplitudes transported
through K, identical to the classical mean-field prediction) and a
spontaneous part (the noise moments of `noise`).  The cross-correlation

    g2 = <a+ b+ a b> / (<a+ a> <b+ b>),      q = g2 - 1

is provided in the two cases where a closed form exists: vacuum input,
where the output field is Gaussian and the fourth moment factorizes, and
the two-photon NOON input, where the coincidence splits into stimulated,
spontaneous, and interference contributions.
"""

from dataclasses import dataclass

from .core import SystemParams, propagator
from .noise import Method, NoiseMoments, spontaneous_signals
from .states import SECOND_MOMENTS, InputState


class UndefinedCorrelationError(ArithmeticError):
    """Raised when a correlation's denominator intensity vanishes."""


@dataclass(frozen=True)
class OutputObservables:
    """Mean photon numbers at the output, plus q/g2 where defined.

    i_a, i_b are totals (stimulated + spontaneous); i_a_st, i_b_st the
    stimulated parts alone.  g2 and q are None when the correlation is not
    defined for the input state or its denominator vanishes.
    """

    i_a: float
    i_b: float
    i_a_st: float
    i_b_st: float
    g2: float | None = None
    q: float | None = None


def _stimulated(state: InputState, params: SystemParams) -> tuple[float, float]:
    k = propagator(params)
    if state is InputState.VACUUM:
        return 0.0, 0.0
    if state is InputState.PHOTON_A:
        return abs(k.k_aa) ** 2, abs(k.k_ba) ** 2
    if state is InputState.PHOTON_B:
        return abs(k.k_ab) ** 2, abs(k.k_bb) ** 2
    if state is InputState.NOON2:
        return (
            abs(k.k_aa) ** 2 + abs(k.k_ab) ** 2,
            abs(k.k_ba) ** 2 + abs(k.k_bb) ** 2,
        )
    raise ValueError(f"unknown input state {state!r}")


def intensities(
    state: InputState, params: SystemParams, method: Method = Method.CLOSED_FORM
) -> OutputObservables:
    """Stimulated and total mean photon numbers for the given input."""
    i_a_st, i_b_st = _stimulated(state, params)
    s = spontaneous_signals(params, method)
    return OutputObservables(
        i_a=i_a_st + s.s_a,
        i_b=i_b_st + s.s_b,
        i_a_st=i_a_st,
        i_b_st=i_b_st,
    )


def hbt_vacuum(
    params: SystemParams, method: Method = Method.CLOSED_FORM
) -> OutputObservables:
    """Cross-correlation of the spontaneously generated light (vacuum input).

    The output field is Gaussian, so the coincidence factorizes,

        <a+ b+ a b> = s_a s_b + |s_ab|^2,

    giving q = |s_ab|^2 / (s_a s_b) in [0, 1] and g2 = 1 + q in [1, 2].

    Raises UndefinedCorrelationError when s_a * s_b = 0 (at l = 0 or g = 0
    there is nothing to correlate).
    """
    s = spontaneous_signals(params, method)
    denom = s.s_a * s.s_b
    if denom == 0.0:
        raise UndefinedCorrelationError(
            f"no spontaneous signal to correlate at g={params.g}, l={params.l}"
        )
    q = abs(s.s_ab) ** 2 / denom
    return OutputObservables(
        i_a=s.s_a, i_b=s.s_b, i_a_st=0.0, i_b_st=0.0, g2=1.0 + q, q=q
    )


def noon_coincidence(
    params: SystemParams,
    include_spontaneous: bool = True,
    method: Method = Method.CLOSED_FORM,
) -> float:
    """<a+ b+ a b> for the two-photon NOON input.

    Sum of three contributions: the stimulated interference term
    |k_aa k_ba + k_ab k_bb|^2, the purely spontaneous Gaussian part
    s_a s_b + |s_ab|^2, and the stimulated-spontaneous cross terms.  With
    include_spontaneous=False the noise moments are zeroed and only the
    first term survives.
    """
    k = propagator(params)
    if include_spontaneous:
        s = spontaneous_signals(params, method)
    else:
        s = NoiseMoments(0.0, 0.0, 0j)
    stim = abs(k.k_aa * k.k_ba + k.k_ab * k.k_bb) ** 2
    spont = s.s_a * s.s_b + (s.s_ab * s.s_ba).real
    cross = (
        s.s_a * (abs(k.k_ba) ** 2 + abs(k.k_bb) ** 2)
        + s.s_b * (abs(k.k_aa) ** 2 + abs(k.k_ab) ** 2)
        + 2.0
        * (s.s_ab * (k.k_ba.conjugate() * k.k_aa + k.k_bb.conjugate() * k.k_ab)).real
    )
    return stim + spont + cross


def noon_g2(
    params: SystemParams,
    include_spontaneous: bool = True,
    method: Method = Method.CLOSED_FORM,
) -> OutputObservables:
    """Cross-correlation g2 (and intensities) for the NOON input.

    Intensities are kept consistent with the flag: with spontaneous
    generation excluded the totals equal the stimulated parts and the g2
    denominator uses them, reproducing the noise-free reference curves.
    """
    i_a_st, i_b_st = _stimulated(InputState.NOON2, params)
    if include_spontaneous:
        s = spontaneous_signals(params, method)
        i_a, i_b = i_a_st + s.s_a, i_b_st + s.s_b
    else:
        i_a, i_b = i_a_st, i_b_st
    denom = i_a * i_b
    if denom == 0.0:
        raise UndefinedCorrelationError(
            f"vanishing intensity product at g={params.g}, l={params.l}"
        )
    g2 = noon_coincidence(params, include_spontaneous, method) / denom
    return OutputObservables(
        i_a=i_a, i_b=i_b, i_a_st=i_a_st, i_b_st=i_b_st, g2=g2, q=g2 - 1.0
    )


def classical_reference_intensities(
    state: InputState, params: SystemParams
) -> tuple[float, float]:
    """Mean-field intensities from the second-moment table and K alone.

    Equals the stimulated parts of `intensities`; exposed for the
    classical-vs-quantum comparison curves.
    """
    n_a0, n_b0, m0 = SECOND_MOMENTS[state]
    k = propagator(params)
    i_a = (
        abs(k.k_aa) ** 2 * n_a0
        + abs(k.k_ab) ** 2 * n_b0
        + 2.0 * (k.k_aa.conjugate() * k.k_ab * m0).real
    )
    i_b = (
        abs(k.k_ba) ** 2 * n_a0
        + abs(k.k_bb) ** 2 * n_b0
        + 2.0 * (k.k_ba.conjugate() * k.k_bb * m0).real
    )
    return i_a, i_b
