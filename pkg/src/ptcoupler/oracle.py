"""Brute-force cross-checks for every closed-form observable.

Two independent routes:

* RK4 integration of the second-moment ODE system.  Differentiating the
  Langevin solution gives a closed linear system for n_a = <a+ a>,
  n_b = <b+ b>, m = <a+ b>:

      dn_a/dl = 2 g n_a + 2 Im(m) + 2 g     (the +2g is the gain noise)
      dn_b/dl = -2 g n_b - 2 Im(m)
      dm/dl   = i (n_b - n_a)

  No transfer-matrix entry or antiderivative enters, so agreement with the
  closed forms checks both.

* Exact term enumeration for normally ordered expectations.  Each output
  operator is the sum of two transported input operators and one filtered
  noise operator; an n-operator expectation expands into 3^n assignments.
  Input factors are evaluated symbolically on the Fock amplitudes of the
  state (no hard-coded moment table), noise factors by Wick pairing with
  the filtered noise second moments, themselves obtained by quadrature.
"""

import math
from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterable, Sequence

import numpy as np

from .core import SystemParams, generator_matrix, propagator
from .noise import NoiseMoments
from .quadrature import adaptive_simpson
from .states import FOCK_AMPLITUDES, SECOND_MOMENTS, InputState

MIN_STEPS = 100

# One ladder operator: ("a" | "b", daggered); products act rightmost-first.
LadderOp = tuple[str, bool]


@dataclass(frozen=True)
class MomentVector:
    """Second moments (<a+ a>, <b+ b>, <a+ b>) at one propagation length."""

    n_a: float
    n_b: float
    m: complex


def initial_moments(state: InputState) -> MomentVector:
    n_a, n_b, m = SECOND_MOMENTS[state]
    return MomentVector(n_a, n_b, m)


def _moment_rhs(y: np.ndarray, g: np.ndarray) -> np.ndarray:
    n_a, n_b, m = y[:, 0], y[:, 1], y[:, 2]
    out = np.empty_like(y)
    out[:, 0] = 2.0 * g * n_a + 2.0 * m.imag + 2.0 * g
    out[:, 1] = -2.0 * g * n_b - 2.0 * m.imag
    out[:, 2] = 1j * (n_b - n_a)
    return out


def moment_ode_batch(
    initials: Sequence[MomentVector],
    params_list: Sequence[SystemParams],
    steps: int = 10_000,
) -> list[MomentVector]:
    """RK4-integrate the moment system for a batch of (initial, params) pairs.

    All rows advance in lockstep with their own step size l/steps, so grid
    scans cost one vectorized integration.  Global error is O(steps^-4).
    """
    if steps < MIN_STEPS:
        raise ValueError(f"steps must be >= {MIN_STEPS}, got {steps}")
    if len(initials) != len(params_list):
        raise ValueError("initials and params_list must have equal length")
    if not initials:
        return []
    y = np.array(
        [[mv.n_a, mv.n_b, mv.m] for mv in initials], dtype=complex
    )
    g = np.array([p.g for p in params_list], dtype=float)
    h = np.array([p.l for p in params_list], dtype=float) / steps
    hcol = h[:, None]
    for _ in range(steps):
        k1 = _moment_rhs(y, g)
        k2 = _moment_rhs(y + 0.5 * hcol * k1, g)
        k3 = _moment_rhs(y + 0.5 * hcol * k2, g)
        k4 = _moment_rhs(y + hcol * k3, g)
        y = y + hcol / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return [
        MomentVector(n_a=float(row[0].real), n_b=float(row[1].real), m=complex(row[2]))
        for row in y
    ]


def moment_ode_solve(
    initial: MomentVector, params: SystemParams, steps: int = 10_000
) -> MomentVector:
    """RK4 solution of the moment system from a single initial condition."""
    return moment_ode_batch([initial], [params], steps)[0]


def propagator_rk4(params: SystemParams, steps: int = 10_000) -> np.ndarray:
    """Fundamental matrix of dv/dl = M v by RK4, for checking the closed K."""
    if steps < MIN_STEPS:
        raise ValueError(f"steps must be >= {MIN_STEPS}, got {steps}")
    m = generator_matrix(params.g)
    h = params.l / steps
    k = np.eye(2, dtype=complex)
    for _ in range(steps):
        k1 = m @ k
        k2 = m @ (k + 0.5 * h * k1)
        k3 = m @ (k + 0.5 * h * k2)
        k4 = m @ (k + h * k3)
        k = k + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return k


# ---------------------------------------------------------------------------
# Symbolic Fock-state ladder algebra
# ---------------------------------------------------------------------------

def apply_ladder(
    amplitudes: dict[tuple[int, int], complex], ops: Iterable[LadderOp]
) -> dict[tuple[int, int], complex]:
    """Apply a product of ladder operators to a Fock superposition.

    ops is given in operator order (leftmost written first), so the last
    element acts on the ket first.
    """
    state = dict(amplitudes)
    for mode, daggered in reversed(list(ops)):
        new: dict[tuple[int, int], complex] = {}
        for (n_a, n_b), amp in state.items():
            n = n_a if mode == "a" else n_b
            if daggered:
                n_new, factor = n + 1, math.sqrt(n + 1)
            else:
                if n == 0:
                    continue
                n_new, factor = n - 1, math.sqrt(n)
            key = (n_new, n_b) if mode == "a" else (n_a, n_new)
            new[key] = new.get(key, 0j) + amp * factor
        state = new
    return state


def fock_expectation(
    amplitudes: dict[tuple[int, int], complex], ops: Iterable[LadderOp]
) -> complex:
    """<psi| op_1 op_2 ... |psi> on a Fock superposition."""
    transformed = apply_ladder(amplitudes, ops)
    return sum(
        complex(amplitudes[key]).conjugate() * amp
        for key, amp in transformed.items()
        if key in amplitudes
    )


# ---------------------------------------------------------------------------
# Wick enumeration over transported inputs + filtered noise
# ---------------------------------------------------------------------------

def filtered_noise_moments(
    params: SystemParams, atol: float = 1e-12, rtol: float = 1e-13
) -> NoiseMoments:
    """Second moments of the length-integrated noise operators.

    Same defining integrals as the noise module but evaluated here by
    quadrature only, so the enumeration route never touches the analytic
    antiderivatives it is meant to check.
    """
    g, l = params.g, params.l
    if g == 0.0 or l == 0.0:
        return NoiseMoments(0.0, 0.0, 0j)

    def entries(x):
        k = propagator(SystemParams(g, x))
        return k.k_aa, k.k_ba

    def weight(f):
        return adaptive_simpson(f, 0.0, l, atol=atol, rtol=rtol)

    s_a = weight(lambda x: 2.0 * g * abs(entries(x)[0]) ** 2)
    s_b = weight(lambda x: 2.0 * g * abs(entries(x)[1]) ** 2)
    s_ab = weight(
        lambda x: 2.0 * g * entries(x)[0].conjugate() * entries(x)[1]
    )
    return NoiseMoments(s_a=float(s_a), s_b=float(s_b), s_ab=complex(s_ab))


def _pair_moment(op1: LadderOp, op2: LadderOp, nm: NoiseMoments) -> complex:
    (ch1, d1), (ch2, d2) = op1, op2
    if d1 and not d2:
        table = {
            ("a", "a"): nm.s_a,
            ("a", "b"): nm.s_ab,
            ("b", "a"): nm.s_ba,
            ("b", "b"): nm.s_b,
        }
        return complex(table[(ch1, ch2)])
    if d1 == d2:
        return 0j  # anomalous <F F> / <F+ F+> vanish: no phase-sensitive noise
    raise ValueError(
        "anti-normally ordered noise pairing <F F+> requested; only "
        "normally ordered moments exist in this model"
    )


def _wick(ops: Sequence[LadderOp], nm: NoiseMoments) -> complex:
    """Sum over complete pairings, preserving operator order within pairs."""
    if not ops:
        return 1.0 + 0j
    if len(ops) % 2:
        return 0j
    first, rest = ops[0], list(ops[1:])
    total = 0j
    for j, partner in enumerate(rest):
        pm = _pair_moment(first, partner, nm)
        if pm == 0:
            continue
        total += pm * _wick(rest[:j] + rest[j + 1 :], nm)
    return total


def expectation(
    ops: Sequence[LadderOp],
    state: InputState,
    params: SystemParams,
    noise_moments: NoiseMoments | None = None,
) -> complex:
    """Normally ordered expectation of output-mode operators, by enumeration.

    Each output operator splits into transported input terms and a noise
    term; all 3^n assignments are summed, with the input factor evaluated
    by ladder algebra on the state's Fock amplitudes and the noise factor
    by Wick's theorem.  ops must be normally ordered (all daggered
    operators first), as photodetection observables are.
    """
    if noise_moments is None:
        noise_moments = filtered_noise_moments(params)
    k = propagator(params)
    expansions = {
        "a": ((k.k_aa, "in", "a"), (k.k_ab, "in", "b"), (1.0 + 0j, "noise", "a")),
        "b": ((k.k_ba, "in", "a"), (k.k_bb, "in", "b"), (1.0 + 0j, "noise", "b")),
    }
    amplitudes = FOCK_AMPLITUDES[state]
    total = 0j
    for assignment in iter_product(*(expansions[mode] for mode, _ in ops)):
        coef = 1.0 + 0j
        input_ops: list[LadderOp] = []
        noise_ops: list[LadderOp] = []
        for (coeff, kind, channel), (_, daggered) in zip(assignment, ops):
            coef *= coeff.conjugate() if daggered else coeff
            (input_ops if kind == "in" else noise_ops).append((channel, daggered))
        if coef == 0:
            continue
        val_in = fock_expectation(amplitudes, input_ops)
        if val_in == 0:
            continue
        val_noise = _wick(noise_ops, noise_moments)
        if val_noise == 0:
            continue
        total += coef * val_in * val_noise
    return total


def mean_photon_numbers(
    state: InputState,
    params: SystemParams,
    noise_moments: NoiseMoments | None = None,
) -> tuple[float, float]:
    """(<a+ a>, <b+ b>) at the output, via the enumeration engine."""
    if noise_moments is None:
        noise_moments = filtered_noise_moments(params)
    n_a = expectation([("a", True), ("a", False)], state, params, noise_moments)
    n_b = expectation([("b", True), ("b", False)], state, params, noise_moments)
    return n_a.real, n_b.real


def fourth_moment_expand(
    state: InputState,
    params: SystemParams,
    noise_moments: NoiseMoments | None = None,
) -> float:
    """Exact <a+ b+ a b> at the output for any supported input state."""
    value = expectation(
        [("a", True), ("b", True), ("a", False), ("b", False)],
        state,
        params,
        noise_moments,
    )
    return value.real
