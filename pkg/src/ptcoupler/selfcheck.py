"""Built-in invariant suite behind the CLI `check` subcommand.

Each check returns a CheckResult with the worst deviation it saw; failures
are data, not exceptions, so the whole table always prints.  Tolerances on
identities are scale-aware: |x - y| <= tol * max(1, |x|, |y|).  For order-one
quantities that is an absolute comparison; for exponentially grown ones it is
the relative agreement float64 can actually express.
"""

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import noise, observables, oracle
from .core import SystemParams, classify_regime, propagator
from .states import InputState

STANDARD_GS = (0.0, 0.3, 0.9, 1.0, 1.1, 1.5, 3.0)
STANDARD_LS = (0.1, 0.5, 1.0, 2.0, 5.0)


def rel_gap(x, y) -> float:
    """|x - y| scaled by max(1, |x|, |y|); absolute near 1, relative beyond."""
    return abs(x - y) / max(1.0, abs(x), abs(y))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    note: str = ""


def _grid(gs, ls):
    return [(g, l) for g in gs for l in ls]


def _check_det(points) -> CheckResult:
    worst = 0.0
    for g, l in points:
        k = propagator(SystemParams(g, l))
        scale = max(abs(k.k_aa), abs(k.k_ab), abs(k.k_bb)) ** 2
        worst = max(worst, abs(k.det - 1.0) / max(1.0, scale))
    return CheckResult("propagator det K = 1", worst <= 1e-12, worst, 1e-12)


def _check_semigroup(points) -> CheckResult:
    worst = 0.0
    for g, l in points:
        k_full = propagator(SystemParams(g, l)).as_matrix()
        for frac in (0.5, 0.25):
            k1 = propagator(SystemParams(g, l * frac)).as_matrix()
            k2 = propagator(SystemParams(g, l * (1.0 - frac))).as_matrix()
            composed = k2 @ k1
            scale = float(np.abs(k_full).max())
            gap = float(np.abs(composed - k_full).max()) / max(1.0, scale)
            worst = max(worst, gap)
    return CheckResult("propagator semigroup K(l1+l2)=K(l2)K(l1)", worst <= 1e-10, worst, 1e-10)


def _check_exceptional_continuity(ls) -> CheckResult:
    worst = 0.0
    for l in ls:
        if l > 5.0:
            continue
        k0 = propagator(SystemParams(1.0, l)).as_matrix()
        for g in (1.0 - 1e-7, 1.0 + 1e-7):
            k = propagator(SystemParams(g, l)).as_matrix()
            worst = max(worst, float(np.abs(k - k0).max()))
    return CheckResult("propagator continuity across g = 1", worst <= 1e-5, worst, 1e-5)


def _check_commutators(points) -> CheckResult:
    worst = 0.0
    for g, l in points:
        c_aa, c_ab = noise.commutator_diagnostics(SystemParams(g, l))
        worst = max(worst, abs(c_aa - 1.0), abs(c_ab))
    return CheckResult("commutators [a,a+] = 1, [a,b+] = 0", worst <= 1e-10, worst, 1e-10)


def _check_noise_methods(points) -> CheckResult:
    worst = 0.0
    for g, l in points:
        p = SystemParams(g, l)
        cf = noise.spontaneous_signals(p, noise.Method.CLOSED_FORM)
        qd = noise.spontaneous_signals(p, noise.Method.QUADRATURE)
        worst = max(
            worst,
            rel_gap(cf.s_a, qd.s_a),
            rel_gap(cf.s_b, qd.s_b),
            rel_gap(abs(cf.s_ab), abs(qd.s_ab)),
        )
    return CheckResult("noise closed form vs quadrature", worst <= 1e-9, worst, 1e-9)


def _check_rk4_moments(points, steps=10_000) -> CheckResult:
    states = list(InputState)
    initials, params_list, expected = [], [], []
    for g, l in points:
        p = SystemParams(g, l)
        for state in states:
            initials.append(oracle.initial_moments(state))
            params_list.append(p)
            out = observables.intensities(state, p)
            expected.append((out.i_a, out.i_b))
    solved = oracle.moment_ode_batch(initials, params_list, steps)
    worst = 0.0
    for mv, (i_a, i_b) in zip(solved, expected):
        worst = max(worst, rel_gap(mv.n_a, i_a), rel_gap(mv.n_b, i_b))
    return CheckResult("RK4 moment ODE vs closed intensities", worst <= 1e-8, worst, 1e-8)


def _check_enumeration(points) -> CheckResult:
    worst = 0.0
    for g, l in points:
        p = SystemParams(g, l)
        nm = oracle.filtered_noise_moments(p)
        s = noise.spontaneous_signals(p)
        # vacuum: Gaussian factorization of the coincidence
        vac = oracle.fourth_moment_expand(InputState.VACUUM, p, nm)
        worst = max(worst, rel_gap(vac, s.s_a * s.s_b + abs(s.s_ab) ** 2))
        # NOON: three-contribution closed form
        noon = oracle.fourth_moment_expand(InputState.NOON2, p, nm)
        worst = max(worst, rel_gap(noon, observables.noon_coincidence(p)))
        for state in InputState:
            n_a, n_b = oracle.mean_photon_numbers(state, p, nm)
            out = observables.intensities(state, p)
            worst = max(worst, rel_gap(n_a, out.i_a), rel_gap(n_b, out.i_b))
    return CheckResult("term enumeration vs closed observables", worst <= 1e-9, worst, 1e-9)


def _check_asymptotics() -> CheckResult:
    g = 3.0
    rate, ratio = noise.asymptotic_spontaneous(g)
    ls = np.linspace(4.0, 6.0, 21)
    log_sa = [math.log(noise.spontaneous_signals(SystemParams(g, l)).s_a) for l in ls]
    slope = float(np.polyfit(ls, log_sa, 1)[0])
    s6 = noise.spontaneous_signals(SystemParams(g, 6.0))
    worst = max(abs(slope - rate) / rate, abs(s6.s_a / s6.s_b - ratio) / ratio)
    return CheckResult("broken-phase growth rate and A/B ratio", worst <= 0.01, worst, 0.01)


def run_self_check(
    gs: Sequence[float] | None = None, ls: Sequence[float] | None = None
) -> list[CheckResult]:
    """Run the invariant suite over a (g, l) grid; empty grid passes vacuously."""
    gs = STANDARD_GS if gs is None else tuple(gs)
    ls = STANDARD_LS if ls is None else tuple(ls)
    points = _grid(gs, ls)
    if not points:
        warnings.warn("self-check grid is empty; all checks pass vacuously")
        return [
            CheckResult(
                "grid", True, 0.0, 0.0, note="empty grid: vacuous pass"
            )
        ]
    return [
        _check_det(points),
        _check_semigroup(points),
        _check_exceptional_continuity(ls),
        _check_commutators(points),
        _check_noise_methods(points),
        _check_rk4_moments(points),
        _check_enumeration(points),
        _check_asymptotics(),
    ]


def format_report(results: Sequence[CheckResult]) -> str:
    lines = []
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        extra = f"  ({r.note})" if r.note else ""
        lines.append(
            f"{status}  {r.name:<{width}}  worst={r.worst:.3e}  tol={r.tolerance:.1e}{extra}"
        )
    overall = "PASS" if all(r.passed for r in results) else "FAIL"
    lines.append(f"overall: {overall}")
    return "\n".join(lines)
