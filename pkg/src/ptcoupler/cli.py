"""Command-line front end: parameter sweeps, figure-data export, self-check.

Output is UTF-8 CSV with a single '#'-prefixed JSON metadata line carrying
the sweep parameters, regime classification per gain value, and the package
version.  Rows contain no timestamps, so identical specs produce identical
bytes.  Undefined correlations are emitted as empty fields with defined=0.

Exit codes: 0 success, 1 self-check failure, 2 invalid arguments, 3 I/O error.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .core import SystemParams, classify_regime
from .noise import spontaneous_signals
from .observables import (
    UndefinedCorrelationError,
    hbt_vacuum,
    intensities,
    noon_g2,
)
from .selfcheck import format_report, run_self_check
from .states import InputState

CSV_COLUMNS = (
    "l,g,i_a,i_b,i_a_st,i_b_st,s_a,s_b,re_s_ab,im_s_ab,q,g2,regime,defined"
)

FIGURE_NUMBERS = (2, 3, 4, 5)
_FIGURE_GS = (0.9, 1.5)
_FIGURE_L_MAX = 6.0
_FIGURE_POINTS = 601


class InvalidSpecError(ValueError):
    """Raised when a sweep specification violates its invariants."""


@dataclass(frozen=True)
class SweepSpec:
    g_values: tuple[float, ...]
    l_min: float
    l_max: float
    l_points: int
    input: InputState
    include_spontaneous: bool
    output_path: str

    def __post_init__(self):
        if not self.g_values:
            raise InvalidSpecError("need at least one g value")
        if any(not (g >= 0.0) for g in self.g_values):
            raise InvalidSpecError(f"all g must be >= 0, got {self.g_values}")
        if not (self.l_min >= 0.0):
            raise InvalidSpecError(f"l_min must be >= 0, got {self.l_min}")
        if not (self.l_max > self.l_min):
            raise InvalidSpecError(
                f"l_max must exceed l_min, got [{self.l_min}, {self.l_max}]"
            )
        if self.l_points < 2:
            raise InvalidSpecError(f"l_points must be >= 2, got {self.l_points}")


@dataclass(frozen=True)
class SweepRow:
    l: float
    g: float
    i_a: float
    i_b: float
    i_a_st: float
    i_b_st: float
    s_a: float
    s_b: float
    re_s_ab: float
    im_s_ab: float
    q: float | None
    g2: float | None
    regime: str
    defined: bool


def _observe(state: InputState, params: SystemParams, include_spontaneous: bool):
    """(intensities, q, g2, defined) honoring the spontaneous flag."""
    if state is InputState.NOON2:
        try:
            out = noon_g2(params, include_spontaneous)
            return out, out.q, out.g2, True
        except UndefinedCorrelationError:
            out = intensities(state, params)
            return out, None, None, False
    out = intensities(state, params)
    if not include_spontaneous:
        out = type(out)(
            i_a=out.i_a_st, i_b=out.i_b_st, i_a_st=out.i_a_st, i_b_st=out.i_b_st
        )
    if state is InputState.VACUUM and include_spontaneous:
        try:
            hbt = hbt_vacuum(params)
            return out, hbt.q, hbt.g2, True
        except UndefinedCorrelationError:
            return out, None, None, False
    # single-photon inputs: no closed-form correlation is defined
    return out, None, None, False


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """One row per (g, l), g outer and l inner, in deterministic order."""
    ls = [float(x) for x in np.linspace(spec.l_min, spec.l_max, spec.l_points)]
    rows = []
    for g in spec.g_values:
        regime = classify_regime(SystemParams(g, 0.0)).tag.value
        for l in ls:
            params = SystemParams(g, l)
            s = spontaneous_signals(params)
            out, q, g2, defined = _observe(spec.input, params, spec.include_spontaneous)
            rows.append(
                SweepRow(
                    l=l,
                    g=g,
                    i_a=out.i_a,
                    i_b=out.i_b,
                    i_a_st=out.i_a_st,
                    i_b_st=out.i_b_st,
                    s_a=s.s_a,
                    s_b=s.s_b,
                    re_s_ab=s.s_ab.real,
                    im_s_ab=s.s_ab.imag,
                    q=q,
                    g2=g2,
                    regime=regime,
                    defined=defined,
                )
            )
    return rows


def _metadata(spec: SweepSpec, extra: dict | None = None) -> dict:
    meta = {
        "artifact": "ptcoupler",
        "version": __version__,
        "format": "sweep-v1",
        "spec": {
            "g_values": list(spec.g_values),
            "l_min": spec.l_min,
            "l_max": spec.l_max,
            "l_points": spec.l_points,
            "input": spec.input.value,
            "include_spontaneous": spec.include_spontaneous,
        },
        "regimes": {
            repr(g): classify_regime(SystemParams(g, 0.0)).tag.value
            for g in spec.g_values
        },
    }
    if extra:
        meta.update(extra)
    return meta


def _format_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(spec: SweepSpec, rows: list[SweepRow], extra_meta: dict | None = None) -> str:
    lines = ["# " + json.dumps(_metadata(spec, extra_meta), sort_keys=True)]
    lines.append(CSV_COLUMNS)
    for r in rows:
        lines.append(
            ",".join(
                _format_field(v)
                for v in (
                    r.l, r.g, r.i_a, r.i_b, r.i_a_st, r.i_b_st,
                    r.s_a, r.s_b, r.re_s_ab, r.im_s_ab, r.q, r.g2,
                    r.regime, r.defined,
                )
            )
        )
    return "\n".join(lines) + "\n"


def write_sweep(spec: SweepSpec, extra_meta: dict | None = None) -> None:
    text = render_csv(spec, run_sweep(spec), extra_meta)
    if spec.output_path == "-":
        sys.stdout.write(text)
    else:
        Path(spec.output_path).write_text(text, encoding="utf-8")


def _with_suffix(out: str, suffix: str) -> str:
    p = Path(out)
    return str(p.with_name(p.stem + "_" + suffix + (p.suffix or ".csv")))


def figure_specs(number: int, out: str) -> list[tuple[SweepSpec, dict]]:
    """Sweep specs reproducing the data behind one of the standard figures.

    Figures 4 and 5 need two datasets each (two input ports; with/without
    spontaneous generation), emitted as <out>_<variant>.csv.
    """
    if number not in FIGURE_NUMBERS:
        raise InvalidSpecError(f"unknown figure {number}; choose from {FIGURE_NUMBERS}")

    def spec(input_state, include_spontaneous=True, path=out):
        return SweepSpec(
            g_values=_FIGURE_GS,
            l_min=0.0,
            l_max=_FIGURE_L_MAX,
            l_points=_FIGURE_POINTS,
            input=input_state,
            include_spontaneous=include_spontaneous,
            output_path=path,
        )

    preset = {"preset": f"figure{number}"}
    if number == 2:  # spontaneous signal growth, vacuum input
        return [(spec(InputState.VACUUM), {**preset, "payload": "s_a,s_b"})]
    if number == 3:  # vacuum-induced cross-correlation
        return [(spec(InputState.VACUUM), {**preset, "payload": "q"})]
    if number == 4:  # single-photon inputs, stimulated vs total
        return [
            (
                spec(InputState.PHOTON_A, path=_with_suffix(out, "a")),
                {**preset, "variant": "input-a"},
            ),
            (
                spec(InputState.PHOTON_B, path=_with_suffix(out, "b")),
                {**preset, "variant": "input-b"},
            ),
        ]
    # figure 5: NOON correlation with and without spontaneous generation
    return [
        (
            spec(InputState.NOON2, path=_with_suffix(out, "full")),
            {**preset, "variant": "full"},
        ),
        (
            spec(InputState.NOON2, include_spontaneous=False, path=_with_suffix(out, "stim")),
            {**preset, "variant": "stimulated-only"},
        ),
    ]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptcoupler",
        description="Quantized-field observables for a gain/loss coupled waveguide pair.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate observables over a (g, l) grid")
    sweep.add_argument(
        "--g", action="append", type=float, required=True,
        help="gain ratio; repeat the flag for several values",
    )
    sweep.add_argument("--lmin", type=float, default=0.0, help="start of the length grid")
    sweep.add_argument("--lmax", type=float, default=6.0, help="end of the length grid")
    sweep.add_argument("--points", type=int, default=601, help="number of length samples")
    sweep.add_argument(
        "--input", choices=[s.value for s in InputState], default="vacuum",
        help="input state: vacuum, single photon in a or b, or two-photon noon",
    )
    sweep.add_argument(
        "--no-spontaneous", action="store_true",
        help="drop spontaneous generation from totals and correlations (reference curves)",
    )
    sweep.add_argument("--out", required=True, help="output CSV path ('-' for stdout)")

    figure = sub.add_parser(
        "figure", help="export the dataset behind one of the standard figures"
    )
    figure.add_argument("number", type=int, choices=FIGURE_NUMBERS)
    figure.add_argument(
        "--out", required=True,
        help="output CSV path; figures 4 and 5 write <out>_<variant>.csv",
    )

    check = sub.add_parser("check", help="run the built-in invariant suite")
    check.add_argument(
        "--g", nargs="*", type=float, default=None,
        help="override the g grid (no values -> vacuous pass)",
    )
    check.add_argument(
        "--l", nargs="*", type=float, default=None,
        help="override the l grid (no values -> vacuous pass)",
    )
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            spec = SweepSpec(
                g_values=tuple(args.g),
                l_min=args.lmin,
                l_max=args.lmax,
                l_points=args.points,
                input=InputState(args.input),
                include_spontaneous=not args.no_spontaneous,
                output_path=args.out,
            )
            write_sweep(spec)
            return 0
        if args.command == "figure":
            for spec, extra in figure_specs(args.number, args.out):
                write_sweep(spec, extra)
                if spec.output_path != "-":
                    print(f"wrote {spec.output_path}")
            return 0
        if args.command == "check":
            results = run_self_check(args.g, args.l)
            print(format_report(results))
            return 0 if all(r.passed for r in results) else 1
        parser.error(f"unknown command {args.command!r}")
    except (InvalidSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
