#!/usr/bin/env python3
"""Export the datasets behind the four standard figures, optionally plotting.

Writes one CSV per figure variant into --outdir via the same presets as
`ptcoupler figure N`.  With --plot, renders quick-look PNGs next to the CSVs
(matplotlib required; everything else works without it).
"""

import argparse
import csv
import json
from pathlib import Path

from ptcoupler.cli import FIGURE_NUMBERS, figure_specs, run_sweep, render_csv


def load_rows(path: Path):
    with path.open(encoding="utf-8") as fh:
        meta = json.loads(fh.readline()[2:])
        rows = list(csv.DictReader(fh))
    return meta, rows


def export_all(outdir: Path) -> list[Path]:
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for number in FIGURE_NUMBERS:
        for spec, extra in figure_specs(number, str(outdir / f"figure{number}.csv")):
            text = render_csv(spec, run_sweep(spec), extra)
            path = Path(spec.output_path)
            path.write_text(text, encoding="utf-8")
            written.append(path)
            print(f"wrote {path}")
    return written


def _series(rows, g, column):
    xs = [float(r["l"]) for r in rows if float(r["g"]) == g and r[column] != ""]
    ys = [float(r[column]) for r in rows if float(r["g"]) == g and r[column] != ""]
    return xs, ys


def plot_all(outdir: Path, paths: list[Path]) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_name = {p.name: p for p in paths}

    # spontaneous generation, both ports (B scaled x10 for visibility)
    meta, rows = load_rows(by_name["figure2.csv"])
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.5), sharex=True)
    for ax, g in zip(axes, meta["spec"]["g_values"]):
        ax.plot(*_series(rows, g, "s_a"), label="port A")
        xs, ys = _series(rows, g, "s_b")
        ax.plot(xs, [10 * y for y in ys], "--", label="port B (x10)")
        ax.set_title(f"g = {g}")
        ax.set_xlabel("l")
        ax.set_yscale("log" if g > 1 else "linear")
        ax.legend()
    axes[0].set_ylabel("spontaneous photons")
    fig.tight_layout()
    fig.savefig(outdir / "figure2.png", dpi=150)

    # vacuum-induced cross correlation
    meta, rows = load_rows(by_name["figure3.csv"])
    fig, ax = plt.subplots(figsize=(5, 3.5))
    for g in meta["spec"]["g_values"]:
        ax.plot(*_series(rows, g, "q"), label=f"g = {g}")
    ax.set_xlabel("l")
    ax.set_ylabel("q")
    ax.legend()
    fig.tight_layout()
    fig.savefig(outdir / "figure3.png", dpi=150)

    # single-photon inputs: total vs stimulated means
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
    for row_idx, variant in enumerate(("a", "b")):
        meta, rows = load_rows(by_name[f"figure4_{variant}.csv"])
        for col_idx, g in enumerate(meta["spec"]["g_values"]):
            ax = axes[row_idx][col_idx]
            ax.plot(*_series(rows, g, "i_a"), label="A total")
            ax.plot(*_series(rows, g, "i_b"), "--", label="B total")
            ax.plot(*_series(rows, g, "i_a_st"), ":", label="A stimulated")
            ax.plot(*_series(rows, g, "i_b_st"), ":", label="B stimulated")
            ax.set_title(f"input {variant.upper()}, g = {g}")
            if g > 1:
                ax.set_yscale("log")
    for ax in axes[1]:
        ax.set_xlabel("l")
    axes[0][0].legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(outdir / "figure4.png", dpi=150)

    # NOON correlation with and without spontaneous generation
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
    for row_idx, variant in enumerate(("full", "stim")):
        meta, rows = load_rows(by_name[f"figure5_{variant}.csv"])
        for col_idx, g in enumerate(meta["spec"]["g_values"]):
            ax = axes[row_idx][col_idx]
            ax.plot(*_series(rows, g, "g2"))
            ax.axhline(1.0, color="gray", lw=0.5)
            ax.set_title(f"{variant}, g = {g}")
    for ax in axes[1]:
        ax.set_xlabel("l")
    axes[0][0].set_ylabel("g2")
    fig.tight_layout()
    fig.savefig(outdir / "figure5.png", dpi=150)
    print(f"wrote plots to {outdir}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path("figures_data"))
    parser.add_argument("--plot", action="store_true", help="also render PNGs")
    args = parser.parse_args()
    paths = export_all(args.outdir)
    if args.plot:
        plot_all(args.outdir, paths)


if __name__ == "__main__":
    main()
