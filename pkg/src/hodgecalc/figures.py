"""Matplotlib renderings written alongside the delimited reports.

Figures are optional CLI output: bigraded heatmaps of the model pages
for a scenario run, and a dimension comparison chart for the de Rham
versus singular tables.  Everything renders off-screen to PNG files.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .algebras import dimension_table
from .catalog import get_scenario
from .spectral import BigradedDimensionTable, e2_table, einfty_table


def _page_axes(ax, table: BigradedDimensionTable, title: str, bound: int) -> None:
    grid = np.zeros((bound + 1, bound + 1), dtype=int)
    for (i, j), v in table.items():
        if i <= bound and j <= bound:
            grid[j, i] = v
    masked = np.ma.masked_equal(grid, 0)
    ax.pcolormesh(np.arange(bound + 2) - 0.5, np.arange(bound + 2) - 0.5,
                  masked, cmap="viridis", shading="flat")
    if bound <= 24:
        for (i, j), v in table.items():
            if i <= bound and j <= bound:
                ax.text(i, j, str(v), ha="center", va="center", fontsize=7,
                        color="white")
    ax.set_xlim(-0.5, bound + 0.5)
    ax.set_ylim(-0.5, bound + 0.5)
    ax.set_xlabel("column")
    ax.set_ylabel("row")
    ax.set_title(title)
    ax.set_aspect("equal")


def render_run_figures(name: str, max_degree: int, outdir: str | Path) -> list[Path]:
    """Heatmaps of the model's E2 and E-infinity pages, if it has a model."""
    scenario = get_scenario(name)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    if scenario.model is not None:
        bound = min(max_degree, 24)
        fig, axes = plt.subplots(1, 2, figsize=(11, 5))
        _page_axes(axes[0], e2_table(scenario.model, bound),
                   f"{name}: E2 page", bound)
        _page_axes(axes[1], einfty_table(scenario.model, bound),
                   f"{name}: E-infinity page", bound)
        fig.tight_layout()
        path = outdir / f"{name}_pages.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)
    fig, ax = plt.subplots(figsize=(8, 4))
    degrees = np.arange(max_degree + 1)
    cand = dimension_table(scenario.candidate_ring, max_degree)
    ax.step(degrees, list(cand), where="mid", label="certified ring")
    if scenario.abutment_ring is not None:
        ab = dimension_table(scenario.abutment_ring, max_degree)
        ax.step(degrees, list(ab), where="mid", label="abutment", linestyle="--")
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.set_title(f"{name}: dimension tables")
    ax.legend()
    fig.tight_layout()
    path = outdir / f"{name}_tables.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written


def render_compare_figures(name: str, max_degree: int,
                           outdir: str | Path) -> list[Path]:
    """De Rham vs singular dimensions with strict gaps highlighted."""
    scenario = get_scenario(name)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    degrees = np.arange(max_degree + 1)
    dr = list(dimension_table(scenario.candidate_ring, max_degree))
    sing = list(dimension_table(scenario.singular_ring, max_degree))
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.step(degrees, dr, where="mid", label="de Rham")
    ax.step(degrees, sing, where="mid", label="singular", linestyle="--")
    gaps = [d for d in degrees if dr[d] != sing[d]]
    if gaps:
        ax.scatter(gaps, [dr[d] for d in gaps], color="red", zorder=3,
                   label="strict gap")
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension")
    ax.set_title(f"{name}: de Rham vs singular")
    ax.legend()
    fig.tight_layout()
    path = outdir / f"{name}_compare.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


__all__ = ["render_run_figures", "render_compare_figures"]
