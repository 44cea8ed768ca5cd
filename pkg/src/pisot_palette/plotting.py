"""Matplotlib figures written as SVG: palette cards, spectra and density curves."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle, Polygon  # noqa: E402

from .field import BaseSpec  # noqa: E402
from .voronoi import Protocell, vertex_point  # noqa: E402

# fixed ids and no timestamp keep repeated renders byte-identical
matplotlib.rcParams["svg.hashsalt"] = "pisot-palette"
matplotlib.rcParams["svg.fonttype"] = "none"


def save_svg(fig, path) -> None:
    fig.savefig(path, format="svg", metadata={"Date": None, "Creator": None})
    plt.close(fig)


def _cell_polygon(cell: Protocell, base: BaseSpec):
    pts = [vertex_point(v.pair[0], v.pair[1], base) for v in cell.vertices]
    return [(round(p.real, 6), round(p.imag, 6)) for p in pts]


def draw_protocell(ax, cell: Protocell, base: BaseSpec, label: str | None = None):
    poly = _cell_polygon(cell, base)
    ax.add_patch(Polygon(poly, closed=True, facecolor="#dfe8f3", edgecolor="#1f3b63", linewidth=1.2))
    R = math.sqrt(base.approx(cell.Delta_sq)) / 2
    r = math.sqrt(base.approx(cell.delta_sq)) / 2
    ax.add_patch(Circle((0, 0), R, fill=False, linestyle=":", edgecolor="grey", linewidth=0.7))
    ax.add_patch(Circle((0, 0), r, fill=False, linestyle="--", edgecolor="#b04020", linewidth=0.7))
    for z in cell.neighbors:
        w = base.to_complex(z)
        ax.plot([0, w.real], [0, w.imag], color="#888888", linewidth=0.5)
        ax.plot(w.real, w.imag, "o", color="black", markersize=2.5)
    ax.plot(0, 0, "o", color="#b04020", markersize=3)
    span = max(max(abs(base.to_complex(z)) for z in cell.neighbors), R) * 1.1
    ax.set_xlim(-span, span)
    ax.set_ylim(-span, span)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    if label:
        ax.set_title(label, fontsize=7)


def palette_figure(cells, base: BaseSpec, title: str = ""):
    n = len(cells)
    cols = min(n, 4)
    rows = math.ceil(n / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(2.4 * cols, 2.5 * rows), squeeze=False)
    for k, ax in enumerate(axes.flat):
        if k >= n:
            ax.axis("off")
            continue
        c = cells[k]
        d = base.sqrt_approx(c.delta_sq)
        D = base.sqrt_approx(c.Delta_sq)
        Ds = base.sqrt_approx(c.delta_star_sq)
        draw_protocell(ax, c, base, f"δ={d:.4f}  Δ={D:.4f}\nΔ*={Ds:.4f}")
    if title:
        fig.suptitle(title, fontsize=9)
    fig.tight_layout()
    return fig


def spectra_figure(reports, title: str = ""):
    ms = [r.m for r in reports]
    fig, ax = plt.subplots(figsize=(5, 3.4))
    ax.plot(ms, [r.ell for r in reports], "o-", label="ℓ_m", markersize=3)
    ax.plot(ms, [r.L for r in reports], "s-", label="L_m", markersize=3)
    ax.plot(ms, [r.L_star for r in reports], "^-", label="L*_m", markersize=3)
    ax.set_xlabel("m")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    return fig


def density_figure(levels, title: str = ""):
    fig, ax = plt.subplots(figsize=(5, 3.4))
    ax.plot([d.level for d in levels], [d.n for d in levels], "o-", markersize=3)
    ax.set_xlabel("level k")
    ax.set_ylabel("count / r_k²")
    ax.set_yscale("log")
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    return fig
