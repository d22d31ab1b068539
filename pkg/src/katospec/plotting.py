"""Matplotlib figures for census summaries and order diagrams."""

from __future__ import annotations

from collections import Counter
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .space import FinitePoset  # noqa: E402

# fixed metadata keeps repeated renders byte-identical
_PNG_META = {"Software": None}


def _levels(p: FinitePoset) -> list:
    level = [0] * p.size
    changed = True
    while changed:
        changed = False
        for x, y in p.covers():
            if level[y] < level[x] + 1:
                level[y] = level[x] + 1
                changed = True
    return level


def hasse_figure(p: FinitePoset, path: str, labels: Optional[Sequence[str]] = None, title: str = ""):
    """Draw the Hasse diagram, smaller points at the bottom."""
    level = _levels(p)
    rows = Counter()
    pos = {}
    for x in range(p.size):
        pos[x] = (rows[level[x]], level[x])
        rows[level[x]] += 1
    for x in range(p.size):
        col, lev = pos[x]
        pos[x] = (col - (rows[lev] - 1) / 2, lev)
    fig, ax = plt.subplots(figsize=(4, 1.2 + 1.1 * (max(level, default=0) + 1)))
    for x, y in p.covers():
        ax.plot([pos[x][0], pos[y][0]], [pos[x][1], pos[y][1]], color="0.4", lw=1, zorder=1)
    for x in range(p.size):
        ax.scatter(*pos[x], s=260, color="white", edgecolor="black", zorder=2)
        ax.annotate(labels[x] if labels else str(x), pos[x], ha="center", va="center", fontsize=8, zorder=3)
    ax.set_axis_off()
    ax.margins(0.25)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_PNG_META)
    plt.close(fig)


def census_figures(rows: list, outdir: str) -> list:
    """Spectrum-size histogram per monoid order and verdict counts per poset size."""
    written = []
    monoid_rows = [r for r in rows if r["kind"] == "monoid"]
    if monoid_rows:
        fig, ax = plt.subplots(figsize=(6, 3.5))
        orders = sorted({r["order"] for r in monoid_rows})
        width = 0.8 / len(orders)
        for k, n in enumerate(orders):
            counts = Counter(r["spec_points"] for r in monoid_rows if r["order"] == n)
            xs = sorted(counts)
            ax.bar([x + k * width for x in xs], [counts[x] for x in xs], width=width, label=f"order {n}")
        ax.set_xlabel("number of prime ideals")
        ax.set_ylabel("monoid classes")
        ax.legend(frameon=False, fontsize=8)
        fig.tight_layout()
        path = f"{outdir}/spectrum_sizes.png"
        fig.savefig(path, dpi=120, metadata=_PNG_META)
        plt.close(fig)
        written.append(path)
    poset_rows = [r for r in rows if r["kind"] == "poset"]
    if poset_rows:
        fig, ax = plt.subplots(figsize=(6, 3.5))
        sizes = sorted({r["size"] for r in poset_rows})
        yes = [sum(1 for r in poset_rows if r["size"] == n and r["is_spectrum"]) for n in sizes]
        no = [sum(1 for r in poset_rows if r["size"] == n and not r["is_spectrum"]) for n in sizes]
        ax.bar(sizes, yes, label="monoid spectrum", color="tab:blue")
        ax.bar(sizes, no, bottom=yes, label="not a spectrum", color="tab:gray")
        ax.set_xlabel("points")
        ax.set_ylabel("T0 spaces up to homeomorphism")
        ax.set_yscale("log")
        ax.legend(frameon=False, fontsize=8)
        fig.tight_layout()
        path = f"{outdir}/poset_verdicts.png"
        fig.savefig(path, dpi=120, metadata=_PNG_META)
        plt.close(fig)
        written.append(path)
    return written
