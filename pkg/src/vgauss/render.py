"""Deterministic SVG figures: Gauss diagrams and writhe spectra."""
from __future__ import annotations

import math
from typing import IO, Mapping

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Circle, FancyArrowPatch

from .diagram import ChordDiagram
from .invariants import WritheSpectrum

__all__ = ["render_diagram", "render_spectra"]

_RC = {
    "svg.hashsalt": "vgauss",
    "svg.fonttype": "none",
    "font.family": "DejaVu Sans",
    "font.size": 9,
}
_RADIUS = 1.0
_SPACING = 3.0


def _save(fig: Figure, out: str | IO) -> None:
    with matplotlib.rc_context(_RC):
        fig.savefig(out, format="svg", metadata={"Date": None})


def _endpoint_xy(ci: int, pos: int, n: int, scale: float = 1.0) -> tuple[float, float]:
    # counterclockwise from the top
    theta = math.pi / 2 + 2 * math.pi * pos / max(n, 1)
    return ci * _SPACING + scale * _RADIUS * math.cos(theta), scale * _RADIUS * math.sin(theta)


def render_diagram(d: ChordDiagram, out: str | IO, title: str | None = None) -> None:
    """Draw one circle per component and every chord as an arrow tail -> head.

    Positive chords are solid, negative chords dashed.  Each circle carries a
    small arrow showing its orientation.
    """
    n = d.n_components
    with matplotlib.rc_context(_RC):
        fig = Figure(figsize=(2.6 * n + 0.4, 3.0))
        ax = fig.add_axes((0, 0, 1, 1))
        ax.set_aspect("equal")
        ax.axis("off")
        ax.set_xlim(-1.6, (n - 1) * _SPACING + 1.6)
        ax.set_ylim(-1.6, 1.6 if title is None else 1.9)
        for ci, size in enumerate(d.sizes):
            ax.add_patch(Circle((ci * _SPACING, 0), _RADIUS, fill=False, lw=1.2, color="black"))
            a = _endpoint_xy(ci, -0.5, 8)
            b = _endpoint_xy(ci, 0.5, 8)
            ax.add_patch(FancyArrowPatch(a, b, connectionstyle="arc3,rad=0.2", arrowstyle="-|>",
                                         mutation_scale=10, lw=1.2, color="gray"))
            ax.text(ci * _SPACING, -1.45, f"component {ci}", ha="center", va="center", color="gray")
        for c in d.chords:
            t = _endpoint_xy(c.tail.component, c.tail.position, d.sizes[c.tail.component])
            h = _endpoint_xy(c.head.component, c.head.position, d.sizes[c.head.component])
            ax.add_patch(FancyArrowPatch(t, h, arrowstyle="-|>", mutation_scale=12, lw=1.0,
                                         linestyle="-" if c.sign > 0 else "--", color="black",
                                         shrinkA=1, shrinkB=1))
            for ref in (c.tail, c.head):
                x, y = _endpoint_xy(ref.component, ref.position, d.sizes[ref.component], 1.15)
                ax.text(x, y, c.id, ha="center", va="center", fontsize=7)
        if title:
            ax.text((n - 1) * _SPACING / 2, 1.75, title, ha="center", va="center")
        _save(fig, out)


def render_spectra(spectra: Mapping[str, WritheSpectrum], out: str | IO, title: str = "") -> None:
    """Grouped bar chart of ``J_n`` against ``n`` for each named spectrum."""
    keys = sorted({n for sp in spectra.values() for n in sp.values})
    with matplotlib.rc_context(_RC):
        fig = Figure(figsize=(max(3.0, 0.7 * len(keys) + 1.5), 2.8))
        ax = fig.add_subplot()
        width = 0.8 / max(len(spectra), 1)
        for k, (name, sp) in enumerate(spectra.items()):
            xs = [i + (k - (len(spectra) - 1) / 2) * width for i in range(len(keys))]
            ax.bar(xs, [sp[n] for n in keys], width=width, label=name)
        ax.axhline(0, color="black", lw=0.6)
        ax.set_xticks(range(len(keys)), [str(n) for n in keys])
        ax.set_xlabel("index n")
        ax.set_ylabel("J_n")
        if title:
            ax.set_title(title)
        if spectra:
            ax.legend(frameon=False)
        fig.tight_layout()
        _save(fig, out)
