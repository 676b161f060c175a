"""Static circular-layout drawings of path families (DOT and SVG)."""

from __future__ import annotations

import math
from typing import Sequence

from .circulant import PathFamily, PathSeq

PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"]


def circle_positions(n: int, radius: float = 1.0) -> dict[int, tuple[float, float]]:
    """Vertex 1 at the top, labels increasing clockwise."""
    pos = {}
    for v in range(1, n + 1):
        a = math.pi / 2 - 2 * math.pi * (v - 1) / n
        pos[v] = (radius * math.cos(a), radius * math.sin(a))
    return pos


def _pick(family: PathFamily, which: Sequence[int] | None) -> list[tuple[int, PathSeq]]:
    idx = range(len(family)) if which is None else which
    out = []
    for i in idx:
        if not 0 <= i < len(family):
            raise IndexError(f"path index {i} out of range 0..{len(family) - 1}")
        out.append((i, family.paths[i]))
    return out


def to_dot(family: PathFamily, which: Sequence[int] | None = None) -> str:
    """Undirected DOT with pinned positions (render with ``neato -n``)."""
    n = family.n
    pos = circle_positions(n, radius=36.0 * max(n, 6) / 6)
    lines = ["graph family {", "  node [shape=circle, fontsize=10, width=0.3];"]
    for v in range(1, n + 1):
        x, y = pos[v]
        lines.append(f'  {v} [pos="{x:.2f},{y:.2f}!"];')
    for i, p in _pick(family, which):
        color = PALETTE[i % len(PALETTE)]
        for a, b in zip(p, p[1:]):
            lines.append(f'  {a} -- {b} [color="{color}", penwidth=2, label="P{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(family: PathFamily, which: Sequence[int] | None = None, size: int = 480) -> str:
    n = family.n
    c = size / 2
    r = size * 0.4
    pos = {v: (c + r * x, c - r * y) for v, (x, y) in circle_positions(n).items()}
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f'<rect width="{size}" height="{size}" fill="white"/>']
    for i, p in _pick(family, which):
        color = PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{pos[v][0]:.1f},{pos[v][1]:.1f}" for v in p)
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                   f'stroke-width="2" stroke-opacity="0.8"><title>P{i}</title></polyline>')
    for v in range(1, n + 1):
        x, y = pos[v]
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="9" fill="white" stroke="black"/>')
        out.append(f'<text x="{x:.1f}" y="{y + 3.5:.1f}" font-size="10" '
                   f'text-anchor="middle" font-family="sans-serif">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
