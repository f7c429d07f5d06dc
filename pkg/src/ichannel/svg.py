"""Minimal deterministic SVG plots of rate regions."""
from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

WIDTH, HEIGHT = 560, 460
LEFT, RIGHT, TOP, BOTTOM = 70, 20, 40, 60


def _nice_step(span: float) -> float:
    raw = span / 5.0
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 2.5, 5, 10):
        if m * mag >= raw:
            return m * mag
    return 10 * mag


def render(
    series: Sequence[tuple[str, Sequence[tuple[float, float]]]],
    title: str = "",
    limits: tuple[float, float] | None = None,
) -> str:
    """One filled polygon per (label, ccw vertices) series, axes in nats."""
    if limits is None:
        top = max((max(x, y) for _, vs in series for x, y in vs), default=1.0)
        top = top * 1.05 if top > 0 else 1.0
        limits = (top, top)
    xmax, ymax = limits
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def sx(x):
        return LEFT + pw * x / xmax

    def sy(y):
        return TOP + ph * (1.0 - y / ymax)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="24" text-anchor="middle" font-size="15">'
        f'{escape(title)}</text>',
    ]
    for k, (label, vs) in enumerate(series):
        colour = PALETTE[k % len(PALETTE)]
        pts = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in vs)
        out.append(
            f'<polygon points="{pts}" fill="{colour}" fill-opacity="0.12" '
            f'stroke="{colour}" stroke-width="2"><title>{escape(label)}</title></polygon>'
        )

    x0, y0 = sx(0), sy(0)
    out.append(f'<line x1="{x0:.3f}" y1="{y0:.3f}" x2="{sx(xmax):.3f}" y2="{y0:.3f}" stroke="black"/>')
    out.append(f'<line x1="{x0:.3f}" y1="{y0:.3f}" x2="{x0:.3f}" y2="{sy(ymax):.3f}" stroke="black"/>')
    for axis, top in (("x", xmax), ("y", ymax)):
        step = _nice_step(top)
        n = int(math.floor(top / step + 1e-9))
        for j in range(n + 1):
            v = j * step
            if axis == "x":
                out.append(f'<line x1="{sx(v):.3f}" y1="{y0:.3f}" x2="{sx(v):.3f}" '
                           f'y2="{y0 + 5:.3f}" stroke="black"/>')
                out.append(f'<text x="{sx(v):.3f}" y="{y0 + 18:.3f}" text-anchor="middle" '
                           f'font-size="11">{v:.4g}</text>')
            else:
                out.append(f'<line x1="{x0 - 5:.3f}" y1="{sy(v):.3f}" x2="{x0:.3f}" '
                           f'y2="{sy(v):.3f}" stroke="black"/>')
                out.append(f'<text x="{x0 - 8:.3f}" y="{sy(v) + 4:.3f}" text-anchor="end" '
                           f'font-size="11">{v:.4g}</text>')
    out.append(f'<text x="{LEFT + pw / 2:.1f}" y="{HEIGHT - 18}" text-anchor="middle" '
               f'font-size="13">R1 (nats/use)</text>')
    out.append(f'<text x="18" y="{TOP + ph / 2:.1f}" text-anchor="middle" font-size="13" '
               f'transform="rotate(-90 18 {TOP + ph / 2:.1f})">R2 (nats/use)</text>')

    for k, (label, _) in enumerate(series):
        colour = PALETTE[k % len(PALETTE)]
        y = TOP + 12 + 18 * k
        lx = WIDTH - RIGHT - 190
        out.append(f'<rect x="{lx}" y="{y - 9}" width="14" height="10" fill="{colour}" '
                   f'fill-opacity="0.4" stroke="{colour}"/>')
        out.append(f'<text x="{lx + 20}" y="{y}" font-size="11">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
