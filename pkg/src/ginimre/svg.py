"""Minimal SVG plots of MRE borders over the data scatter."""
from __future__ import annotations

from html import escape
from typing import Sequence

import numpy as np

from .hausdorff import border_chain, clip_chain
from .mre import MREPolyline

WIDTH, HEIGHT = 800, 600
_PAD = dict(left=80, right=30, top=40, bottom=60)
PALETTE = ("#000000", "#1f4fd1", "#c03030", "#2a8a2a", "#9040b0", "#d08000")


def _ticks(lo, hi, n=6):
    raw = (hi - lo) / n
    mag = 10 ** np.floor(np.log10(raw)) if raw > 0 else 1.0
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=mag)
    return np.arange(np.ceil(lo / step) * step, hi + 1e-9 * step, step)


def _scale_label(name, values):
    """Rescale large-valued axes to thousands, as in ``GDP (1000 USD)``."""
    if np.abs(values).max() >= 1e4:
        return 1e-3, f"{name} (1000)"
    return 1.0, name


def render(polylines: Sequence[tuple[MREPolyline, str, int]], points: Sequence[np.ndarray] = (),
           labels: Sequence[str] = ("attribute 1", "attribute 2"), title: str = "") -> str:
    """SVG text with every polyline (clipped rays included) and scatter sets.

    Each entry of ``polylines`` is ``(border, caption, group)``; ``points``
    holds one ``(n, 2)`` array per group.  A group shares one colour.
    """
    clouds = [np.asarray(p, dtype=float) for p in points]
    every = np.vstack([p.vertices for p, _, _ in polylines] + clouds)
    lo, hi = every.min(axis=0), every.max(axis=0)
    span = np.where(hi > lo, hi - lo, 1.0)
    lo, hi = lo - 0.05 * span, hi + 0.05 * span
    window = (lo[0], lo[1], hi[0], hi[1])
    sx, xlabel = _scale_label(labels[0], every[:, 0])
    sy, ylabel = _scale_label(labels[1], every[:, 1])

    pw = WIDTH - _PAD["left"] - _PAD["right"]
    ph = HEIGHT - _PAD["top"] - _PAD["bottom"]

    def X(x):
        return _PAD["left"] + (x - lo[0]) / (hi[0] - lo[0]) * pw

    def Y(y):
        return _PAD["top"] + (hi[1] - y) / (hi[1] - lo[1]) * ph

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
           f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
           f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
           f'<rect x="{_PAD["left"]}" y="{_PAD["top"]}" width="{pw}" height="{ph}" '
           'fill="none" stroke="#444"/>']
    for t in _ticks(lo[0] * sx, hi[0] * sx):
        x = X(t / sx)
        out.append(f'<line x1="{x:.2f}" y1="{_PAD["top"] + ph}" x2="{x:.2f}" '
                   f'y2="{_PAD["top"] + ph + 5}" stroke="#444"/>')
        out.append(f'<text x="{x:.2f}" y="{_PAD["top"] + ph + 18}" text-anchor="middle">{t:g}</text>')
    for t in _ticks(lo[1] * sy, hi[1] * sy):
        y = Y(t / sy)
        out.append(f'<line x1="{_PAD["left"] - 5}" y1="{y:.2f}" x2="{_PAD["left"]}" '
                   f'y2="{y:.2f}" stroke="#444"/>')
        out.append(f'<text x="{_PAD["left"] - 8}" y="{y + 4:.2f}" text-anchor="end">{t:g}</text>')
    out.append(f'<text x="{_PAD["left"] + pw / 2}" y="{HEIGHT - 15}" '
               f'text-anchor="middle">{escape(xlabel)}</text>')
    out.append(f'<text x="18" y="{_PAD["top"] + ph / 2}" text-anchor="middle" '
               f'transform="rotate(-90 18 {_PAD["top"] + ph / 2})">{escape(ylabel)}</text>')
    if title:
        out.append(f'<text x="{WIDTH / 2}" y="24" text-anchor="middle" '
                   f'font-size="15">{escape(title)}</text>')
    for k, cloud in enumerate(clouds):
        colour = PALETTE[k % len(PALETTE)]
        for x, y in cloud:
            out.append(f'<circle cx="{X(x):.2f}" cy="{Y(y):.2f}" r="3" fill="{colour}" '
                       'fill-opacity="0.6"/>')
    for poly, caption, group in polylines:
        colour = PALETTE[group % len(PALETTE)]
        chain = clip_chain(border_chain(poly, window), window)
        path = " ".join(f"{X(x):.2f},{Y(y):.2f}" for x, y in chain)
        out.append(f'<polyline points="{path}" fill="none" stroke="{colour}" stroke-width="1.5">'
                   f'<title>{escape(caption)}</title></polyline>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

