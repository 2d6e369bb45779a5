"""Minimal self-contained SVG line plots (no plotting dependency).

Emits SVG 1.1 documents with axes, ticks, polyline curves, and a small
legend. Three stroke styles are understood: "solid" for primary curves,
"dashed" for comparison curves, "dotted" for reference lines.
"""

from __future__ import annotations

import math
from typing import Sequence

__all__ = ["line_plot", "write_svg"]

_DASH = {"solid": None, "dashed": "6,4", "dotted": "2,3"}
_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


def _nice_step(span: float, target: int) -> float:
    raw = span / max(target, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0):
        if raw <= mult * mag:
            return mult * mag
    return 10.0 * mag


def _ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    step = _nice_step(hi - lo, target)
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + 1e-9 * step:
        out.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return out


def _fmt(v: float) -> str:
    return f"{v:g}"


def line_plot(
    series: Sequence[tuple[str, Sequence[float], Sequence[float], str]],
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    width: int = 640,
    height: int = 440,
) -> str:
    """Render (label, xs, ys, style) curves to an SVG document string."""
    if not series:
        raise ValueError("nothing to plot")
    for label, xs, ys, _ in series:
        if len(xs) != len(ys):
            raise ValueError(f"series {label!r}: x and y lengths differ")
    xs_all = [x for _, xs, _, _ in series for x in xs]
    ys_all = [y for _, _, ys, _ in series for y in ys]
    if not xs_all:
        raise ValueError("empty series")
    x0, x1 = min(xs_all), max(xs_all)
    y0, y1 = min(ys_all), max(ys_all)
    if x1 <= x0:
        x0, x1 = x0 - 0.5, x0 + 0.5
    if y1 <= y0:
        pad = 0.5 if y0 == 0 else 0.1 * abs(y0)
        y0, y1 = y0 - pad, y1 + pad
    ypad = 0.06 * (y1 - y0)
    y0, y1 = y0 - ypad, y1 + ypad

    ml, mr, mt, mb = 78, 18, 34, 52
    pw, ph = width - ml - mr, height - mt - mb

    def px(x: float) -> float:
        return ml + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return mt + (y1 - y) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" '
        f'fill="none" stroke="#333" stroke-width="1"/>',
    ]
    font = 'font-family="sans-serif" font-size="12"'
    for t in _ticks(x0, x1):
        X = px(t)
        out.append(
            f'<line x1="{X:.1f}" y1="{mt + ph}" x2="{X:.1f}" '
            f'y2="{mt + ph + 5}" stroke="#333"/>'
        )
        out.append(
            f'<text x="{X:.1f}" y="{mt + ph + 18}" {font} '
            f'text-anchor="middle">{_fmt(t)}</text>'
        )
    for t in _ticks(y0, y1):
        Y = py(t)
        out.append(
            f'<line x1="{ml - 5}" y1="{Y:.1f}" x2="{ml}" y2="{Y:.1f}" stroke="#333"/>'
        )
        out.append(
            f'<text x="{ml - 8}" y="{Y + 4:.1f}" {font} '
            f'text-anchor="end">{_fmt(t)}</text>'
        )
    if title:
        out.append(
            f'<text x="{width / 2:.0f}" y="20" font-family="sans-serif" '
            f'font-size="15" text-anchor="middle">{title}</text>'
        )
    if xlabel:
        out.append(
            f'<text x="{ml + pw / 2:.0f}" y="{height - 12}" {font} '
            f'text-anchor="middle">{xlabel}</text>'
        )
    if ylabel:
        yc = mt + ph / 2
        out.append(
            f'<text x="16" y="{yc:.0f}" {font} text-anchor="middle" '
            f'transform="rotate(-90 16 {yc:.0f})">{ylabel}</text>'
        )

    for i, (label, xs, ys, style) in enumerate(series):
        color = _COLORS[i % len(_COLORS)]
        dash = _DASH.get(style)
        if style not in _DASH:
            raise ValueError(f"unknown line style {style!r}")
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.6"'
            f'{dash_attr} points="{pts}"/>'
        )
        # legend entry
        ly = mt + 14 + 16 * i
        lx = ml + pw - 150
        out.append(
            f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 26}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="1.6"{dash_attr}/>'
        )
        out.append(f'<text x="{lx + 32}" y="{ly}" {font}>{label}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path, series, **kwargs) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(line_plot(series, **kwargs))
