"""Deterministic SVG bar graphs with constant-width/height normalization.

The output is assembled from strings only: no timestamps, no library version
markers, no randomness, so identical inputs always produce byte-identical
files.  Bars are scaled so the tallest bar is exactly height_px tall and the
bars jointly fill exactly width_px, which is what makes graphs of
polynomials of different degrees comparable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .exactnum import Scalar

# Region fills in region-index order; black marks transition zones.  Beyond
# the first four the palette repeats after the named extension colors.
REGION_PALETTE = ("red", "yellow", "green", "blue", "orange", "purple", "teal", "magenta")
ZONE_FILL = "black"
BAR_FILL = "steelblue"

_MARGIN = 10
_TITLE_BAND = 30


@dataclass(frozen=True)
class PlotSpec:
    """Everything needed to render one bar graph.

    bar_heights are raw non-negative values; overlay points are pairs
    (u, v) with u the horizontal fraction in [0,1] and v in the same value
    units as the bars, so both are normalized by the same factor.
    """

    bar_heights: tuple[Scalar, ...]
    width_px: int
    height_px: int
    title: str
    overlay: Optional[tuple[tuple[Scalar, Scalar], ...]] = None
    region_colors: Optional[tuple[str, ...]] = None


def _fmt(value) -> str:
    """Fixed-point with up to 3 decimals, trailing zeros stripped."""
    text = f"{float(value):.3f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def render_svg(spec: PlotSpec) -> str:
    bars = spec.bar_heights
    if not bars or any(h < 0 for h in bars):
        raise ValueError("need at least one bar, all heights non-negative")
    if spec.region_colors is not None and len(spec.region_colors) != len(bars):
        raise ValueError("region_colors must give one fill per bar")
    peak = max(bars)
    if peak == 0:
        raise ValueError("all bars are zero")
    scale = Fraction(spec.height_px) / Fraction(peak)

    width = spec.width_px + 2 * _MARGIN
    height = spec.height_px + _TITLE_BAND + _MARGIN
    base_y = _TITLE_BAND + spec.height_px
    bar_w = Fraction(spec.width_px, len(bars))

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width // 2}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{escape(spec.title)}</text>',
    ]
    for i, raw in enumerate(bars):
        h = Fraction(raw) * scale
        x = _MARGIN + bar_w * i
        fill = spec.region_colors[i] if spec.region_colors is not None else BAR_FILL
        lines.append(
            f'<rect class="bar" x="{_fmt(x)}" y="{_fmt(base_y - h)}" '
            f'width="{_fmt(bar_w)}" height="{_fmt(h)}" fill="{fill}"/>'
        )
    if spec.overlay:
        points = " ".join(
            f"{_fmt(_MARGIN + Fraction(u) * spec.width_px)},"
            f"{_fmt(base_y - Fraction(v) * scale)}"
            for u, v in spec.overlay
        )
        lines.append(
            f'<polyline points="{points}" fill="none" stroke="black" stroke-width="1.5"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def region_fills(num_bars: int, regions) -> tuple[str, ...]:
    """Per-bar fill colors from region intervals; uncovered bars (the
    transition zones) come out black."""
    fills = [ZONE_FILL] * num_bars
    for region in regions:
        color = REGION_PALETTE[region.index % len(REGION_PALETTE)]
        for i in range(region.left, region.right + 1):
            fills[i] = color
    return tuple(fills)
