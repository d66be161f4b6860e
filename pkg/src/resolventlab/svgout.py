"""Deterministic SVG rendering of pseudospectrum scans.

Filled contour bands at the requested epsilon levels (darker = smaller
epsilon) plus black eigenvalue markers. Output is byte-identical across
runs apart from the version comment line.
"""

from __future__ import annotations

from . import __version__
from .pspec import PseudospectrumGrid

# light -> dark blues, used from the largest level down
_BAND_COLORS = ["#c6dbef", "#9ecae1", "#6baed6", "#3182bd", "#08519c", "#08306b"]


def _band_color(i: int, n: int) -> str:
    if n <= 1:
        return _BAND_COLORS[3]
    lo = len(_BAND_COLORS) - n if n <= len(_BAND_COLORS) else 0
    return _BAND_COLORS[min(lo + i, len(_BAND_COLORS) - 1)]


def render_svg(grid: PseudospectrumGrid, levels, eigenvalues, width: int = 640) -> str:
    """Render sublevel bands {smin < level} and eigenvalue dots as SVG."""
    region = grid.region
    span_re = region.re_max - region.re_min
    span_im = region.im_max - region.im_min
    height = int(round(width * span_im / span_re))

    def px(re: float) -> float:
        return (re - region.re_min) / span_re * width

    def py(im: float) -> float:
        return (region.im_max - im) / span_im * height

    cell_w = width / (region.nx - 1)
    cell_h = height / (region.ny - 1)
    xs = grid.region.re_points()
    ys = grid.region.im_points()

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- resolventlab {__version__} -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    ordered = sorted(set(float(e) for e in levels), reverse=True)
    for i, level in enumerate(ordered):
        color = _band_color(i, len(ordered))
        parts.append(f'<g fill="{color}">')
        below = grid.smin < level
        for iy in range(region.ny):
            run_start = None
            for ix in range(region.nx + 1):
                inside = ix < region.nx and below[ix, iy]
                if inside and run_start is None:
                    run_start = ix
                elif not inside and run_start is not None:
                    x0 = px(xs[run_start]) - 0.5 * cell_w
                    x1 = px(xs[ix - 1]) + 0.5 * cell_w
                    y0 = py(ys[iy]) - 0.5 * cell_h
                    parts.append(f'<rect x="{x0:.2f}" y="{y0:.2f}" '
                                 f'width="{x1 - x0:.2f}" height="{cell_h:.2f}"/>')
                    run_start = None
        parts.append("</g>")
    for lam in eigenvalues:
        lam = complex(lam)
        if region.re_min <= lam.real <= region.re_max and region.im_min <= lam.imag <= region.im_max:
            parts.append(f'<circle cx="{px(lam.real):.2f}" cy="{py(lam.imag):.2f}" '
                         f'r="3" fill="#000000"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
