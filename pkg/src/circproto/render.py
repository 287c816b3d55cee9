"""
Decision-region figures as SVG (embedded PNG raster plus vector overlays)
or binary PPM, and a small SVG line chart for per-circle counts.

Default palette hues are evenly spaced, saturation 0.45 and value 0.95 in HSV;
for four classes that is ``#f28585 #bcf285 #85f2f2 #bc85f2``.
"""

from __future__ import annotations

import base64
import colorsys
import io
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np
from PIL import Image

from circproto.errors import ContractViolation
from circproto.findpugs import PrototypeSolution
from circproto.geometry import prototype_array
from circproto.oracle import RasterGrid

RGB = tuple[int, int, int]


def default_palette(n: int) -> list[RGB]:
    out = []
    for k in range(n):
        r, g, b = colorsys.hsv_to_rgb(k / max(n, 1), 0.45, 0.95)
        out.append((round(r * 255), round(g * 255), round(b * 255)))
    return out


def hex_color(rgb: RGB) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


@dataclass(frozen=True)
class FigureStyle:
    palette: list[RGB] = field(default_factory=lambda: default_palette(8))
    marker_radius: float = 3.0
    marker_outline: RGB = (0, 0, 0)
    show_circles: bool = True
    background: RGB = (255, 255, 255)

    @classmethod
    def for_classes(cls, n: int, **kwargs) -> "FigureStyle":
        return cls(palette=default_palette(n), **kwargs)


def _check(grid: RasterGrid, solution: PrototypeSolution, style: FigureStyle) -> None:
    if len(style.palette) < len(solution):
        raise ContractViolation(
            f"palette has {len(style.palette)} colors for {len(solution)} classes"
        )
    if grid.labels.size and int(grid.labels.max()) >= len(solution):
        raise ContractViolation("raster labels refer to classes the solution does not have")


def region_rgb(grid: RasterGrid, palette: Sequence[RGB]) -> np.ndarray:
    lut = np.asarray(palette, dtype=np.uint8)
    return lut[grid.labels]


def _to_pixel(grid: RasterGrid, xy: np.ndarray) -> np.ndarray:
    px = (xy[:, 0] + grid.extent) / (2 * grid.extent) * grid.width
    py = (grid.extent - xy[:, 1]) / (2 * grid.extent) * grid.height
    return np.column_stack((px, py))


def _marker_centers(grid: RasterGrid, solution: PrototypeSolution) -> np.ndarray:
    pts = np.concatenate([prototype_array(lay) for lay in solution.layouts()])
    return _to_pixel(grid, pts)


def _stamp_markers(rgb: np.ndarray, centers: np.ndarray, style: FigureStyle) -> None:
    if style.marker_radius <= 0:
        return
    h, w = rgb.shape[:2]
    yy, xx = np.mgrid[0:h, 0:w] + 0.5
    r = style.marker_radius
    for cx, cy in centers:
        d = np.hypot(xx - cx, yy - cy)
        rgb[(d <= r) & (d > r - 1.0)] = style.marker_outline


def _ppm(rgb: np.ndarray) -> bytes:
    h, w = rgb.shape[:2]
    return b"P6\n%d %d\n255\n" % (w, h) + rgb.tobytes()


def _png(rgb: np.ndarray) -> bytes:
    buf = io.BytesIO()
    Image.fromarray(rgb, mode="RGB").save(buf, format="PNG")
    return buf.getvalue()


def _svg(grid: RasterGrid, solution: PrototypeSolution, style: FigureStyle, rgb: np.ndarray) -> bytes:
    w, h = grid.width, grid.height
    png = base64.b64encode(_png(rgb)).decode("ascii")
    outline = hex_color(style.marker_outline)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" xmlns:xlink="http://www.w3.org/1999/xlink" '
        f'version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="{hex_color(style.background)}"/>',
        f'<image x="0" y="0" width="{w}" height="{h}" preserveAspectRatio="none" '
        f'xlink:href="data:image/png;base64,{png}"/>',
    ]
    if style.show_circles:
        cx, cy = w / 2, h / 2
        sx, sy = w / (2 * grid.extent), h / (2 * grid.extent)
        for t in range(1, len(solution)):
            r = t * solution.c
            lines.append(
                f'<ellipse class="ring" cx="{cx:.3f}" cy="{cy:.3f}" rx="{r * sx:.3f}" '
                f'ry="{r * sy:.3f}" fill="none" stroke="{outline}" stroke-width="1" stroke-opacity="0.5"/>'
            )
    labels = np.concatenate([np.full(k, t) for t, k in enumerate(solution.counts)])
    for (px, py), t in zip(_marker_centers(grid, solution), labels):
        lines.append(
            f'<circle class="prototype" cx="{px:.3f}" cy="{py:.3f}" r="{style.marker_radius:.3f}" '
            f'fill="{hex_color(style.palette[t])}" stroke="{outline}" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_figure(
    grid: RasterGrid,
    solution: PrototypeSolution,
    style: FigureStyle | None = None,
    format: Literal["svg", "ppm"] = "svg",
) -> bytes:
    """Serialize a decision-region raster with prototype markers.

    The SVG keeps the region raster unmarked and draws markers as vector
    circles; the PPM stamps marker outlines into the raster.
    """
    style = style or FigureStyle.for_classes(len(solution))
    _check(grid, solution, style)
    rgb = region_rgb(grid, style.palette)
    if format == "ppm":
        _stamp_markers(rgb, _marker_centers(grid, solution), style)
        return _ppm(rgb)
    if format == "svg":
        return _svg(grid, solution, style, rgb)
    raise ContractViolation(f"unknown figure format {format!r}")


def line_chart_svg(
    xs: Sequence[float],
    series: dict[str, Sequence[float]],
    *,
    title: str = "",
    width: int = 640,
    height: int = 400,
) -> bytes:
    """Plain SVG polyline chart, one polyline per named series."""
    if not xs or not series:
        raise ContractViolation("chart needs at least one point and one series")
    pad = 48
    x0, x1 = min(xs), max(xs)
    ys = [y for s in series.values() for y in s]
    y0, y1 = min(0.0, min(ys)), max(ys)
    x1 = x1 if x1 > x0 else x0 + 1
    y1 = y1 if y1 > y0 else y0 + 1

    def sx(x):
        return pad + (x - x0) / (x1 - x0) * (width - 2 * pad)

    def sy(y):
        return height - pad - (y - y0) / (y1 - y0) * (height - 2 * pad)

    colors = [hex_color(c) for c in default_palette(len(series))]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#ffffff"/>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="#000000"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="#000000"/>',
    ]
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="{pad / 2:.1f}" text-anchor="middle" font-size="14">{title}</text>')
    for k, (name, values) in enumerate(series.items()):
        pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, values))
        out.append(
            f'<polyline class="series" data-name="{name}" points="{pts}" fill="none" '
            f'stroke="{colors[k]}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{width - pad:.1f}" y="{pad + 16 * (k + 1):.1f}" text-anchor="end" '
            f'font-size="12" fill="{colors[k]}">{name}</text>'
        )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
