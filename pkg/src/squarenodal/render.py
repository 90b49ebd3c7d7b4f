"""Deterministic SVG pictures of nodal sets.

Contours come from marching squares over the sign grid, with the saddle
ambiguity resolved by the eigenfunction's sign at the cell center (the only
cells where the choice matters sit next to critical zeroes, which the
callers know analytically).  Output is byte-stable for fixed inputs: fixed
element order, six-decimal coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .eigenfunction import ThetaFamily
from .nodal_topology import NodalGrid, NodalSummary, build_checkerboard, lattice_points

__all__ = ["RenderSpec", "render_nodal_svg", "marching_segments"]


@dataclass(frozen=True)
class RenderSpec:
    width: int = 640
    height: int = 640
    show_checkerboard: bool = True
    show_lattice: bool = True
    show_critical_zeroes: bool = True
    math_axes: bool = False    # y grows upward when set, like the usual plots


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def marching_segments(grid: NodalGrid) -> list[tuple[float, float, float, float]]:
    """Nodal line segments (x1, y1, x2, y2) in square coordinates.

    Classic 16-case marching squares on the sample values; zero samples are
    nudged onto the positive side, which only matters on exact nodal lines
    where both neighbours already agree.  Saddles query the center value.
    """
    v = grid.values
    offs = grid.offsets
    fam = ThetaFamily(grid.m, grid.n, grid.theta)
    n = grid.resolution
    segs: list[tuple[float, float, float, float]] = []

    def interp(pa, pb, va, vb):
        t = va / (va - vb) if va != vb else 0.5
        return (pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]))

    pos = v >= 0
    for i in range(n - 1):
        x0, x1 = offs[i], offs[i + 1]
        for j in range(n - 1):
            y0, y1 = offs[j], offs[j + 1]
            c00, c10, c01, c11 = pos[i, j], pos[i + 1, j], pos[i, j + 1], pos[i + 1, j + 1]
            code = (c00 << 3) | (c10 << 2) | (c11 << 1) | c01
            if code in (0, 15):
                continue
            v00, v10, v01, v11 = v[i, j], v[i + 1, j], v[i, j + 1], v[i + 1, j + 1]
            bottom = interp((x0, y0), (x1, y0), v00, v10)
            top = interp((x0, y1), (x1, y1), v01, v11)
            left = interp((x0, y0), (x0, y1), v00, v01)
            right = interp((x1, y0), (x1, y1), v10, v11)
            if code in (1, 14):
                segs.append((*left, *top))
            elif code in (2, 13):
                segs.append((*top, *right))
            elif code in (3, 12):
                segs.append((*left, *right))
            elif code in (4, 11):
                segs.append((*bottom, *right))
            elif code in (6, 9):
                segs.append((*bottom, *top))
            elif code in (7, 8):
                segs.append((*left, *bottom))
            else:  # saddle: 5 or 10
                center_pos = fam.value(0.5 * (x0 + x1), 0.5 * (y0 + y1)) >= 0
                if (code == 5) == center_pos:
                    segs.append((*left, *bottom))
                    segs.append((*top, *right))
                else:
                    segs.append((*left, *top))
                    segs.append((*bottom, *right))
    return segs


def render_nodal_svg(summary: NodalSummary, grid: NodalGrid, spec: RenderSpec) -> str:
    """SVG document for a nodal set summary and its sampling grid."""
    if (summary.m, summary.n) != (grid.m, grid.n) or abs(summary.theta - grid.theta) > 1e-12:
        raise ValueError("summary and grid describe different eigenfunctions")

    W, H = spec.width, spec.height
    margin = 0.06 * min(W, H)
    sx = (W - 2 * margin) / math.pi
    sy = (H - 2 * margin) / math.pi

    def to_px(x: float, y: float) -> tuple[float, float]:
        px = margin + x * sx
        py = (H - margin - y * sy) if spec.math_axes else (margin + y * sy)
        return px, py

    theta_in_pi = summary.theta / math.pi
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}">'
    )
    out.append(f'<rect x="0" y="0" width="{W}" height="{H}" fill="#ffffff"/>')

    R = max(summary.m, summary.n)
    one_r = 1 in (summary.m, summary.n)
    if spec.show_checkerboard and one_r and R >= 2:
        try:
            board = build_checkerboard(R, summary.theta)
        except ValueError:
            board = None
        if board is not None:
            step = math.pi / R
            for i in range(R):
                for j in range(R):
                    if board.is_white(i, j):
                        continue
                    xa, ya = to_px(i * step, j * step)
                    xb, yb = to_px((i + 1) * step, (j + 1) * step)
                    x, y = min(xa, xb), min(ya, yb)
                    w, h = abs(xb - xa), abs(yb - ya)
                    out.append(
                        f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" '
                        f'height="{_fmt(h)}" fill="#d9d9d9"/>'
                    )

    xa, ya = to_px(0.0, 0.0)
    xb, yb = to_px(math.pi, math.pi)
    out.append(
        f'<rect x="{_fmt(min(xa, xb))}" y="{_fmt(min(ya, yb))}" '
        f'width="{_fmt(abs(xb - xa))}" height="{_fmt(abs(yb - ya))}" '
        f'fill="none" stroke="#000000" stroke-width="1.5"/>'
    )

    for x1, y1, x2, y2 in marching_segments(grid):
        a = to_px(x1, y1)
        b = to_px(x2, y2)
        out.append(
            f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" '
            f'y2="{_fmt(b[1])}" stroke="#1f4e9c" stroke-width="1.0"/>'
        )

    if spec.show_lattice:
        for x, y in lattice_points(summary.m, summary.n):
            px, py = to_px(x, y)
            out.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="2.2" fill="#000000"/>')

    if spec.show_critical_zeroes:
        for z in summary.critical_zeroes:
            px, py = to_px(z.x, z.y)
            color = "#c01414" if z.degenerate else "#d88410"
            out.append(
                f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="4.0" fill="none" '
                f'stroke="{color}" stroke-width="1.6"/>'
            )

    label = (
        f"(m, n) = ({summary.m}, {summary.n}), theta = {theta_in_pi:.6f} pi, "
        f"{summary.domain_count} nodal domains"
    )
    out.append(
        f'<text x="{_fmt(margin)}" y="{_fmt(H - 0.25 * margin)}" '
        f'font-family="monospace" font-size="12" fill="#000000">{label}</text>'
    )
    axes = "y up" if spec.math_axes else "y down"
    out.append(
        f'<text x="{_fmt(W - margin - 60)}" y="{_fmt(H - 0.25 * margin)}" '
        f'font-family="monospace" font-size="10" fill="#666666">{axes}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
