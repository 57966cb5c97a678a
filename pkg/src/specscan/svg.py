"""Minimal SVG heatmaps of sweep surfaces."""

from __future__ import annotations

import numpy as np

_STOPS = np.array([
    (68, 1, 84), (59, 82, 139), (33, 145, 140), (94, 201, 98), (253, 231, 37),
], dtype=float)


def _color(t: float) -> str:
    t = min(max(t, 0.0), 1.0) * (len(_STOPS) - 1)
    i = min(int(t), len(_STOPS) - 2)
    rgb = _STOPS[i] + (t - i) * (_STOPS[i + 1] - _STOPS[i])
    return "#%02x%02x%02x" % tuple(int(round(v)) for v in rgb)


def heatmap_svg(panels, row_values, col_values, row_label="F", col_label="q0",
                cell=12, pad=40) -> str:
    """Side-by-side heatmaps; ``panels`` is a list of ``(title, 2-D array)`` indexed [row, col]."""
    nr, nc = len(row_values), len(col_values)
    pw, ph = nc * cell, nr * cell
    width = len(panels) * (pw + 2 * pad)
    height = ph + 2 * pad
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">']
    for k, (title, z) in enumerate(panels):
        z = np.asarray(z, dtype=float)
        lo, hi = float(z.min()), float(z.max())
        span = hi - lo or 1.0
        ox = k * (pw + 2 * pad) + pad
        parts.append(f'<text x="{ox}" y="{pad - 22}" font-size="12">{title} [{lo:.4g}, {hi:.4g}]</text>')
        for i in range(nr):
            for j in range(nc):
                parts.append(
                    f'<rect x="{ox + j * cell}" y="{pad + (nr - 1 - i) * cell}" width="{cell}" '
                    f'height="{cell}" fill="{_color((z[i, j] - lo) / span)}"/>'
                )
        parts.append(f'<text x="{ox}" y="{pad + ph + 16}" font-size="10">{col_label}: '
                     f'{col_values[0]:.3g} .. {col_values[-1]:.3g}</text>')
        parts.append(f'<text x="{ox}" y="{pad - 6}" font-size="10">{row_label} (up): '
                     f'{row_values[0]:.3g} .. {row_values[-1]:.3g}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
