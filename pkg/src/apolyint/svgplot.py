"""Static SVG plots of the real branch curves with marked surgery points."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Optional, Sequence, Tuple

from .curve import MultipleRootsError, NoSignChangeError, SurgerySpec, branch_logs, solve_surgery
from .poly import KnotId

WIDTH, HEIGHT, MARGIN = 640, 480, 56

# Surgery points marked on each branch, with display labels.
BRANCH_MARKERS = {
    KnotId.FIG8: (((0, 1), "P0"), ((-1, 1), "P1"), ((-2, 1), "P2")),
    KnotId.K52: (((1, 1), "Q1"), ((2, 1), "Q2")),
}


def _sample_branch(knot: KnotId, s0: float, s1: float, samples: int):
    lo = s0
    if knot is KnotId.K52 and lo <= 0:
        lo = min(1e-3, s1 / 10) if s1 > 0 else 1e-3
    pts = []
    for k in range(samples + 1):
        s = lo + (s1 - lo) * k / samples
        a, b = branch_logs(knot, s)
        pts.append((math.exp(a), math.exp(b)))
    return pts


def _markers_in_range(knot: KnotId, s0: float, s1: float):
    out = []
    for pq, label in BRANCH_MARKERS[knot]:
        try:
            s, point = solve_surgery(knot, SurgerySpec(*pq))
        except (NoSignChangeError, MultipleRootsError):
            continue
        if s0 <= s <= s1:
            out.append((point.x, point.y, label))
    return out


def _scale(points, markers):
    xs = [p[0] for p in points] + [m[0] for m in markers]
    ys = [p[1] for p in points] + [m[1] for m in markers]
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi - x_lo < 1e-12:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    if y_hi - y_lo < 1e-12:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5

    def to_screen(x, y):
        sx = MARGIN + (x - x_lo) / (x_hi - x_lo) * (WIDTH - 2 * MARGIN)
        sy = HEIGHT - MARGIN - (y - y_lo) / (y_hi - y_lo) * (HEIGHT - 2 * MARGIN)
        return sx, sy

    return to_screen, (x_lo, x_hi, y_lo, y_hi)


def emit_plot(knot: KnotId, s_range: Tuple[float, float], output_path,
              samples: int = 400) -> Path:
    """Write an SVG view of the branch over s in [s0, s1].

    Surgery points whose parameter lies inside the range are marked and
    labelled.  An empty range produces axes only.
    """
    s0, s1 = s_range
    empty = not (s1 > s0)
    points = [] if empty else _sample_branch(knot, s0, s1, samples)
    markers = [] if empty else _markers_in_range(knot, s0, s1)
    to_screen, (x_lo, x_hi, y_lo, y_hi) = _scale(points, markers)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
        f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="#444" stroke-width="1"/>',
    ]
    # axis labels at the frame corners
    parts.append(f'<text x="{MARGIN}" y="{HEIGHT - MARGIN + 18}" font-size="12" '
                 f'fill="#444">x = {x_lo:.4g}</text>')
    parts.append(f'<text x="{WIDTH - MARGIN - 60}" y="{HEIGHT - MARGIN + 18}" font-size="12" '
                 f'fill="#444">x = {x_hi:.4g}</text>')
    parts.append(f'<text x="6" y="{HEIGHT - MARGIN}" font-size="12" '
                 f'fill="#444">y = {y_lo:.4g}</text>')
    parts.append(f'<text x="6" y="{MARGIN + 4}" font-size="12" '
                 f'fill="#444">y = {y_hi:.4g}</text>')
    parts.append(f'<text x="{WIDTH // 2 - 60}" y="24" font-size="14" fill="#000">'
                 f'branch C of the {knot.value} A-polynomial curve</text>')

    if points:
        coords = " ".join(f"{sx:.2f},{sy:.2f}" for sx, sy in (to_screen(x, y) for x, y in points))
        parts.append(f'<polyline points="{coords}" fill="none" stroke="#1f6fb2" stroke-width="1.6"/>')
    for x, y, label in markers:
        sx, sy = to_screen(x, y)
        parts.append(f'<circle cx="{sx:.2f}" cy="{sy:.2f}" r="4" fill="#c23b22"/>')
        parts.append(f'<text x="{sx + 7:.2f}" y="{sy - 7:.2f}" font-size="13" '
                     f'fill="#c23b22">{label}</text>')
    parts.append("</svg>")

    path = Path(output_path)
    path.write_text("\n".join(parts) + "\n", encoding="utf-8")
    return path
