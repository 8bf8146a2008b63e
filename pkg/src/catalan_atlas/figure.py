"""SVG picture of the dominant chamber for rank-2 types: arrangement lines,
bounded regions, maximal alcoves, the dilated alcove p * A_o and the coroot
lattice points inside it."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .alcoves import alcove_vertices, coroot_to_point, shi_to_affine
from .chains import enumerate_ideal_chains
from .lattice import enumerate_Dm
from .poset import build_poset
from .regions import bounded_regions_by_alcoves, max_alcove
from .rootsys import RootSystem

SIZE = 480
MARGIN = 20
PRECISION = 6


class FigureError(ValueError):
    pass


def _frame(rs: RootSystem):
    """Map simple-value coordinates to Euclidean plane coordinates."""
    g11, g12, g22 = (float(rs.sym[0][0]), float(rs.sym[0][1]), float(rs.sym[1][1]))
    a1 = (math.sqrt(g11), 0.0)
    cos = g12 / math.sqrt(g11 * g22)
    a2 = (math.sqrt(g22) * cos, math.sqrt(g22) * math.sqrt(1 - cos * cos))
    det = a1[0] * a2[1] - a1[1] * a2[0]

    def to_plane(y: Sequence[Fraction]) -> tuple[float, float]:
        y1, y2 = float(y[0]), float(y[1])
        # solve a1 . x = y1, a2 . x = y2
        return ((y1 * a2[1] - a1[1] * y2) / det, (a1[0] * y2 - a2[0] * y1) / det)

    return to_plane


def _clip(alpha: Sequence[int], k: int, corners: list[tuple[Fraction, Fraction]]):
    """Intersection of (alpha, y) = k with the triangle spanned by corners."""
    pts = []
    for a, b in zip(corners, corners[1:] + corners[:1]):
        va = alpha[0] * a[0] + alpha[1] * a[1]
        vb = alpha[0] * b[0] + alpha[1] * b[1]
        if va == vb:
            if va == k:
                pts += [a, b]
            continue
        t = Fraction(k - va) / (vb - va)
        if 0 <= t <= 1:
            pts.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    pts = sorted(set(pts))
    return (pts[0], pts[-1]) if len(pts) >= 2 and pts[0] != pts[-1] else None


def render_svg(rs: RootSystem, m: int) -> str:
    if rs.rank != 2 or not rs.is_irreducible:
        raise FigureError("figures are only drawn for irreducible rank-2 types")
    if m < 1:
        raise FigureError("m must be >= 1")
    p = build_poset(rs)
    h = rs.coxeter_number
    c = rs.highest_root
    top = m * h  # frame: (highest root, y) <= top
    corners = [(Fraction(0), Fraction(0)), (Fraction(top, c[0]), Fraction(0)), (Fraction(0), Fraction(top, c[1]))]
    to_plane = _frame(rs)
    plane = [to_plane(v) for v in corners]
    xs = [q[0] for q in plane]
    ys = [q[1] for q in plane]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    scale = (SIZE - 2 * MARGIN) / span
    x0, y1 = min(xs), max(ys)

    def fmt(y) -> str:
        px, py = to_plane(y)
        X = MARGIN + (px - x0) * scale
        Y = MARGIN + (y1 - py) * scale
        return f"{X:.{PRECISION}f},{Y:.{PRECISION}f}"

    def poly(vertices, cls: str, extra: str = "") -> str:
        pts = " ".join(fmt(v) for v in vertices)
        return f'<polygon class="{cls}" points="{pts}"{extra}/>'

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" '
        f'width="{SIZE}" height="{SIZE}" data-type="{rs.name}" data-m="{m}">',
        "<defs>",
        '<pattern id="hatch" patternUnits="userSpaceOnUse" width="6" height="6" '
        'patternTransform="rotate(45)"><line x1="0" y1="0" x2="0" y2="6" '
        'stroke="#333" stroke-width="1.5"/></pattern>',
        "</defs>",
        "<style>"
        ".region-alcove{fill:#dde8f5;stroke:none}"
        ".max-alcove{fill:url(#hatch);stroke:#333;stroke-width:0.8}"
        ".hyperplane{stroke:#666;stroke-width:0.8}"
        ".chamber-wall{stroke:#000;stroke-width:1.5}"
        ".simplex{fill:none;stroke:#c0392b;stroke-width:1.6}"
        ".lattice-point{fill:#c0392b}"
        "</style>",
    ]

    out.append('<g id="bounded-regions">')
    groups = bounded_regions_by_alcoves(p, m)
    for r_idx, sig in enumerate(sorted(groups)):
        for s in groups[sig]:
            w = shi_to_affine(p, s)
            out.append(poly(alcove_vertices(w), "region-alcove", f' data-region="{r_idx}"'))
    out.append("</g>")

    out.append('<g id="hyperplanes">')
    for k_idx, alpha in enumerate(rs.positive_roots):
        for k in range(m + 1):
            seg = _clip(alpha, k, corners)
            if seg is None:
                continue
            cls = "chamber-wall" if k == 0 else "hyperplane"
            a, b = (fmt(v).split(",") for v in seg)
            out.append(
                f'<line class="{cls}" data-root="{k_idx}" data-level="{k}" '
                f'x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>'
            )
    out.append("</g>")

    out.append('<g id="maximal-alcoves">')
    for chain in enumerate_ideal_chains(p, m, positive_only=True):
        s = max_alcove(chain)
        w = shi_to_affine(p, s)
        shi = " ".join(str(v) for v in s.r)
        out.append(poly(alcove_vertices(w), "max-alcove", f' data-shi="{shi}"'))
    out.append("</g>")

    pdil = m * h - 1
    simplex = [(Fraction(0), Fraction(0)), (Fraction(pdil, c[0]), Fraction(0)), (Fraction(0), Fraction(pdil, c[1]))]
    out.append(poly(simplex, "simplex", f' data-p="{pdil}"'))

    out.append('<g id="lattice-points">')
    for pt in enumerate_Dm(rs, m):
        cx, cy = fmt(coroot_to_point(rs, pt.coords)).split(",")
        coords = " ".join(str(v) for v in pt.coords)
        out.append(f'<circle class="lattice-point" data-coroot="{coords}" cx="{cx}" cy="{cy}" r="3"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
