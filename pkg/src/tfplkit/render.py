"""Standalone SVG pictures of grid FPLs, TFPLs and puzzles.

Output is a pure function of the input object: elements are emitted in
sorted order and coordinates are printed with fixed precision.
"""

from __future__ import annotations

import math

from .fpl import GridFPL, external_edges
from .puzzles import Puzzle, lattice
from .tfpl import OrientedTFPLConfig, TFPLConfig

SCALE = 30
MARGIN = 20
LABEL_COLORS = {0: "#1f77b4", 1: "#d62728", 2: "#2ca02c"}


def _num(v: float) -> str:
    text = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _document(width: float, height: float, body: list[str], defs: str = "") -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">'
    )
    return "\n".join([head, defs, *body, "</svg>"]) if defs else "\n".join([head, *body, "</svg>"])


def _line(p, q, width: float = 2, color: str = "black", extra: str = "") -> str:
    return (
        f'<line x1="{_num(p[0])}" y1="{_num(p[1])}" x2="{_num(q[0])}" y2="{_num(q[1])}" '
        f'stroke="{color}" stroke-width="{_num(width)}"{extra}/>'
    )


def _render_grid(fpl: GridFPL) -> str:
    n = fpl.n
    size = (n + 1) * SCALE + 2 * MARGIN

    def at(p):
        return (MARGIN + (p[0] + 1) * SCALE, MARGIN + (n - p[1]) * SCALE)

    ext = {tuple(sorted(e)) for e in external_edges(n)}
    body = []
    for p, q in sorted(fpl.edges):
        bold = (p, q) in ext
        body.append(_line(at(p), at(q), 4 if bold else 2))
    for y in range(n):
        for x in range(n):
            cx, cy = at((x, y))
            body.append(f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="3" fill="black"/>')
    for k, (_, outer) in enumerate(external_edges(n), start=1):
        cx, cy = at(outer)
        body.append(f'<text x="{_num(cx)}" y="{_num(cy)}" font-size="10" text-anchor="middle">{k}</text>')
    return _document(size, size, body)


_ARROW = (
    '<defs><marker id="arrow" viewBox="0 0 10 10" refX="8" refY="5" markerWidth="5" '
    'markerHeight="5" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="black"/></marker></defs>'
)


def _render_triangle(config) -> str:
    tri = config.triangle
    n = tri.n
    width = (tri.top + 1) * SCALE + 2 * MARGIN
    height = (2 * n + 1) * SCALE + 2 * MARGIN

    def at(p):
        # stubs are drawn at double length
        y = -2 if p[1] == -1 else p[1]
        return (MARGIN + p[0] * SCALE + SCALE / 2, MARGIN + (2 * n - 1 - y) * SCALE + SCALE / 2)

    directed = isinstance(config, OrientedTFPLConfig)
    pairs = sorted(config.arcs) if directed else sorted(config.edges)
    fixed = tri.fixed_edges
    body = []
    for p, q in pairs:
        bold = tuple(sorted((p, q))) in fixed
        extra = ' marker-end="url(#arrow)"' if directed else ""
        if -1 in (p[1], q[1]):
            extra += ' class="stub"'
        body.append(_line(at(p), at(q), 4 if bold else 2, extra=extra))
    half = SCALE / 5
    for v in tri.vertices:
        cx, cy = at(v)
        fill = "black" if tri.is_even(v) else "white"
        body.append(
            f'<rect x="{_num(cx - half)}" y="{_num(cy - half)}" width="{_num(2 * half)}" '
            f'height="{_num(2 * half)}" fill="{fill}" stroke="black"/>'
        )
    return _document(width, height, body, _ARROW if directed else "")


def _render_puzzle(puzzle: Puzzle) -> str:
    n = puzzle.n
    lat = lattice(n)
    side = 2 * n
    rt3 = math.sqrt(3) / 2
    width = side * SCALE + 2 * MARGIN
    height = side * rt3 * SCALE + 2 * MARGIN

    def point(h: int, i: float):
        # i-th lattice point on the line at height h
        return (MARGIN + (h / 2 + i) * SCALE, MARGIN + (side - h) * rt3 * SCALE)

    body = []
    for (h, j), _ in lat.up:
        pts = [point(h, j), point(h, j + 1), point(h + 1, j)]
        body.append(_polygon(pts, "#f4f4f4"))
    for (h, j), _ in lat.down:
        pts = [point(h + 1, j), point(h + 1, j + 1), point(h, j + 1)]
        body.append(_polygon(pts, "#e0e0e0"))
    for h in range(side + 1):
        for j in range(side - h):
            body.append(_labeled(point(h, j), point(h, j + 1), puzzle.H(h, j)))
    for h in range(side):
        for k in range(2 * lat.strip_width(h)):
            j = k // 2
            if k % 2 == 0:
                p, q = point(h, j), point(h + 1, j)
            else:
                p, q = point(h, j + 1), point(h + 1, j)
            body.append(_labeled(p, q, puzzle.S(h, k)))
    return _document(width, height, body)


def _polygon(pts, fill: str) -> str:
    coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)
    return f'<polygon points="{coords}" fill="{fill}" stroke="none"/>'


def _labeled(p, q, label) -> str:
    return _line(p, q, 3, LABEL_COLORS.get(label, "gray"), f' data-label="{label}"')


def render_svg(obj) -> str:
    """Standalone SVG document for a grid FPL, a (possibly oriented) TFPL or a puzzle."""
    if isinstance(obj, GridFPL):
        return _render_grid(obj)
    if isinstance(obj, (TFPLConfig, OrientedTFPLConfig)):
        return _render_triangle(obj)
    if isinstance(obj, Puzzle):
        return _render_puzzle(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
