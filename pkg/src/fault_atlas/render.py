"""ASCII and SVG renderings of tilings on the flattened board picture.

ASCII draws tile outlines on a (2a+1) x (2b+1) character canvas: walls are
drawn between cells belonging to different tiles, so an uncrossed fold line
shows up as an unbroken wall across the whole board.  Wrapping tiles leave
the border open at their exit and are marked with '>' (seam) or 'v' (glued
row edge of a torus).

SVG draws every tile as a rounded rectangle; a wrapping tile is drawn once
on each side of the seam, both halves filled from one shared gradient so the
two copies read as a single tile.  Fault-curve positions are dashed guides.
"""

from __future__ import annotations

from .tiling import Tiling
from .topology import fault_curves


def _tile_map(tiling: Tiling) -> dict[tuple[int, int], int]:
    owner = {}
    for i, p in enumerate(sorted(tiling.dominoes, key=lambda p: p.edge.key())):
        for cell in p.cells:
            owner[cell] = i
    return owner


def ascii_render(tiling: Tiling) -> str:
    board = tiling.board
    a, b = board.a, board.b
    owner = _tile_map(tiling)
    grid = [[" "] * (2 * b + 1) for _ in range(2 * a + 1)]
    for gr in range(0, 2 * a + 1, 2):
        for gc in range(0, 2 * b + 1, 2):
            grid[gr][gc] = "+"
    for r in range(a):
        for c in range(b):
            same_right = c + 1 < b and owner.get((r, c)) is not None \
                and owner.get((r, c)) == owner.get((r, c + 1))
            grid[2 * r + 1][2 * c + 2] = " " if same_right else "|"
            same_down = r + 1 < a and owner.get((r, c)) is not None \
                and owner.get((r, c)) == owner.get((r + 1, c))
            grid[2 * r + 2][2 * c + 1] = " " if same_down else "-"
    for c in range(b):
        grid[0][2 * c + 1] = "-"
        grid[2 * a][2 * c + 1] = "-"
    for r in range(a):
        grid[2 * r + 1][0] = "|"
        grid[2 * r + 1][2 * b] = "|"
    for p in sorted(tiling.dominoes, key=lambda p: p.edge.key()):
        axis, line, _off = p.edge.key()
        if line != 0:
            continue
        if axis == "v":
            for (r, c) in p.cells:
                if c == b - 1:
                    grid[2 * r + 1][2 * b] = ">"
                if c == 0:
                    grid[2 * r + 1][0] = ">"
        else:  # torus glued row edge
            for (r, c) in p.cells:
                if r == a - 1:
                    grid[2 * a][2 * c + 1] = "v"
                if r == 0:
                    grid[0][2 * c + 1] = "v"
    return "\n".join("".join(row) for row in grid) + "\n"


_CELL = 32
_MARGIN = 24
_H_FILL = "#7fb3d5"
_V_FILL = "#a9dfbf"
_WRAP_STOPS = ("#f7dc6f", "#e67e22")


def _rect(x: float, y: float, w: float, h: float, fill: str) -> str:
    return (f'  <rect x="{x:g}" y="{y:g}" width="{w:g}" height="{h:g}" rx="6" '
            f'fill="{fill}" stroke="#34495e" stroke-width="1.5"/>')


def svg_render(tiling: Tiling) -> str:
    board = tiling.board
    a, b = board.a, board.b
    width = b * _CELL + 2 * _MARGIN
    height = a * _CELL + 2 * _MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">',
        "  <defs>",
    ]
    dominoes = sorted(tiling.dominoes, key=lambda p: p.edge.key())
    for i, p in enumerate(dominoes):
        if p.is_wrap:
            out.append(
                f'    <linearGradient id="wrap{i}"><stop offset="0" stop-color="{_WRAP_STOPS[0]}"/>'
                f'<stop offset="1" stop-color="{_WRAP_STOPS[1]}"/></linearGradient>'
            )
    out.append("  </defs>")
    out.append(f'  <rect x="{_MARGIN}" y="{_MARGIN}" width="{b * _CELL}" height="{a * _CELL}" '
               'fill="#fdfefe" stroke="#2c3e50" stroke-width="2"/>')

    def cx(c: int) -> float:
        return _MARGIN + c * _CELL

    def cy(r: int) -> float:
        return _MARGIN + r * _CELL

    pad = 2.5
    for i, p in enumerate(dominoes):
        (r1, c1), (r2, c2) = sorted(p.cells)
        if not p.is_wrap:
            x = cx(min(c1, c2)) + pad
            y = cy(min(r1, r2)) + pad
            w = (abs(c2 - c1) + 1) * _CELL - 2 * pad
            h = (abs(r2 - r1) + 1) * _CELL - 2 * pad
            fill = _H_FILL if p.edge.axis == "v" else _V_FILL
            out.append(_rect(x, y, w, h, fill))
        else:
            # one tile, two drawn copies sharing a gradient
            fill = f"url(#wrap{i})"
            for (r, c) in p.cells:
                out.append(_rect(cx(c) + pad, cy(r) + pad, _CELL - 2 * pad, _CELL - 2 * pad, fill))
    for curve in fault_curves(board):
        for line in sorted(curve.lines):
            if curve.axis == "horizontal":
                y = cy(line)
                out.append(f'  <line x1="{_MARGIN}" y1="{y:g}" x2="{_MARGIN + b * _CELL}" y2="{y:g}" '
                           'stroke="#e74c3c" stroke-width="1" stroke-dasharray="6 4"/>')
                if line == 0:  # glued row edge appears at top and bottom
                    y2 = cy(a)
                    out.append(f'  <line x1="{_MARGIN}" y1="{y2:g}" x2="{_MARGIN + b * _CELL}" y2="{y2:g}" '
                               'stroke="#e74c3c" stroke-width="1" stroke-dasharray="6 4"/>')
            else:
                x = cx(line if line != 0 else 0)
                out.append(f'  <line x1="{x:g}" y1="{_MARGIN}" x2="{x:g}" y2="{_MARGIN + a * _CELL}" '
                           'stroke="#e74c3c" stroke-width="1" stroke-dasharray="6 4"/>')
                if line == 0:  # the seam appears on both sides of the picture
                    x2 = cx(b)
                    out.append(f'  <line x1="{x2:g}" y1="{_MARGIN}" x2="{x2:g}" y2="{_MARGIN + a * _CELL}" '
                               'stroke="#e74c3c" stroke-width="1" stroke-dasharray="6 4"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
