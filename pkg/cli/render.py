"""
cli/render.py
-------------
ASCII and SVG drawings of a reduced diagram. Lines sit at y = 10k and bands
at x = 10t in SVG units; lines are broken where a band passes in front.
"""

import xml.etree.ElementTree as ET

from legendrian import CornerShape, ReducedDiagram, cusped_render_data

SCALE  = 10
MARGIN = 10   # viewBox padding around the drawing
CUSP_SIZE = 2.5
CUSP_GLYPHS = {CornerShape.LT: "<", CornerShape.RB: ">"}


def render_ascii(r: ReducedDiagram, cusped: bool = False) -> str:
    if r.is_empty:
        return ""
    xs = [s.at for s in r.segments if s.axis == "V"]
    ys = [s.at for s in r.segments if s.axis == "H"] + \
         [y for s in r.segments if s.axis == "V" for y in (s.start, s.end)]
    x0, y0 = min(xs), min(ys)
    width, height = 4 * (max(xs) - x0) + 1, 2 * (max(ys) - y0) + 1
    grid = [[" "] * width for _ in range(height)]

    def cell(x: int, y: int) -> tuple[int, int]:
        return 2 * (y - y0), 4 * (x - x0)

    for s in r.segments:
        lo, hi = sorted((s.start, s.end))
        if s.axis == "H":
            row, left = cell(lo, s.at)
            _, right = cell(hi, s.at)
            for col in range(left + 1, right):
                grid[row][col] = "-"
    for s in r.segments:
        if s.axis == "V":
            lo, hi = sorted((s.start, s.end))
            top, col = cell(s.at, lo)
            bottom, _ = cell(s.at, hi)
            for row in range(top + 1, bottom):
                grid[row][col] = "|"     # drawn last: bands pass in front
    for c in r.corners:
        row, col = cell(c.x, c.y)
        grid[row][col] = CUSP_GLYPHS.get(c.shape, "+") if cusped else "+"
    for x, y in r.trivalent_vertices:
        row, col = cell(x, y)
        grid[row][col] = "+"
    return "".join("".join(line).rstrip() + "\n" for line in grid)


def _cusp_arc(x: float, y: float, shape: CornerShape) -> str:
    """Pointed arc joining the line and the band at a cusp corner."""
    dx, dy = (1, 1) if shape == CornerShape.LT else (-1, -1)   # towards the line, the band
    r = CUSP_SIZE
    return (f"M{x + dx * r:g} {y:g}"
            f"Q{x - dx * r:g} {y + dy * r / 2:g} {x:g} {y + dy * r:g}")


def render_svg(r: ReducedDiagram, cusped: bool = False) -> str:
    strokes = cusped_render_data(r, cusped=cusped)
    xs = [s.at for s in r.segments if s.axis == "V"] or [0]
    ys = [y for s in r.segments for y in ((s.at,) if s.axis == "H" else (s.start, s.end))] or [0]
    width, height = SCALE * max(xs) + 2 * MARGIN, SCALE * max(ys) + 2 * MARGIN

    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                     width=f"{width}px", height=f"{height}px",
                     viewBox=f"{-MARGIN} {-MARGIN} {width} {height}")
    group = ET.SubElement(svg, "g", stroke="black", fill="none")

    for stroke in strokes:
        x, y = (SCALE * v for v in stroke.points[0])
        if stroke.kind == "edge":
            x2, y2 = (SCALE * v for v in stroke.points[1])
            ET.SubElement(group, "path", d=f"M{x:g} {y:g}L{x2:g} {y2:g}")
        elif stroke.kind == "cusp":
            ET.SubElement(group, "path", {"class": "cusp", "d": _cusp_arc(x, y, stroke.shape)})
        elif stroke.kind == "vertex":
            ET.SubElement(group, "circle", {"class": "vertex", "cx": f"{x:g}", "cy": f"{y:g}",
                                            "r": "1.5", "fill": "black"})
    return ET.tostring(svg, encoding="unicode") + "\n"
