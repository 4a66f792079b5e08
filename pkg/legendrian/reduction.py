"""
legendrian/reduction.py
-----------------------
From a fence diagram to its reduced rectilinear drawing.

Coordinates are integer ranks: a band at word position t is drawn at x = t,
line k at y = k (y grows downward, so "north" means towards line 1). Every
band is drawn in front of the lines it passes.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import networkx as nx

from core import Band, FenceDiagram, band_graph
from core.errors import NotApplicable, NotConnected
from moves import deflatable, deflate

logger = logging.getLogger(__name__)


class CornerShape(str, Enum):
    LT = "LT"   # line runs east, band runs south
    RT = "RT"   # line runs west, band runs south
    RB = "RB"   # line runs west, band runs north
    LB = "LB"   # line runs east, band runs north

    @property
    def is_cusp(self) -> bool:
        return self in (CornerShape.LT, CornerShape.RB)


class Segment(NamedTuple):
    axis:  str   # "H" | "V"
    at:    int   # y of a horizontal, x of a vertical
    start: int
    end:   int

    def __str__(self):
        return f"{self.axis} {self.at} {self.start} {self.end}"


class Corner(NamedTuple):
    x:     int
    y:     int
    shape: CornerShape


class Crossing(NamedTuple):
    x:          int
    y:          int
    vertical:   int   # segment id, drawn over
    horizontal: int   # segment id, drawn under


@dataclass(frozen=True)
class ReducedDiagram:
    fence:              FenceDiagram
    segments:           tuple[Segment, ...]
    corners:            tuple[Corner, ...]
    crossings:          tuple[Crossing, ...]
    trivalent_vertices: tuple[tuple[int, int], ...]
    component_count:    int

    @property
    def cusps(self) -> tuple[Corner, ...]:
        return tuple(c for c in self.corners if c.shape.is_cusp)

    @property
    def is_empty(self) -> bool:
        return not self.segments


def rectilinear_features(horizontals: list[Segment], verticals: list[Segment]):
    """Corners, crossings and trivalent vertices of axis-parallel segments.

    Horizontals are indexed first, verticals after them, in the order given.
    """
    spans = {v.at: (min(v.start, v.end), max(v.start, v.end)) for v in verticals}
    corners, crossings, vertices = [], [], []

    for h in horizontals:
        left, right = min(h.start, h.end), max(h.start, h.end)
        for x, west in ((left, True), (right, False)):
            top, bottom = spans[x]
            south = bottom > h.at
            if west:
                shape = CornerShape.LT if south else CornerShape.LB
            else:
                shape = CornerShape.RT if south else CornerShape.RB
            corners.append(Corner(x, h.at, shape))
        vertices.extend((x, h.at) for x, (top, bottom) in spans.items()
                        if left < x < right and h.at in (top, bottom))

    for vid, v in enumerate(verticals, start=len(horizontals)):
        top, bottom = spans[v.at]
        for hid, h in enumerate(horizontals):
            left, right = min(h.start, h.end), max(h.start, h.end)
            if top < h.at < bottom and left < v.at < right:
                crossings.append(Crossing(v.at, h.at, vid, hid))

    return (tuple(sorted(corners)), tuple(sorted(crossings)), tuple(sorted(vertices)))


def _check_connected(f: FenceDiagram) -> None:
    if not nx.is_connected(band_graph(f)):
        raise NotConnected(f"{f} has more than one connected piece")


def trace_diagram(f: FenceDiagram) -> ReducedDiagram:
    """Draw f with each line cut back to its outermost band ends; no deflations."""
    _check_connected(f)
    horizontals = []
    for y in range(1, f.strands + 1):
        xs = [t + 1 for t in f.attachments(y)]
        if len(xs) >= 2:
            horizontals.append(Segment("H", y, xs[0], xs[-1]))
    verticals = [Segment("V", t + 1, band.lower, band.upper) for t, band in enumerate(f.word)]
    corners, crossings, vertices = rectilinear_features(horizontals, verticals)

    graph = nx.Graph()
    graph.add_nodes_from(range(len(horizontals) + len(verticals)))
    row = {h.at: i for i, h in enumerate(horizontals)}
    for vid, band in enumerate(f.word, start=len(horizontals)):
        graph.add_edges_from((vid, row[y]) for y in (band.lower, band.upper) if y in row)

    return ReducedDiagram(
        fence=f,
        segments=tuple(horizontals + verticals),
        corners=corners,
        crossings=crossings,
        trivalent_vertices=vertices,
        component_count=nx.number_connected_components(graph),
    )


def deflation_sites(f: FenceDiagram) -> list[int]:
    """Lines k where deflate(f, k) applies, in word order of their (k, k+1) band."""
    sites = []
    for band in f.word:
        k = band.lower
        if band.upper == k + 1 and k not in sites and deflatable(f, k):
            sites.append(k)
    return sites


def leaf_lines(f: FenceDiagram) -> list[int]:
    return [line for line in range(1, f.strands + 1) if len(f.attachments(line)) == 1]


def retract_leaf(f: FenceDiagram, line: int) -> FenceDiagram:
    """Drop a line carrying a single band end, together with that band."""
    ends = f.attachments(line)
    if len(ends) != 1:
        raise NotApplicable(f"line {line} of {f} carries {len(ends)} band ends, not one")

    def shift(k: int) -> int:
        return k - 1 if k > line else k

    word = [Band(shift(b.lower), shift(b.upper)) for i, b in enumerate(f.word) if i != ends[0]]
    return f.replace(word, strands=f.strands - 1)


def reduction_step(f: FenceDiagram, rightmost: bool = False) -> FenceDiagram | None:
    """One deflation (leftmost band first) or, failing that, one leaf retraction."""
    if sites := deflation_sites(f):
        return deflate(f, sites[-1] if rightmost else sites[0])
    if leaves := leaf_lines(f):
        return retract_leaf(f, leaves[0])
    return None


def fully_deflate(f: FenceDiagram, rightmost: bool = False) -> FenceDiagram:
    _check_connected(f)
    while (step := reduction_step(f, rightmost)) is not None:
        logger.debug("reduce %s -> %s", f, step)
        f = step
    return f


def reduce(f: FenceDiagram) -> ReducedDiagram:
    return trace_diagram(fully_deflate(f))
