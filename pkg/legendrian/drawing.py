"""Drawing instructions for a reduced diagram, consumed by the cli renderers."""

from typing import NamedTuple, Optional

from .reduction import CornerShape, ReducedDiagram

# half-width of the break cut into a line where a band passes in front of it
CROSSING_GAP = 0.25

Point = tuple[float, float]


class Stroke(NamedTuple):
    kind:   str                 # "edge" | "corner" | "cusp" | "vertex"
    points: tuple[Point, ...]
    shape:  Optional[CornerShape] = None


def cusped_render_data(r: ReducedDiagram, cusped: bool = True) -> tuple[Stroke, ...]:
    strokes = []
    over = {}
    for c in r.crossings:
        over.setdefault(c.y, []).append(c.x)

    for s in r.segments:
        if s.axis == "V":
            strokes.append(Stroke("edge", ((s.at, s.start), (s.at, s.end))))
            continue
        left, right = sorted((s.start, s.end))
        cuts = [left]
        for x in sorted(over.get(s.at, [])):
            cuts += [x - CROSSING_GAP, x + CROSSING_GAP]
        cuts.append(right)
        strokes.extend(
            Stroke("edge", ((a, s.at), (b, s.at))) for a, b in zip(cuts[::2], cuts[1::2])
        )

    for c in r.corners:
        kind = "cusp" if cusped and c.shape.is_cusp else "corner"
        strokes.append(Stroke(kind, ((c.x, c.y),), c.shape))
    strokes.extend(Stroke("vertex", ((x, y),)) for x, y in r.trivalent_vertices)
    return tuple(strokes)
