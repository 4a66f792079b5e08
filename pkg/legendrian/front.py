"""
legendrian/front.py
-------------------
Closed rectilinear fronts: walking the reduced curve of an annulus and
building a fence diagram that approximates a given front.
"""

from dataclasses import dataclass

from core import Band, FenceDiagram
from core.errors import InvalidFront, NotAnnulus

from .reduction import ReducedDiagram, Segment, rectilinear_features, trace_diagram


def _head(s: Segment) -> tuple[int, int]:
    return (s.end, s.at) if s.axis == "H" else (s.at, s.end)


def _tail(s: Segment) -> tuple[int, int]:
    return (s.start, s.at) if s.axis == "H" else (s.at, s.start)


@dataclass(frozen=True)
class RectilinearFront:
    """Cyclic list of axis-parallel segments, each running from start to end."""
    segments: tuple[Segment, ...]

    @property
    def horizontals(self) -> list[Segment]:
        return [s for s in self.segments if s.axis == "H"]

    @property
    def verticals(self) -> list[Segment]:
        return [s for s in self.segments if s.axis == "V"]

    def validate(self) -> None:
        segs = self.segments
        if len(segs) < 4 or len(segs) % 2:
            raise InvalidFront(f"a closed front needs an even number of segments, at least 4; got {len(segs)}")
        for i, s in enumerate(segs):
            if s.axis not in ("H", "V"):
                raise InvalidFront(f"segment {i + 1}: axis must be H or V, got {s.axis!r}")
            if s.start == s.end:
                raise InvalidFront(f"segment {i + 1} ({s}) has zero length")
            nxt = segs[(i + 1) % len(segs)]
            if nxt.axis == s.axis:
                raise InvalidFront(f"segments {i + 1} and {i + 2} are both {s.axis}; corners must alternate")
            if _head(s) != _tail(nxt):
                raise InvalidFront(f"segment {i + 1} ends at {_head(s)} but the next starts at {_tail(nxt)}")
        heights = [s.at for s in self.horizontals]
        if len(set(heights)) != len(heights):
            raise InvalidFront(f"two horizontal segments share a height: {sorted(heights)}")
        abscissae = [s.at for s in self.verticals]
        if len(set(abscissae)) != len(abscissae):
            raise InvalidFront(f"two vertical segments share an abscissa: {sorted(abscissae)}")

    def ranked(self) -> "RectilinearFront":
        """The same curve with heights and abscissae replaced by their ranks."""
        ys = {y: r for r, y in enumerate(sorted(s.at for s in self.horizontals), start=1)}
        xs = {x: r for r, x in enumerate(sorted(s.at for s in self.verticals), start=1)}
        return RectilinearFront(tuple(
            Segment("H", ys[s.at], xs[s.start], xs[s.end]) if s.axis == "H"
            else Segment("V", xs[s.at], ys[s.start], ys[s.end])
            for s in self.segments
        ))

    def features(self):
        """(cusps, nodes, trivalent vertices) as coordinate sets."""
        corners, crossings, vertices = rectilinear_features(
            self.horizontals, sorted(self.verticals, key=lambda v: v.at)
        )
        cusps = {(c.x, c.y) for c in corners if c.shape.is_cusp}
        return cusps, {(c.x, c.y) for c in crossings}, set(vertices)

    def __str__(self):
        return " ".join(str(s) for s in self.segments)


def closed_walk(f: FenceDiagram) -> list[Segment]:
    """Oriented segments of a reduced annulus: line 1 first, run eastward."""
    ends = {y: [t + 1 for t in f.attachments(y)] for y in range(1, f.strands + 1)}
    if any(len(xs) != 2 for xs in ends.values()):
        raise NotAnnulus(f"{f} is not a single closed curve: every line needs exactly two band ends")

    start = (1, ends[1][0])
    y, x = start
    walk = []
    while True:
        a, b = ends[y]
        turn_at = b if x == a else a
        walk.append(Segment("H", y, x, turn_at))
        y_next = f.word[turn_at - 1].other_end(y)
        walk.append(Segment("V", turn_at, y, y_next))
        y, x = y_next, turn_at
        if (y, x) == start:
            break
    if len(walk) != 2 * f.strands:
        raise NotAnnulus(f"{f} draws more than one closed curve")
    return walk


def front_of(r: ReducedDiagram) -> RectilinearFront:
    return RectilinearFront(tuple(closed_walk(r.fence)))


def approximates(q: FenceDiagram, w: RectilinearFront) -> bool:
    traced = trace_diagram(q)
    cusps = {(c.x, c.y) for c in traced.cusps}
    nodes = {(c.x, c.y) for c in traced.crossings}
    return (cusps, nodes, set(traced.trivalent_vertices)) == w.ranked().features()


def fence_from_front(w: RectilinearFront) -> FenceDiagram:
    w.validate()
    ranked = w.ranked()
    verticals = sorted(ranked.verticals, key=lambda v: v.at)
    word = [Band(min(v.start, v.end), max(v.start, v.end)) for v in verticals]
    q = FenceDiagram(len(ranked.horizontals), tuple(word))
    if not approximates(q, w):
        raise InvalidFront(f"fence {q} does not reproduce the cusps and crossings of the front")
    return q
