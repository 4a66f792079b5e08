"""
Composite moves: a new zigzag (inflation then slide), a height exchange
(inflation, slides, deflation) and a vertical exchange (a single slip).
Each returns the resulting diagram together with the primitive trace.
"""

import logging
from typing import Sequence

from core import FenceDiagram
from core.errors import NotApplicable

from .instance import FORMS, LOWER, UPPER, MoveInstance, MoveKind
from .rewrite import apply_move, slide_form

logger = logging.getLogger(__name__)

Trace = list[MoveInstance]


def _run(f: FenceDiagram, moves: Sequence[MoveInstance]) -> tuple[FenceDiagram, Trace]:
    trace = []
    for m in moves:
        f = apply_move(f, m)
        trace.append(m)
        logger.debug("macro step %s -> %s", m, f)
    return f, trace


def default_zigzag_split(f: FenceDiagram, k: int, t: int) -> tuple[str, ...]:
    """Lower only the first band end of line k met going round from position t."""
    ends = f.attachments(k)
    if not ends:
        return ()
    first = min((i for i in ends if i >= t), default=ends[0])
    return tuple(LOWER if i == first else UPPER for i in ends)


def macro_new_zigzag(f: FenceDiagram, k: int, t: int,
                     split: Sequence[str] | None = None) -> tuple[FenceDiagram, Trace]:
    if split is None:
        split = default_zigzag_split(f, k, t)
    grow = MoveInstance(MoveKind.INFLATE, at=t, line=k, split=tuple(split))
    inflated, trace = _run(f, [grow])

    # the new band sits at position t+1; slide it against a neighbour
    for at in (t + 1, t):
        if not 1 <= at < len(inflated):
            continue
        match = slide_form(inflated.word[at - 1], inflated.word[at])
        if match is None:
            continue
        target = next(form for form in FORMS if form != match[0])
        result, tail = _run(inflated, [MoveInstance(MoveKind.SLIDE, at=at, target=target)])
        return result, trace + tail
    raise NotApplicable(f"no slide next to the band inflated at line {k}, position {t}")


def macro_height_exchange(f: FenceDiagram, k: int, t: int, split: Sequence[str],
                          slides: Sequence[tuple[int, str]],
                          deflate_line: int) -> tuple[FenceDiagram, Trace]:
    """slides: (position, target form) pairs applied after the inflation."""
    moves = [MoveInstance(MoveKind.INFLATE, at=t, line=k, split=tuple(split))]
    moves += [MoveInstance(MoveKind.SLIDE, at=at, target=target) for at, target in slides]
    moves.append(MoveInstance(MoveKind.DEFLATE, line=deflate_line))
    return _run(f, moves)


def macro_vertical_exchange(f: FenceDiagram, t: int) -> tuple[FenceDiagram, Trace]:
    return _run(f, [MoveInstance(MoveKind.SLIP, at=t)])
