"""
moves/rewrite.py
----------------
The six fundamental moves as checked rewrite rules on band words, plus the
applicability enumerator used by the searches.
"""

from typing import Sequence

from core import Band, FenceDiagram
from core.errors import BadSplit, BadTarget, NotApplicable

from .instance import ENDS, FORMS, LOWER, UPPER, MoveInstance, MoveKind


# ── Slip ──────────────────────────────────────────────────────────────────

def commute(x: Band, y: Band) -> bool:
    disjoint = x.upper < y.lower or y.upper < x.lower
    nested   = x.lower < y.lower < y.upper < x.upper or y.lower < x.lower < x.upper < y.upper
    return disjoint or nested


def _pair(f: FenceDiagram, t: int) -> tuple[Band, Band]:
    if not 1 <= t < len(f.word):
        raise NotApplicable(f"position {t} has no right neighbour in a word of length {len(f.word)}")
    return f.word[t - 1], f.word[t]


def slip(f: FenceDiagram, t: int) -> FenceDiagram:
    x, y = _pair(f, t)
    if not commute(x, y):
        raise NotApplicable(f"bands {x} and {y} at {t} share an end or overlap")
    word = list(f.word)
    word[t - 1], word[t] = y, x
    return f.replace(word)


# ── Slide ─────────────────────────────────────────────────────────────────

def slide_form(x: Band, y: Band) -> tuple[str, int, int, int] | None:
    """Match (x, y) against F1=(r,s)(s,t) F2=(r,t)(r,s) F3=(s,t)(r,t); returns (form, r, s, t)."""
    if x.upper == y.lower:
        return "F1", x.lower, x.upper, y.upper
    if x.lower == y.lower and x.upper > y.upper:
        return "F2", x.lower, y.upper, x.upper
    if x.upper == y.upper and x.lower > y.lower:
        return "F3", y.lower, x.lower, x.upper
    return None


def slide_pair(form: str, r: int, s: int, t: int) -> tuple[Band, Band]:
    if form == "F1":
        return Band(r, s), Band(s, t)
    if form == "F2":
        return Band(r, t), Band(r, s)
    if form == "F3":
        return Band(s, t), Band(r, t)
    raise BadTarget(f"unknown slide form {form!r}")


def slide(f: FenceDiagram, t: int, target: str) -> FenceDiagram:
    x, y = _pair(f, t)
    match = slide_form(x, y)
    if match is None:
        raise NotApplicable(f"bands {x} {y} at {t} are not a slide pair")
    form, r, s, u = match
    if target not in FORMS:
        raise BadTarget(f"unknown slide form {target!r}")
    if target == form:
        raise BadTarget(f"pair at {t} already has form {form}")
    word = list(f.word)
    word[t - 1], word[t] = slide_pair(target, r, s, u)
    return f.replace(word)


# ── Inflation / deflation ─────────────────────────────────────────────────

def _cyclic_from(indices: list[int], start: int) -> list[int]:
    """Word indices read cyclically, starting with the first index >= start."""
    return [i for i in indices if i >= start] + [i for i in indices if i < start]


def inflate(f: FenceDiagram, k: int, t: int, split: Sequence[str]) -> FenceDiagram:
    """Split line k in two joined by a new band (k, k+1) inserted after position t."""
    if not 1 <= k <= f.strands:
        raise NotApplicable(f"line {k} does not exist")
    if not 0 <= t <= len(f.word):
        raise NotApplicable(f"insertion position {t} outside 0..{len(f.word)}")
    ends = f.attachments(k)
    split = tuple(split)
    if len(split) != len(ends) or any(side not in (UPPER, LOWER) for side in split):
        raise BadSplit(f"line {k} carries {len(ends)} band ends, split assigns {len(split)}")

    side = dict(zip(ends, split))
    order = [side[i] for i in _cyclic_from(ends, t)]
    lowers = order.count(LOWER)
    if order[:lowers] != [LOWER] * lowers:
        raise NotApplicable("lower band ends must come first going round from the new band")

    def shift(line: int) -> int:
        return line + 1 if line > k else line

    word = []
    for index, band in enumerate(f.word):
        lo, hi = shift(band.lower), shift(band.upper)
        if band.lower == k and side[index] == LOWER:
            lo = k + 1
        if band.upper == k and side[index] == LOWER:
            hi = k + 1
        word.append(Band(lo, hi))
    word.insert(t, Band(k, k + 1))
    return f.replace(word, strands=f.strands + 1)


def _deflation_band(f: FenceDiagram, k: int) -> int:
    if not 1 <= k < f.strands:
        raise NotApplicable(f"lines {k} and {k + 1} do not both exist")
    joins = [i for i, band in enumerate(f.word) if band == Band(k, k + 1)]
    if len(joins) != 1:
        raise NotApplicable(f"lines {k} and {k + 1} are joined by {len(joins)} bands, need exactly one")
    t0 = joins[0]
    ends = [i for i, band in enumerate(f.word) if i != t0 and (band.touches(k) or band.touches(k + 1))]
    lines = [k + 1 if f.word[i].touches(k + 1) else k for i in _cyclic_from(ends, t0 + 1)]
    below = lines.count(k + 1)
    if lines[:below] != [k + 1] * below:
        raise NotApplicable(f"band ends on lines {k} and {k + 1} are interleaved around the join")
    return t0


def deflatable(f: FenceDiagram, k: int) -> bool:
    try:
        _deflation_band(f, k)
    except NotApplicable:
        return False
    return True


def deflate(f: FenceDiagram, k: int) -> FenceDiagram:
    t0 = _deflation_band(f, k)

    def merge(line: int) -> int:
        return line if line <= k else line - 1

    word = [Band(merge(b.lower), merge(b.upper)) for i, b in enumerate(f.word) if i != t0]
    return f.replace(word, strands=f.strands - 1)


# ── Twirl / turn ──────────────────────────────────────────────────────────

def twirl(f: FenceDiagram, end: str) -> FenceDiagram:
    if not f.word:
        raise NotApplicable("twirl needs at least one band")
    if end == "front":
        return f.replace(f.word[1:] + f.word[:1])
    if end == "back":
        return f.replace(f.word[-1:] + f.word[:-1])
    raise NotApplicable(f"twirl end must be front or back, got {end!r}")


def turn(f: FenceDiagram) -> FenceDiagram:
    b = f.strands
    return f.replace(Band(b + 1 - band.upper, b + 1 - band.lower) for band in reversed(f.word))


# ── Dispatch ──────────────────────────────────────────────────────────────

def apply_move(f: FenceDiagram, m: MoveInstance) -> FenceDiagram:
    if m.kind is MoveKind.SLIP:
        return slip(f, m.at)
    if m.kind is MoveKind.SLIDE:
        return slide(f, m.at, m.target)
    if m.kind is MoveKind.INFLATE:
        return inflate(f, m.line, m.at, m.split or ())
    if m.kind is MoveKind.DEFLATE:
        return deflate(f, m.line)
    if m.kind is MoveKind.TWIRL:
        return twirl(f, m.end)
    if m.kind is MoveKind.TURN:
        return turn(f)
    raise NotApplicable(f"unknown move kind {m.kind}")


def apply_path(f: FenceDiagram, path: Sequence[MoveInstance]) -> FenceDiagram:
    for m in path:
        f = apply_move(f, m)
    return f


def inverse_move(f: FenceDiagram, m: MoveInstance) -> MoveInstance:
    """The move taking apply_move(f, m) back to f."""
    if m.kind in (MoveKind.SLIP, MoveKind.TURN):
        return m
    if m.kind is MoveKind.SLIDE:
        form = slide_form(*_pair(f, m.at))[0]
        return MoveInstance(MoveKind.SLIDE, at=m.at, target=form)
    if m.kind is MoveKind.TWIRL:
        return MoveInstance(MoveKind.TWIRL, end="back" if m.end == "front" else "front")
    if m.kind is MoveKind.INFLATE:
        return MoveInstance(MoveKind.DEFLATE, line=m.line)
    if m.kind is MoveKind.DEFLATE:
        k = m.line
        t0 = _deflation_band(f, k)
        split = tuple(
            UPPER if band.touches(k) else LOWER
            for i, band in enumerate(f.word)
            if i != t0 and (band.touches(k) or band.touches(k + 1))
        )
        return MoveInstance(MoveKind.INFLATE, line=k, at=t0, split=split)
    raise NotApplicable(f"unknown move kind {m.kind}")


# ── Enumeration ───────────────────────────────────────────────────────────

def inflation_moves(f: FenceDiagram) -> list[MoveInstance]:
    """Inflations next to an existing band end, lower ends a cyclic prefix."""
    moves = []
    for k in range(1, f.strands + 1):
        ends = f.attachments(k)
        positions = sorted({p for a in ends for p in (a, a + 1)}) if ends else [0]
        for t in positions:
            order = _cyclic_from(ends, t)
            for lowers in range(len(order) + 1):
                lowered = set(order[:lowers])
                split = tuple(LOWER if i in lowered else UPPER for i in ends)
                moves.append(MoveInstance(MoveKind.INFLATE, at=t, line=k, split=split))
    return moves


def applicable_moves(f: FenceDiagram) -> list[MoveInstance]:
    moves = []
    for t in range(1, len(f.word)):
        x, y = f.word[t - 1], f.word[t]
        if commute(x, y):
            moves.append(MoveInstance(MoveKind.SLIP, at=t))
        match = slide_form(x, y)
        if match is not None:
            moves.extend(
                MoveInstance(MoveKind.SLIDE, at=t, target=form)
                for form in FORMS if form != match[0]
            )
    moves.extend(inflation_moves(f))
    moves.extend(MoveInstance(MoveKind.DEFLATE, line=k) for k in range(1, f.strands) if deflatable(f, k))
    if f.word:
        moves.extend(MoveInstance(MoveKind.TWIRL, end=end) for end in ENDS)
    moves.append(MoveInstance(MoveKind.TURN))
    return moves
