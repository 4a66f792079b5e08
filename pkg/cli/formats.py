"""
cli/formats.py
--------------
Line-based text formats. `#` starts a comment, blank lines are ignored.

    fence 1                 front 1
    strands 2               segments
    bands 1-2 1-2           H 1 1 2
                            V 2 1 2
                            ...
"""

import re
from typing import Iterator

from core import Band, FenceDiagram
from core.errors import ParseError, RangeError
from legendrian import RectilinearFront, Segment

BAND_TOKEN = re.compile(r"(\d+)-(\d+)")
FENCE_VERSION = "1"
FRONT_VERSION = "1"


def _significant(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield number, line


def _tokens(line: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with their 1-based columns."""
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def _expect(lines, keyword: str, arity: int, last_line: int) -> tuple[int, list[tuple[int, str]]]:
    try:
        number, line = next(lines)
    except StopIteration:
        raise ParseError(f"missing `{keyword}` line", last_line + 1) from None
    tokens = _tokens(line)
    if tokens[0][1] != keyword:
        raise ParseError(f"expected `{keyword}`, got `{tokens[0][1]}`", number, tokens[0][0])
    if arity >= 0 and len(tokens) != arity + 1:
        column = tokens[-1][0] if tokens else 1
        raise ParseError(f"`{keyword}` takes {arity} value(s), got {len(tokens) - 1}", number, column)
    return number, tokens[1:]


def _integer(token: tuple[int, str], number: int) -> int:
    column, text = token
    if not text.isdigit():
        raise ParseError(f"expected a non-negative integer, got `{text}`", number, column)
    return int(text)


def _no_trailing(lines) -> None:
    extra = next(lines, None)
    if extra is not None:
        number, line = extra
        raise ParseError("unexpected content after the last section", number, _tokens(line)[0][0])


def parse_fence(text: str) -> FenceDiagram:
    lines = _significant(text)
    number, (version,) = _expect(lines, "fence", 1, 0)
    if version[1] != FENCE_VERSION:
        raise ParseError(f"unsupported fence format version `{version[1]}`", number, version[0])
    number, (count,) = _expect(lines, "strands", 1, number)
    strands = _integer(count, number)
    if strands < 1:
        raise RangeError(f"line {number}: a fence diagram needs at least one line")
    number, tokens = _expect(lines, "bands", -1, number)

    word = []
    for column, text in tokens:
        m = BAND_TOKEN.fullmatch(text)
        if m is None:
            raise ParseError(f"bands are written i-j, got `{text}`", number, column)
        i, j = int(m.group(1)), int(m.group(2))
        if not 1 <= i < j <= strands:
            raise RangeError(f"line {number}, column {column}: band {text} needs 1 <= i < j <= {strands}")
        word.append(Band(i, j))
    _no_trailing(lines)
    return FenceDiagram(strands, tuple(word))


def serialize_fence(f: FenceDiagram) -> str:
    bands = "".join(f" {band}" for band in f.word)
    return f"fence {FENCE_VERSION}\nstrands {f.strands}\nbands{bands}\n"


def parse_front(text: str) -> RectilinearFront:
    lines = _significant(text)
    number, (version,) = _expect(lines, "front", 1, 0)
    if version[1] != FRONT_VERSION:
        raise ParseError(f"unsupported front format version `{version[1]}`", number, version[0])
    _expect(lines, "segments", 0, number)

    segments = []
    for number, line in lines:
        tokens = _tokens(line)
        axis = tokens[0][1]
        if axis not in ("H", "V"):
            raise ParseError(f"segments start with H or V, got `{axis}`", number, tokens[0][0])
        if len(tokens) != 4:
            raise ParseError(f"a segment is `{axis}` and three integers", number, tokens[-1][0])
        at, start, end = (_integer(token, number) for token in tokens[1:])
        segments.append(Segment(axis, at, start, end))
    return RectilinearFront(tuple(segments))


def serialize_front(w: RectilinearFront) -> str:
    body = "".join(f"{s}\n" for s in w.segments)
    return f"front {FRONT_VERSION}\nsegments\n{body}"
