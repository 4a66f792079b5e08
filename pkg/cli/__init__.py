from .formats import parse_fence, parse_front, serialize_fence, serialize_front
from .render import render_ascii, render_svg

__all__ = [
    "parse_fence", "parse_front", "serialize_fence", "serialize_front",
    "render_ascii", "render_svg",
]
