from .diagram import Band, BraidWord, FenceDiagram, Letter, SurfaceSummary
from .errors import (
    BadSplit, BadTarget, FenceError, InvalidFront, NotAnnulus, NotApplicable,
    NotConnected, ParseError, RangeError, TooLarge,
)
from .topology import (
    ClosureTrace, band_graph, braid_permutation, closure_permutation, count_cycles,
    expand_band, expand_band_word, is_quasipositive_annulus, surface_summary,
    trace_closure,
)

__all__ = [
    "Band", "BraidWord", "FenceDiagram", "Letter", "SurfaceSummary",
    "FenceError", "RangeError", "ParseError", "NotApplicable", "BadTarget",
    "BadSplit", "NotConnected", "NotAnnulus", "InvalidFront", "TooLarge",
    "ClosureTrace", "band_graph", "braid_permutation", "closure_permutation",
    "count_cycles", "expand_band", "expand_band_word", "is_quasipositive_annulus",
    "surface_summary", "trace_closure",
]
