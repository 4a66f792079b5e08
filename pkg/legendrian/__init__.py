from .drawing import CROSSING_GAP, Stroke, cusped_render_data
from .front import RectilinearFront, approximates, closed_walk, fence_from_front, front_of
from .invariants import LegendrianInvariants, legendrian_invariants
from .reduction import (
    Corner, CornerShape, Crossing, ReducedDiagram, Segment, deflation_sites, fully_deflate,
    leaf_lines, rectilinear_features, reduce, reduction_step, retract_leaf, trace_diagram,
)

__all__ = [
    "CROSSING_GAP", "Stroke", "cusped_render_data",
    "RectilinearFront", "approximates", "closed_walk", "fence_from_front", "front_of",
    "LegendrianInvariants", "legendrian_invariants",
    "Corner", "CornerShape", "Crossing", "ReducedDiagram", "Segment",
    "deflation_sites", "fully_deflate", "leaf_lines", "rectilinear_features", "reduce",
    "reduction_step", "retract_leaf", "trace_diagram",
]
