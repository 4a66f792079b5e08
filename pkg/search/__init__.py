from .bfs import bfs_equivalence, distinguishing_invariant, invariant_vector
from .budget import (
    DEFAULT_BUDGET, NOT_RELATED, RELATED, UNKNOWN, SearchBudget, SearchResult,
)
from .classify import AnnulusClass, classify_annuli, scan_strands, strand_range
from .enumerate import FILTERS, cycle_diagrams, enumerate_diagrams, is_connected

__all__ = [
    "bfs_equivalence", "distinguishing_invariant", "invariant_vector",
    "DEFAULT_BUDGET", "NOT_RELATED", "RELATED", "UNKNOWN", "SearchBudget", "SearchResult",
    "AnnulusClass", "classify_annuli", "scan_strands", "strand_range",
    "FILTERS", "cycle_diagrams", "enumerate_diagrams", "is_connected",
]
