from .strand_scan import StrandScan
from .classify_state import ClassifyState, cycle_count

__all__ = ["StrandScan", "ClassifyState", "cycle_count"]
