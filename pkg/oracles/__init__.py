from .bracket import DEFAULT_CROSSING_BOUND, LOOP_VALUE, crossing_bound, kauffman_bracket
from .gate import GateReport, check_vector, compare_diagrams, consistency_gate
from .laurent import A, LaurentPolynomial
from .linking import linking_number

__all__ = [
    "DEFAULT_CROSSING_BOUND", "LOOP_VALUE", "crossing_bound", "kauffman_bracket",
    "GateReport", "check_vector", "compare_diagrams", "consistency_gate",
    "A", "LaurentPolynomial", "linking_number",
]
