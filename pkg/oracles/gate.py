"""
oracles/gate.py
---------------
Before/after comparison of everything a surface isotopy must preserve.
Used to accept or reject move encodings.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

from core import FenceDiagram, expand_band_word, is_quasipositive_annulus, surface_summary
from moves import MoveInstance, apply_move

from .bracket import crossing_bound, kauffman_bracket
from .linking import linking_number


@dataclass(frozen=True)
class GateReport:
    passed: bool
    check:  Optional[str] = None   # first failing check
    before: Any = None
    after:  Any = None

    def __str__(self):
        if self.passed:
            return "gate=pass"
        return f"gate=fail check={self.check} before={self.before} after={self.after}"


@lru_cache(maxsize=8192)
def check_vector(f: FenceDiagram, bound: int) -> tuple[tuple[str, Any], ...]:
    """Named isotopy invariants of f; the bracket is None past the crossing bound."""
    s = surface_summary(f)
    w = expand_band_word(f)
    return (
        ("chi", s.euler_characteristic),
        ("components", s.boundary_components),
        ("connected", s.connected),
        ("bracket", kauffman_bracket(w, normalize=True, bound=bound) if len(w) <= bound else None),
        ("lk", linking_number(f) if is_quasipositive_annulus(f) else None),
    )


def compare_diagrams(before: FenceDiagram, after: FenceDiagram,
                     bound: int | None = None) -> GateReport:
    bound = crossing_bound() if bound is None else bound
    for (name, x), (_, y) in zip(check_vector(before, bound), check_vector(after, bound)):
        # out-of-bound brackets are skipped, not compared
        if name == "bracket" and (x is None or y is None):
            continue
        if x != y:
            return GateReport(False, name, x, y)
    return GateReport(True)


def consistency_gate(f: FenceDiagram, m: MoveInstance, bound: int | None = None) -> GateReport:
    return compare_diagrams(f, apply_move(f, m), bound)
