"""
search/bfs.py
-------------
Equivalence search between two fence diagrams: an invariant comparison
first, then a bidirectional breadth-first search over applicable moves.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from core import FenceDiagram, expand_band_word, is_quasipositive_annulus, surface_summary
from legendrian import legendrian_invariants
from moves import MoveInstance, applicable_moves, apply_move, inverse_move
from oracles import crossing_bound, kauffman_bracket

from .budget import DEFAULT_BUDGET, SearchBudget, SearchResult

logger = logging.getLogger(__name__)


def invariant_vector(f: FenceDiagram, bound: int | None = None) -> dict[str, Any]:
    """Move-invariant quantities; bracket is None beyond the crossing bound."""
    bound = crossing_bound() if bound is None else bound
    s = surface_summary(f)
    w = expand_band_word(f)
    vector = {
        "chi":        s.euler_characteristic,
        "components": s.boundary_components,
        "connected":  s.connected,
        "bracket":    kauffman_bracket(w, normalize=True, bound=bound) if len(w) <= bound else None,
    }
    if is_quasipositive_annulus(f):
        inv = legendrian_invariants(f)
        vector["tb"], vector["rot_abs"] = inv.tb, inv.rot_abs
    return vector


def distinguishing_invariant(a: FenceDiagram, b: FenceDiagram,
                             bound: int | None = None) -> Optional[str]:
    va, vb = invariant_vector(a, bound), invariant_vector(b, bound)
    for name, x in va.items():
        if name not in vb or x is None or vb[name] is None:
            continue
        if x != vb[name]:
            return name
    return None


@dataclass
class _Side:
    nodes:    dict[tuple, FenceDiagram]
    parents:  dict[tuple, Optional[tuple[tuple, MoveInstance]]]
    frontier: list[FenceDiagram] = field(default_factory=list)

    @classmethod
    def rooted(cls, f: FenceDiagram) -> "_Side":
        return cls({f.key: f}, {f.key: None}, [f])

    def moves_from_root(self, key: tuple) -> list[MoveInstance]:
        path = []
        while self.parents[key] is not None:
            key, m = self.parents[key]
            path.append(m)
        return path[::-1]

    def moves_to_root(self, key: tuple) -> list[MoveInstance]:
        path = []
        while self.parents[key] is not None:
            prev, m = self.parents[key]
            path.append(inverse_move(self.nodes[prev], m))
            key = prev
        return path


def bfs_equivalence(a: FenceDiagram, b: FenceDiagram,
                    budget: SearchBudget = DEFAULT_BUDGET) -> SearchResult:
    if a.key == b.key:
        return SearchResult.related(())
    witness = distinguishing_invariant(a, b)
    if witness is not None:
        logger.info("%s and %s differ in %s", a, b, witness)
        return SearchResult.not_related(witness)

    forward, backward = _Side.rooted(a), _Side.rooted(b)
    for depth in range(budget.max_steps):
        side, other = (forward, backward) if len(forward.frontier) <= len(backward.frontier) \
            else (backward, forward)
        if not side.frontier:
            break
        logger.debug("depth %d: expanding %d diagrams", depth, len(side.frontier))
        grown = []
        for f in sorted(side.frontier, key=lambda d: d.key):
            for m in applicable_moves(f):
                g = apply_move(f, m)
                if g.key in side.parents or not budget.admits(g):
                    continue
                side.nodes[g.key] = g
                side.parents[g.key] = (f.key, m)
                if g.key in other.parents:
                    path = forward.moves_from_root(g.key) + backward.moves_to_root(g.key)
                    return SearchResult.related(path, visited=len(forward.nodes) + len(backward.nodes))
                if len(forward.nodes) + len(backward.nodes) >= budget.max_visited:
                    return SearchResult.unknown(budget.max_visited)
                grown.append(g)
        side.frontier = grown
    return SearchResult.unknown(len(forward.nodes) + len(backward.nodes))
