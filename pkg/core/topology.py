"""
core/topology.py
----------------
Braid expansion of band words and the bookkeeping of the disk-and-band
surface: closure permutation, boundary components, connectivity and
Euler characteristic.
"""

from dataclasses import dataclass

import networkx as nx
from sympy.combinatorics import Permutation

from .diagram import BraidWord, FenceDiagram, Letter, SurfaceSummary


def expand_band(lower: int, upper: int) -> list[Letter]:
    conjugator = [Letter(k, 1) for k in range(lower, upper - 1)]
    inverse    = [Letter(k, -1) for k in reversed(range(lower, upper - 1))]
    return conjugator + [Letter(upper - 1, 1)] + inverse


def expand_band_word(f: FenceDiagram) -> BraidWord:
    letters = []
    for band in f.word:
        letters.extend(expand_band(band.lower, band.upper))
    return BraidWord(f.strands, tuple(letters))


def _identity(size: int) -> Permutation:
    return Permutation(list(range(size)))


def _images(perm: Permutation) -> tuple[int, ...]:
    return tuple(i + 1 for i in perm.array_form)


def closure_permutation(f: FenceDiagram) -> tuple[int, ...]:
    """Images of lines 1..b; the leftmost band acts first."""
    perm = _identity(f.strands)
    for band in f.word:
        perm = perm * Permutation(band.lower - 1, band.upper - 1, size=f.strands)
    return _images(perm)


def braid_permutation(w: BraidWord) -> tuple[int, ...]:
    perm = _identity(w.strands)
    for letter in w.letters:
        perm = perm * Permutation(letter.index - 1, letter.index, size=w.strands)
    return _images(perm)


def count_cycles(images: tuple[int, ...]) -> int:
    return Permutation([i - 1 for i in images]).cycles


def band_graph(f: FenceDiagram) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(1, f.strands + 1))
    graph.add_edges_from((b.lower, b.upper, t) for t, b in enumerate(f.word))
    return graph


def surface_summary(f: FenceDiagram) -> SurfaceSummary:
    return SurfaceSummary(
        euler_characteristic=f.strands - len(f.word),
        boundary_components=count_cycles(closure_permutation(f)),
        connected=nx.is_connected(band_graph(f)),
    )


def is_quasipositive_annulus(f: FenceDiagram) -> bool:
    s = surface_summary(f)
    return s.connected and s.euler_characteristic == 0 and s.boundary_components == 2


# ── Strand tracing through the closed braid ──────────────────────────────

@dataclass(frozen=True)
class ClosureTrace:
    component: tuple[int, ...]                 # component id per strand (strand = start position - 1)
    crossings: tuple[tuple[int, int, int], ...]  # (strand, strand, sign) per letter

    @property
    def component_count(self) -> int:
        return len(set(self.component))


def trace_closure(w: BraidWord) -> ClosureTrace:
    at = list(range(w.strands))    # at[p] = strand currently at position p
    crossings = []
    for letter in w.letters:
        p = letter.index - 1
        crossings.append((at[p], at[p + 1], letter.sign))
        at[p], at[p + 1] = at[p + 1], at[p]

    # the strand ending at position p continues as the strand starting there
    follow = nx.DiGraph()
    follow.add_nodes_from(range(w.strands))
    follow.add_edges_from((at[p], p) for p in range(w.strands))
    component = [0] * w.strands
    for cid, cycle in enumerate(nx.weakly_connected_components(follow)):
        for strand in cycle:
            component[strand] = cid
    return ClosureTrace(tuple(component), tuple(crossings))
