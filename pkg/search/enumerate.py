from itertools import combinations, permutations, product
from typing import Callable, Iterator, Optional

import networkx as nx

from core import Band, FenceDiagram, band_graph, is_quasipositive_annulus


def is_connected(f: FenceDiagram) -> bool:
    return nx.is_connected(band_graph(f))


FILTERS: dict[str, Callable[[FenceDiagram], bool]] = {
    "connected": is_connected,
    "annulus":   is_quasipositive_annulus,
}


def enumerate_diagrams(strands: int, bands: int,
                       keep: Optional[Callable[[FenceDiagram], bool]] = None) -> Iterator[FenceDiagram]:
    """All band words of the given length, lexicographic in the band order."""
    alphabet = [Band(i, j) for i, j in combinations(range(1, strands + 1), 2)]
    for word in product(alphabet, repeat=bands):
        f = FenceDiagram(strands, word)
        if keep is None or keep(f):
            yield f


def cycle_diagrams(strands: int) -> Iterator[FenceDiagram]:
    """Every diagram whose band graph is a single cycle through all lines."""
    if strands < 2:
        return
    if strands == 2:
        yield FenceDiagram.of(2, (1, 2), (1, 2))
        return
    for middle in permutations(range(2, strands + 1)):
        if middle[0] > middle[-1]:
            continue   # same cycle read backwards
        tour = (1, *middle, 1)
        edges = [Band(min(u, v), max(u, v)) for u, v in zip(tour, tour[1:])]
        for word in permutations(edges):
            yield FenceDiagram(strands, word)
