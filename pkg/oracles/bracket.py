"""
oracles/bracket.py
------------------
Kauffman bracket of a closed braid.

The state sum runs left to right over the letters as a transfer matrix:
each partial state is a perfect matching of the b top points and the b
current points, together with the A-exponent and the loops closed so far.
Equal partial states are merged, which keeps the sum far below 2^n terms.
Coefficients stay integers throughout.
"""

import logging
import os
from collections import Counter
from functools import cache

from core import BraidWord
from core.errors import RangeError, TooLarge

from .laurent import LaurentPolynomial

logger = logging.getLogger(__name__)

DEFAULT_CROSSING_BOUND = 16
LOOP_VALUE = LaurentPolynomial(((-2, -1), (2, -1)))   # -A^2 - A^-2


def crossing_bound() -> int:
    raw = os.environ.get("FENCE_CROSSING_BOUND")
    if raw is None:
        return DEFAULT_CROSSING_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise RangeError(f"FENCE_CROSSING_BOUND must be an integer, got {raw!r}") from None
    if bound < 0:
        raise RangeError(f"FENCE_CROSSING_BOUND must not be negative, got {bound}")
    return bound


@cache
def loop_power(k: int) -> LaurentPolynomial:
    if k == 0:
        return LaurentPolynomial.monomial(0)
    return loop_power(k - 1) * LOOP_VALUE


def _cup_cap(partner: tuple[int, ...], a: int, b: int) -> tuple[tuple[int, ...], int]:
    """Smooth current points a, b horizontally; returns (matching, closed loops)."""
    match = list(partner)
    u, v = match[a], match[b]
    closed = 0
    if u == b:
        closed = 1
    else:
        match[u], match[v] = v, u
    match[a], match[b] = b, a
    return tuple(match), closed


def _closure_loops(partner: tuple[int, ...], strands: int) -> int:
    seen = [False] * (2 * strands)
    loops = 0
    for start in range(2 * strands):
        if seen[start]:
            continue
        loops += 1
        p = start
        while not seen[p]:
            seen[p] = True
            q = partner[p]
            seen[q] = True
            p = q - strands if q >= strands else q + strands   # closure arc
    return loops


def kauffman_bracket(w: BraidWord, normalize: bool = False,
                     bound: int | None = None) -> LaurentPolynomial:
    """Bracket of the closure of w; normalize multiplies by (-A^3)^(-writhe)."""
    bound = crossing_bound() if bound is None else bound
    if len(w) > bound:
        raise TooLarge(f"{len(w)} crossings exceed the bound of {bound}")

    b = w.strands
    start = tuple([b + p for p in range(b)] + [p for p in range(b)])
    states = Counter({(start, 0, 0): 1})

    for letter in w.letters:
        a, c = b + letter.index - 1, b + letter.index
        step: Counter = Counter()
        for (partner, exp, loops), count in states.items():
            step[(partner, exp + letter.sign, loops)] += count
            smoothed, closed = _cup_cap(partner, a, c)
            step[(smoothed, exp - letter.sign, loops + closed)] += count
        states = step

    by_circles: Counter = Counter()
    for (partner, exp, loops), count in states.items():
        by_circles[(exp, loops + _closure_loops(partner, b))] += count

    shift, sign = 0, 1
    if normalize:
        shift, sign = -3 * w.writhe, (-1) ** (w.writhe % 2)
    totals: Counter = Counter()
    for (exp, circles), count in by_circles.items():
        for e, c in loop_power(circles - 1).terms:
            totals[exp + e + shift] += sign * count * c
    logger.debug("bracket over %d merged states for %s", len(states), w)
    return LaurentPolynomial(tuple(totals.items()))
