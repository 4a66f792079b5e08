"""
legendrian/invariants.py
------------------------
Thurston-Bennequin invariant and rotation number of an annulus fence
diagram, read off its reduced, cusped drawing.
"""

import logging
from dataclasses import dataclass

from core import FenceDiagram, is_quasipositive_annulus
from core.errors import NotAnnulus

from .front import closed_walk
from .reduction import reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LegendrianInvariants:
    tb:      int
    rot:     int
    rot_abs: int
    p:       int   # positive crossings
    n:       int   # negative crossings
    r_c:     int   # right cusps
    d_c:     int   # downward cusps
    u_c:     int   # upward cusps

    def as_dict(self) -> dict[str, int]:
        return {
            "tb": self.tb, "rot": self.rot, "rot_abs": self.rot_abs,
            "p": self.p, "n": self.n, "r_c": self.r_c, "d_c": self.d_c, "u_c": self.u_c,
        }


def legendrian_invariants(f: FenceDiagram, reverse: bool = False) -> LegendrianInvariants:
    if not is_quasipositive_annulus(f):
        raise NotAnnulus(f"{f} is not a quasipositive annulus")
    r = reduce(f)
    walk = closed_walk(r.fence)

    east  = {s.at: 1 if s.end > s.start else -1 for s in walk if s.axis == "H"}
    north = {s.at: 1 if s.end < s.start else -1 for s in walk if s.axis == "V"}

    # vertical over horizontal, y measured upward
    signs = [-north[c.x] * east[c.y] for c in r.crossings]
    p, n = signs.count(1), signs.count(-1)

    r_c = sum(1 for c in r.cusps if c.shape == "RB")
    d_c = sum(1 for c in r.cusps if north[c.x] < 0)
    u_c = len(r.cusps) - d_c
    if reverse:
        d_c, u_c = u_c, d_c

    rot = (d_c - u_c) // 2
    inv = LegendrianInvariants(tb=p - n - r_c, rot=rot, rot_abs=abs(rot),
                               p=p, n=n, r_c=r_c, d_c=d_c, u_c=u_c)
    logger.debug("invariants of %s: %s", f, inv)
    return inv
