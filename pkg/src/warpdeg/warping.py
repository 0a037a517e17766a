"""
Warping crossing points and warping degrees of based link diagrams.

The warping degree of a based diagram splits into a self part, which
depends only on each component's base point, and a linking part, which
depends only on the component order.  The minima are therefore taken
independently: per-component minima over base positions, and a minimum of
the linking part over all orders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from .diagram import BaseSequence, DiagramError, LinkDiagram, orient, reverse_all

__all__ = [
    "MAX_R",
    "TooManyComponents",
    "WarpingPoint",
    "WarpingReport",
    "warping_points",
    "self_warping",
    "self_warping_profile",
    "under_matrix",
    "ld_of_order",
    "d_a",
    "d_min",
    "ld_min",
    "d_unoriented",
    "d_pair",
    "sr",
    "is_monotone",
    "is_stacked",
    "is_stacked_diagram",
    "is_self_crossing_diagram",
]

MAX_R = 8


class TooManyComponents(DiagramError):
    pass


class WarpingPoint(NamedTuple):
    crossing: int
    kind: str  # "self" or "between"
    components: tuple  # (i,) for self, (earlier, later) for between


@dataclass(frozen=True)
class WarpingReport:
    base: BaseSequence
    self_counts: tuple  # indexed by component
    pair_counts: dict = field(default_factory=dict)  # (i, j), i before j in the order

    @property
    def ld(self) -> int:
        return sum(self.pair_counts.values())

    @property
    def d(self) -> int:
        return sum(self.self_counts) + self.ld


def _check_r(D: LinkDiagram, max_r: int) -> None:
    if D.r > max_r:
        raise TooManyComponents(
            f"{D.r} components exceed the order-enumeration cap of {max_r}; raise max_r to override"
        )


def _self_warping_set(D: LinkDiagram, i: int, pos: int) -> list:
    word = D.components[i]
    n = len(word)
    own = set(D.self_crossings(i))
    seen, out = set(), []
    for k in range(n):
        p = word[(pos + k) % n]
        if p.crossing not in own or p.crossing in seen:
            continue
        seen.add(p.crossing)
        if not p.over:
            out.append(p.crossing)
    return out


def warping_points(D: LinkDiagram, a: BaseSequence) -> set:
    a.check(D)
    rank = {comp: k for k, comp in enumerate(a.order)}
    pts = set()
    for i in range(D.r):
        for cid in _self_warping_set(D, i, a.positions[i]):
            pts.add(WarpingPoint(cid, "self", (i,)))
    for cid, (o, u) in D.sites.items():
        if o.component != u.component and rank[u.component] < rank[o.component]:
            pts.add(WarpingPoint(cid, "between", (u.component, o.component)))
    return pts


def self_warping(D: LinkDiagram, i: int, pos: int) -> int:
    return len(_self_warping_set(D, i, pos))


def self_warping_profile(D: LinkDiagram, i: int) -> list:
    """d(D^i) from every base position on component i's full word."""
    n = len(D.components[i])
    return [self_warping(D, i, pos) for pos in range(max(n, 1))]


def under_matrix(D: LinkDiagram) -> list:
    """m[i][j] = number of crossings of components i and j where i goes under (i != j)."""
    m = [[0] * D.r for _ in range(D.r)]
    for o, u in D.sites.values():
        if o.component != u.component:
            m[u.component][o.component] += 1
    return m


def ld_of_order(m, order) -> int:
    return sum(m[order[x]][order[y]] for x in range(len(order)) for y in range(x + 1, len(order)))


def d_a(D: LinkDiagram, a: BaseSequence) -> WarpingReport:
    a.check(D)
    selfs = tuple(self_warping(D, i, a.positions[i]) for i in range(D.r))
    m = under_matrix(D)
    pairs = {(a.order[x], a.order[y]): m[a.order[x]][a.order[y]]
             for x in range(D.r) for y in range(x + 1, D.r)}
    return WarpingReport(a, selfs, pairs)


def ld_min(D: LinkDiagram, max_r: int = MAX_R) -> tuple:
    """(ld(D), lexicographically first minimizing order)."""
    _check_r(D, max_r)
    m = under_matrix(D)
    best = None
    for order in itertools.permutations(range(D.r)):
        v = ld_of_order(m, order)
        if best is None or v < best[0]:
            best = (v, order)
    return best


def _min_positions(D: LinkDiagram) -> tuple:
    vals, pos = [], []
    for i in range(D.r):
        prof = self_warping_profile(D, i)
        lo = min(prof)
        vals.append(lo)
        pos.append(prof.index(lo))
    return vals, tuple(pos)


def d_min(D: LinkDiagram, max_r: int = MAX_R) -> tuple:
    """(d(D), witness BaseSequence) with the lexicographically smallest witness."""
    vals, pos = _min_positions(D)
    ld, order = ld_min(D, max_r)
    return sum(vals) + ld, BaseSequence(order, pos)


def component_d(D: LinkDiagram) -> list:
    """Per-component warping degree d(D^i) of each component as a knot diagram."""
    return _min_positions(D)[0]


def d_pair(D: LinkDiagram, max_r: int = MAX_R) -> tuple:
    """(d(D), d(-D))."""
    return d_min(D, max_r)[0], d_min(reverse_all(D), max_r)[0]


def d_unoriented(D: LinkDiagram, max_r: int = MAX_R) -> tuple:
    """(d(|D|), orientation flips attaining it), over all 2^r orientations."""
    _check_r(D, max_r)
    best = None
    for flips in itertools.product((False, True), repeat=D.r):
        v = d_min(orient(D, flips), max_r)[0]
        if best is None or v < best[0]:
            best = (v, flips)
    return best


def sr(D: LinkDiagram) -> int:
    return sum(1 for i in range(D.r) if D.self_crossings(i))


def is_monotone(D: LinkDiagram, a: BaseSequence) -> bool:
    return not warping_points(D, a)


def is_stacked(D: LinkDiagram, a: BaseSequence) -> bool:
    return d_a(D, a).ld == 0


def is_stacked_diagram(D: LinkDiagram, max_r: int = MAX_R) -> bool:
    return ld_min(D, max_r)[0] == 0


def is_self_crossing_diagram(D: LinkDiagram) -> bool:
    return sr(D) == D.r
