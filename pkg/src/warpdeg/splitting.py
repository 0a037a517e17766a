"""
Certified interval bounds for splitting numbers of a diagram.

Lower bounds come from linking numbers: a crossing change alters exactly one
pairwise linking number by one, and a split link has zero linking across the
split.  Upper bounds are explicit sets of crossings; changing them gives a
diagram that passes a structural test (stacked, or one side of a
bipartition lying entirely over the other).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .diagram import DiagramError, LinkDiagram, change_crossings
from .verify import VerificationReport, linking_number
from .warping import MAX_R, d_unoriented, is_stacked_diagram, ld_min

__all__ = [
    "BoundInterval",
    "lsplit_bounds",
    "split_bounds_partial",
    "split_bounds",
    "bipartitions",
    "is_bipartition_split",
    "chain_check",
]

EXHAUSTIVE_LC = 12


@dataclass(frozen=True)
class BoundInterval:
    lower: int
    upper: int
    lower_certificate: str
    upper_certificate: tuple  # crossing ids to change

    def __post_init__(self):
        assert 0 <= self.lower <= self.upper, (self.lower, self.upper)

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact,
                "lower_certificate": self.lower_certificate,
                "upper_certificate": list(self.upper_certificate)}


def _need_link(D: LinkDiagram) -> None:
    if D.r < 2:
        raise DiagramError("splitting numbers need at least two components")


def bipartitions(r: int):
    """Nonempty proper splits (A, B) of range(r), each listed once (0 in A)."""
    for mask in range(1, 2 ** (r - 1)):
        B = tuple(i for i in range(1, r) if mask >> (i - 1) & 1)
        A = tuple(i for i in range(r) if i not in B)
        yield A, B


def _across(D: LinkDiagram, A) -> tuple:
    """Crossings between A and its complement: (A under, A over)."""
    A = set(A)
    under, over = [], []
    for cid, (o, u) in D.sites.items():
        if (o.component in A) != (u.component in A):
            (under if u.component in A else over).append(cid)
    return under, over


def is_bipartition_split(D: LinkDiagram) -> bool:
    return any(not u or not o for A, _ in bipartitions(D.r) for u, o in [_across(D, A)])


def _linking_lower(D: LinkDiagram, pairs) -> int:
    if not D.linking_consistent:
        return 0
    total = sum((abs(linking_number(D, i, j)) for i, j in pairs), Fraction(0))
    return int(total)


def _exhaustive_upper(D: LinkDiagram, upper: int, test) -> tuple | None:
    """Smallest set of non-self crossings below ``upper`` whose change passes ``test``."""
    pool = [cid for cid in D.crossings if not D.is_self(cid)]
    if len(pool) > EXHAUSTIVE_LC:
        return None
    for size in range(upper):
        for subset in itertools.combinations(pool, size):
            if test(change_crossings(D, subset)):
                return subset
    return None


def lsplit_bounds(D: LinkDiagram, max_r: int = MAX_R, exhaustive: bool = True) -> BoundInterval:
    """Interval for the number of non-self changes making D completely splittable."""
    _need_link(D)
    ld, order = ld_min(D, max_r)
    rank = {c: k for k, c in enumerate(order)}
    cert = tuple(cid for cid, (o, u) in D.sites.items()
                 if o.component != u.component and rank[u.component] < rank[o.component])
    if exhaustive:
        better = _exhaustive_upper(D, ld, lambda E: is_stacked_diagram(E, max_r))
        if better is not None:
            cert = better
    lower = _linking_lower(D, itertools.combinations(range(D.r), 2))
    return BoundInterval(lower, len(cert), "sum of |Link| over all pairs", cert)


def split_bounds_partial(D: LinkDiagram, exhaustive: bool = True) -> BoundInterval:
    """Interval for the number of non-self changes making D splittable."""
    _need_link(D)
    best_up, best_lo = None, None
    for A, B in bipartitions(D.r):
        under, over = _across(D, A)
        cand = tuple(min(under, over, key=len))
        if best_up is None or len(cand) < len(best_up[0]):
            best_up = (cand, A, B)
        lo = _linking_lower(D, itertools.product(A, B))
        if best_lo is None or lo < best_lo[0]:
            best_lo = (lo, A, B)
    cert, A, B = best_up
    if exhaustive:
        better = _exhaustive_upper(D, len(cert), is_bipartition_split)
        if better is not None:
            cert = better
    lo, LA, LB = best_lo
    desc = f"min over bipartitions of cross |Link| (attained at {_fmt(LA)}|{_fmt(LB)})"
    return BoundInterval(lo, len(cert), desc, cert)


def _fmt(part) -> str:
    return "{" + ",".join(str(i + 1) for i in part) + "}"


def split_bounds(D: LinkDiagram, max_r: int = MAX_R) -> dict:
    """Intervals for Split, split, lSplit and lsplit.

    Self-crossing changes are never used by the upper certificates, so the
    Split/lSplit and split/lsplit pairs share their intervals.
    """
    partial = split_bounds_partial(D)
    complete = lsplit_bounds(D, max_r)
    return {"Split": partial, "split": complete, "lSplit": partial, "lsplit": complete}


def chain_check(D: LinkDiagram, max_r: int = MAX_R) -> VerificationReport:
    b = split_bounds(D, max_r)
    ld, _ = ld_min(D, max_r)
    du, _ = d_unoriented(D, max_r)
    links = [
        ("split<=lsplit", b["split"].lower <= b["lsplit"].upper),
        ("lsplit<=ld", b["lsplit"].lower <= ld),
        ("ld<=lc/2", 2 * ld <= D.lc),
        ("lc/2<=c/2", D.lc <= D.c),
        ("Split<=split", b["Split"].lower <= b["split"].upper),
    ]
    certs = [
        ("lsplit", is_stacked_diagram(change_crossings(D, b["lsplit"].upper_certificate), max_r)),
        ("lSplit", is_bipartition_split(change_crossings(D, b["lSplit"].upper_certificate))),
    ]
    ok = all(v for _, v in links + certs)
    return VerificationReport(
        "prop_7_1", b["split"].upper, du,
        witnesses={"chain": dict(links), "certificates": dict(certs), "ld": ld,
                   "intervals": {k: v.to_dict() for k, v in b.items()}},
        extra_ok=ok,
    )
